#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "polyop/bases.hpp"
#include "polyop/error.hpp"
#include "polyop/poly.hpp"
#include "polyop/realroot.hpp"

namespace polyop {

/// A linear functional given by its values on 1, x, x^2, ...; `fallback`
/// applies past the explicit list.
struct FunctionalSpec {
  std::vector<Rational> values;
  Rational fallback = 0;

  Rational at(std::size_t n) const { return n < values.size() ? values[n] : fallback; }
};

/// T[f] = alpha(f) P + beta(f) R.
struct RankTwo {
  FunctionalSpec alpha;
  FunctionalSpec beta;
  Poly p;
  Poly r;
};

/// T[B_n] = gamma_n B_n.
struct DiagonalInBasis {
  BasisSpec basis;
  SequenceSpec eigenvalues;
};

/// T[x^n] = images[n]; undefined beyond the list.
struct ExplicitImages {
  std::vector<Poly> images;
};

/// T = sum_k q[k] D^k.
struct FiniteDiffOp {
  std::vector<Poly> q;
};

using OperatorSpec = std::variant<RankTwo, DiagonalInBasis, ExplicitImages, FiniteDiffOp>;

/// T[x^0], ..., T[x^n].
inline std::vector<Poly> images(const OperatorSpec& spec, std::size_t n) {
  std::vector<Poly> out;
  out.reserve(n + 1);
  std::visit(
      [&](const auto& op) {
        using Op = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<Op, RankTwo>) {
          for (std::size_t k = 0; k <= n; ++k) out.push_back(op.p * op.alpha.at(k) + op.r * op.beta.at(k));
        } else if constexpr (std::is_same_v<Op, DiagonalInBasis>) {
          const auto basis = basis_prefix(op.basis, n);
          std::vector<Rational> gammas;
          gammas.reserve(n + 1);
          for (std::size_t k = 0; k <= n; ++k) gammas.push_back(sequence_at(op.eigenvalues, k));
          for (std::size_t k = 0; k <= n; ++k) {
            auto coords = expand_in_prefix(Poly::monomial(1, k), basis);
            for (std::size_t j = 0; j < coords.size(); ++j) coords[j] *= gammas[j];
            out.push_back(recombine(coords, basis));
          }
        } else if constexpr (std::is_same_v<Op, ExplicitImages>) {
          if (n >= op.images.size())
            throw Error(Errc::sequence_exhausted,
                        "operator defines " + std::to_string(op.images.size()) + " images, x^" + std::to_string(n) +
                            " requested",
                        n);
          out.assign(op.images.begin(), op.images.begin() + static_cast<std::ptrdiff_t>(n + 1));
        } else {
          for (std::size_t k = 0; k <= n; ++k) {
            Poly img;
            for (std::size_t j = 0; j < op.q.size() && j <= k; ++j)
              img += shift(op.q[j], k - j) * Rational(falling_factorial(k, j));
            out.push_back(std::move(img));
          }
        }
      },
      spec);
  return out;
}

inline Poly image(const OperatorSpec& spec, std::size_t n) {
  if (const auto* ex = std::get_if<ExplicitImages>(&spec)) {
    if (n >= ex->images.size()) return images(spec, n).back();  // raises
    return ex->images[n];
  }
  if (const auto* r2 = std::get_if<RankTwo>(&spec)) return r2->p * r2->alpha.at(n) + r2->r * r2->beta.at(n);
  return images(spec, n).back();
}

/// OperatorSpec is a std::variant, so an unqualified call also finds
/// std::apply by argument-dependent lookup; call it as polyop::apply.
inline Poly apply(const OperatorSpec& spec, const Poly& p) {
  if (p.is_zero()) return {};
  if (const auto* d = std::get_if<FiniteDiffOp>(&spec)) {
    Poly out;
    for (std::size_t k = 0; k < d->q.size(); ++k) out += d->q[k] * derivative(p, k);
    return out;
  }
  if (const auto* diag = std::get_if<DiagonalInBasis>(&spec)) {
    const auto basis = basis_prefix(diag->basis, p.degree().value());
    auto coords = expand_in_prefix(p, basis);
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] *= sequence_at(diag->eigenvalues, k);
    return recombine(coords, basis);
  }
  const auto imgs = images(spec, p.degree().value());
  Poly out;
  for (std::size_t n = 0; n < imgs.size(); ++n)
    if (p.coeff(n) != 0) out += imgs[n] * p.coeff(n);
  return out;
}

// ---------------------------------------------------------------------------
// Hyperbolicity preservation by sampling
// ---------------------------------------------------------------------------

enum class ImageVerdict { hyperbolic, nonzero_constant, zero, violation };

inline const char* to_string(ImageVerdict v) {
  switch (v) {
    case ImageVerdict::hyperbolic: return "hyperbolic";
    case ImageVerdict::nonzero_constant: return "nonzero constant";
    case ImageVerdict::zero: return "zero";
    case ImageVerdict::violation: return "NOT hyperbolic";
  }
  return "?";
}

struct PreserveItem {
  Poly input;
  Poly image;
  ImageVerdict verdict;
};

/// Outcome of pushing a corpus through an operator. A clean report means
/// no violation was found; it never certifies preservation.
struct PreserveReport {
  std::vector<PreserveItem> items;
  std::vector<std::size_t> violations;

  bool clean() const noexcept { return violations.empty(); }
  std::string summary() const {
    std::string s = "violations: " + std::to_string(violations.size()) + " of " + std::to_string(items.size());
    if (clean()) s += " (no violation found; sampling cannot certify preservation)";
    return s;
  }
};

inline ImageVerdict classify_image(const Poly& img) {
  if (img.is_zero()) return ImageVerdict::zero;
  if (img.degree() == Degree::of(0)) return ImageVerdict::nonzero_constant;
  return is_hyperbolic(img) == Hyperbolicity::hyperbolic ? ImageVerdict::hyperbolic : ImageVerdict::violation;
}

inline PreserveReport preserve_test(const OperatorSpec& spec, const std::vector<Poly>& corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (is_hyperbolic(corpus[i]) != Hyperbolicity::hyperbolic)
      throw Error(Errc::corpus_not_hyperbolic, "corpus item " + std::to_string(i) + " is not hyperbolic", i);

  PreserveReport report;
  report.items.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Poly img = apply(spec, corpus[i]);
    const ImageVerdict v = classify_image(img);
    if (v == ImageVerdict::violation) report.violations.push_back(i);
    report.items.push_back({corpus[i], std::move(img), v});
  }
  return report;
}

}  // namespace polyop
