#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "polyop/error.hpp"
#include "polyop/poly.hpp"

namespace polyop {

// ---------------------------------------------------------------------------
// Sequences (eigenvalues, scalings)
// ---------------------------------------------------------------------------

/// Finite list of values; indexing past the end is SequenceExhausted.
struct ExplicitList {
  std::vector<Rational> values;
};

/// Total sequence k -> f(k) for a polynomial f.
struct PolynomialInK {
  Poly f;
};

using SequenceSpec = std::variant<ExplicitList, PolynomialInK>;

inline Rational sequence_at(const SequenceSpec& seq, std::size_t k) {
  if (const auto* list = std::get_if<ExplicitList>(&seq)) {
    if (k >= list->values.size())
      throw Error(Errc::sequence_exhausted,
                  "sequence has " + std::to_string(list->values.size()) + " entries, index " + std::to_string(k) +
                      " requested",
                  k);
    return list->values[k];
  }
  return eval(std::get<PolynomialInK>(seq).f, Rational(static_cast<unsigned long>(k)));
}

// ---------------------------------------------------------------------------
// Bases
// ---------------------------------------------------------------------------

struct StandardBasis {};

/// q_k(x) = c_k (a x + b)^k with a != 0 and every c_k != 0.
struct AffineBasis {
  SequenceSpec c;
  Rational a;
  Rational b;
};

/// H_n^{(alpha)}(x) = (-alpha)^n exp(x^2/2alpha) D^n exp(-x^2/2alpha), alpha > 0.
struct GeneralizedHermiteBasis {
  Rational alpha;
};

/// Legendre polynomials normalized by P_n(1) = 1.
struct LegendreBasis {};

using BasisSpec = std::variant<StandardBasis, AffineBasis, GeneralizedHermiteBasis, LegendreBasis>;

/// E_0 = 1, E_n = E_{n-1}' - (x/alpha) E_{n-1}; then H_n = (-alpha)^n E_n.
/// This is the derivative definition unrolled: D[E exp(-x^2/2alpha)] =
/// (E' - x E / alpha) exp(-x^2/2alpha).
inline std::vector<Poly> generalized_hermite_prefix(const Rational& alpha, std::size_t n) {
  if (alpha <= 0) throw Error(Errc::bad_parameter, "generalized Hermite parameter must be positive");
  std::vector<Poly> out;
  out.reserve(n + 1);
  const Poly x_over_alpha = Poly::monomial(Rational(1) / alpha, 1);
  Poly e = Poly::constant(1);
  Rational scale = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      e = derivative(e) - x_over_alpha * e;
      scale *= -alpha;
    }
    out.push_back(e * scale);
  }
  return out;
}

inline Poly generalized_hermite(const Rational& alpha, std::size_t n) {
  return generalized_hermite_prefix(alpha, n).back();
}

/// B_0 ... B_n for the given basis.
inline std::vector<Poly> basis_prefix(const BasisSpec& spec, std::size_t n) {
  return std::visit(
      [n](const auto& b) -> std::vector<Poly> {
        using B = std::decay_t<decltype(b)>;
        std::vector<Poly> out;
        out.reserve(n + 1);
        if constexpr (std::is_same_v<B, StandardBasis>) {
          for (std::size_t k = 0; k <= n; ++k) out.push_back(Poly::monomial(1, k));
        } else if constexpr (std::is_same_v<B, AffineBasis>) {
          if (b.a == 0) throw Error(Errc::bad_parameter, "affine basis needs a != 0");
          const Poly lin{b.b, b.a};
          Poly power = Poly::constant(1);
          for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) power *= lin;
            const Rational ck = sequence_at(b.c, k);
            if (ck == 0) throw Error(Errc::bad_parameter, "affine scaling c_" + std::to_string(k) + " is zero", k);
            out.push_back(power * ck);
          }
        } else if constexpr (std::is_same_v<B, GeneralizedHermiteBasis>) {
          out = generalized_hermite_prefix(b.alpha, n);
        } else {
          // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
          out.push_back(Poly::constant(1));
          if (n >= 1) out.push_back(Poly::x());
          for (std::size_t k = 1; k < n; ++k) {
            Poly next = shift(out[k], 1) * Rational(2 * k + 1) - out[k - 1] * Rational(k);
            out.push_back(next / Rational(k + 1));
          }
        }
        return out;
      },
      spec);
}

inline Poly basis_poly(const BasisSpec& spec, std::size_t n) { return basis_prefix(spec, n).back(); }

/// Coordinates of p against a triangular basis prefix (deg B_k = k),
/// by back-substitution from the top degree.
inline std::vector<Rational> expand_in_prefix(const Poly& p, std::span<const Poly> basis) {
  if (p.is_zero()) return {};
  const std::size_t d = p.degree().value();
  if (basis.size() <= d) throw Error(Errc::sequence_exhausted, "basis prefix shorter than the degree", d);
  std::vector<Rational> coords(d + 1);
  Poly rest = p;
  for (std::size_t k = d + 1; k-- > 0;) {
    const Rational c = rest.coeff(k);
    if (c == 0) continue;
    coords[k] = c / basis[k].leading();
    rest -= basis[k] * coords[k];
  }
  return coords;
}

inline std::vector<Rational> expand_in_basis(const Poly& p, const BasisSpec& spec) {
  if (p.is_zero()) return {};
  const auto basis = basis_prefix(spec, p.degree().value());
  return expand_in_prefix(p, basis);
}

/// Sum of coords[k] * basis[k].
inline Poly recombine(std::span<const Rational> coords, std::span<const Poly> basis) {
  Poly out;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0) out += basis[k] * coords[k];
  return out;
}

/// Reversed Jensen polynomial g_k^*(x) = sum_j C(k,j) gamma_j x^{k-j}.
inline Poly jensen_reversed(const SequenceSpec& gammas, std::size_t k) {
  std::vector<Rational> c(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    c[k - j] = sequence_at(gammas, j);
    c[k - j] *= binomial(k, j);
  }
  return Poly(std::move(c));
}

/// g_k^*(-1), i.e. the k-th forward difference of gamma at 0.
inline Rational jensen_at_minus_one(const SequenceSpec& gammas, std::size_t k) {
  Rational acc = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    Rational term = sequence_at(gammas, j) * binomial(k, j);
    if ((k - j) % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace polyop
