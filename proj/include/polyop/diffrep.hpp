#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "polyop/bases.hpp"
#include "polyop/error.hpp"
#include "polyop/operators.hpp"
#include "polyop/poly.hpp"
#include "polyop/realroot.hpp"

namespace polyop {

/// Q_0, ..., Q_N of T = sum_k Q_k(x) D^k.
struct DiffOpPrefix {
  std::vector<Poly> q;
  std::string source;

  std::size_t order() const noexcept { return q.empty() ? 0 : q.size() - 1; }
  friend bool operator==(const DiffOpPrefix& a, const DiffOpPrefix& b) { return a.q == b.q; }
};

/// Coefficient polynomials from the images of x^0..x^N:
///   Q_n = (T[x^n] - sum_{k<n} Q_k D^k[x^n]) / n!
inline DiffOpPrefix rep_prefix_from_images(const std::vector<Poly>& imgs, std::string source = {}) {
  DiffOpPrefix rep;
  rep.source = std::move(source);
  rep.q.reserve(imgs.size());
  for (std::size_t n = 0; n < imgs.size(); ++n) {
    Poly residual = imgs[n];
    for (std::size_t k = 0; k < n; ++k) {
      if (rep.q[k].is_zero()) continue;
      residual -= shift(rep.q[k], n - k) * Rational(falling_factorial(n, k));
    }
    rep.q.push_back(residual / Rational(factorial(n)));
  }
  return rep;
}

inline DiffOpPrefix rep_prefix(const OperatorSpec& spec, std::size_t order) {
  return rep_prefix_from_images(images(spec, order));
}

/// sum_{k<=N} Q_k p^{(k)}; exact whenever N >= deg p.
inline Poly apply_prefix(const DiffOpPrefix& rep, const Poly& p) {
  if (p.is_zero()) return {};
  if (rep.q.empty() || p.degree().value() > rep.order())
    throw Error(Errc::prefix_too_short, "prefix of order " + std::to_string(rep.order()) +
                                            " cannot act exactly on degree " + std::to_string(p.degree().value()));
  Poly out;
  for (std::size_t k = 0; k <= p.degree().value(); ++k) out += rep.q[k] * derivative(p, k);
  return out;
}

// ---------------------------------------------------------------------------
// Monotonicity
// ---------------------------------------------------------------------------

/// deg Q_k >= 0 and deg Q_k > deg Q_{k+1}: conclusive.
struct NotMonotone {
  std::size_t witness;
};
/// No violation among Q_0..Q_N. Evidence about the prefix only.
struct MonotoneThrough {
  std::size_t order;
};
/// A closed form guarantees the degree pattern for every k.
struct MonotoneProved {
  std::string reason;
};

using MonotoneVerdict = std::variant<NotMonotone, MonotoneThrough, MonotoneProved>;

/// Scans deg Q_k <= deg Q_{k+1} for every k with Q_k != 0. The zero
/// polynomial has degree minus infinity, so a zero after a nonzero entry
/// is a violation while leading zeros impose nothing.
inline MonotoneVerdict monotone_classify(const DiffOpPrefix& rep) {
  for (std::size_t k = 0; k + 1 < rep.q.size(); ++k) {
    const Degree dk = rep.q[k].degree();
    if (dk.is_finite() && dk > rep.q[k + 1].degree()) return NotMonotone{k};
  }
  return MonotoneThrough{rep.order()};
}

inline std::string to_string(const MonotoneVerdict& v) {
  if (const auto* n = std::get_if<NotMonotone>(&v)) return "NotMonotone(" + std::to_string(n->witness) + ")";
  if (const auto* t = std::get_if<MonotoneThrough>(&v))
    return "MonotoneThrough(" + std::to_string(t->order) + ") [prefix evidence only]";
  return "MonotoneProved(\"" + std::get<MonotoneProved>(v).reason + "\")";
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Q_k for the rank-two operator whose images vanish on x^n, n >= 2:
///   Q_k = (-1)^{k+1}(k-1)/k! Q_0 x^k + (-1)^{k+1}/(k-1)! x^{k-1} Q_1.
inline Poly closed_rank_two_lemma(const Poly& q0, const Poly& q1, std::size_t k) {
  if (k < 2) throw Error(Errc::bad_index, "closed form holds for k >= 2", k);
  const int s = sign_pow(k + 1);
  const Rational c0 = Rational(s * static_cast<long>(k - 1)) / Rational(factorial(k));
  const Rational c1 = Rational(s) / Rational(factorial(k - 1));
  return shift(q0, k) * c0 + shift(q1, k - 1) * c1;
}

/// Diagonal in the standard basis: Q_k = g_k^*(-1)/k! x^k.
inline Poly closed_standard_diagonal(const SequenceSpec& gammas, std::size_t k) {
  return Poly::monomial(jensen_at_minus_one(gammas, k) / Rational(factorial(k)), k);
}

/// Diagonal in the basis c_k (a x + b)^k:
///   Q_k = (-1)^k (a x + b)^k / (k! a^k) * (gamma_0 - sum_{j=1}^k C(k,j)(-1)^{j+1} gamma_j),
/// with Q_0 = gamma_0. The scalings c_k drop out.
inline Poly closed_affine(const SequenceSpec& gammas, const Rational& a, const Rational& b, std::size_t k) {
  if (a == 0) throw Error(Errc::bad_parameter, "affine scale must be nonzero");
  Rational bracket = sequence_at(gammas, 0);
  for (std::size_t j = 1; j <= k; ++j) {
    Rational term = sequence_at(gammas, j) * binomial(k, j);
    if ((j + 1) % 2 == 1) term = -term;
    bracket -= term;
  }
  Rational scale = bracket / (Rational(factorial(k)) * pow(a, k));
  if (k % 2 == 1) scale = -scale;
  return compose_affine(Poly::monomial(scale, k), a, b);
}

/// Diagonal in the generalized Hermite basis with parameter alpha:
///   Q_k = sum_{j=0}^{floor(k/2)} (-alpha)^j / (j! (k-2j)!) g_{k-j}^*(-1) H_{k-2j}.
inline Poly closed_hermite(const SequenceSpec& gammas, const Rational& alpha, std::size_t k) {
  if (alpha <= 0) throw Error(Errc::bad_parameter, "Hermite parameter must be positive");
  const auto h = generalized_hermite_prefix(alpha, k);
  Poly out;
  for (std::size_t j = 0; 2 * j <= k; ++j) {
    const Rational g = jensen_at_minus_one(gammas, k - j);
    if (g == 0) continue;
    const Rational c = pow(-alpha, j) * g / (Rational(factorial(j)) * Rational(factorial(k - 2 * j)));
    out += h[k - 2 * j] * c;
  }
  return out;
}

/// deg Q_k = deg Q_0 + k and lc(Q_k) = (-1)^k/k! lc(Q_0) for all k <= N.
inline bool leading_profile_check(const DiffOpPrefix& rep) {
  if (rep.q.empty() || rep.q.front().is_zero()) throw Error(Errc::zero_q0, "leading profile needs Q_0 != 0");
  const std::size_t d0 = rep.q.front().degree().value();
  const Rational lc0 = rep.q.front().leading();
  for (std::size_t k = 0; k < rep.q.size(); ++k) {
    if (rep.q[k].degree() != Degree::of(d0 + k)) return false;
    Rational expected = lc0 / Rational(factorial(k));
    if (k % 2 == 1) expected = -expected;
    if (rep.q[k].leading() != expected) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Reversal
// ---------------------------------------------------------------------------

/// T* = sum_k reverse(Q_k) D^k.
inline DiffOpPrefix reverse_rep(const DiffOpPrefix& rep) {
  DiffOpPrefix out;
  out.source = rep.source.empty() ? std::string{} : "reverse of " + rep.source;
  out.q.reserve(rep.q.size());
  for (const auto& p : rep.q) out.q.push_back(reverse(p));
  return out;
}

/// Entry k is lc(Q_k), zero for Q_k = 0; equals reverse(Q_k) at 0.
inline std::vector<Rational> leading_coeffs(const DiffOpPrefix& rep) {
  std::vector<Rational> out;
  out.reserve(rep.q.size());
  for (const auto& p : rep.q) out.push_back(p.leading());
  return out;
}

// ---------------------------------------------------------------------------
// Certificates beyond the prefix
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_affine_or_standard(const BasisSpec& b) {
  return std::holds_alternative<StandardBasis>(b) || std::holds_alternative<AffineBasis>(b);
}

// A rank-two operator whose images vanish on x^n for n >= 2.
inline bool images_vanish_from_two(const RankTwo& op) {
  const auto trailing_zero = [](const FunctionalSpec& f) {
    if (f.fallback != 0) return false;
    for (std::size_t n = 2; n < f.values.size(); ++n)
      if (f.values[n] != 0) return false;
    return true;
  };
  return (trailing_zero(op.alpha) && trailing_zero(op.beta)) || (op.p.is_zero() && op.r.is_zero());
}

inline std::pair<Rational, Rational> affine_map(const BasisSpec& b) {
  if (const auto* aff = std::get_if<AffineBasis>(&b)) return {aff->a, aff->b};
  return {Rational(1), Rational(0)};
}

// Q_0 != 0 of top degree in span{P, R}: then T[x^n] never reaches
// deg Q_0 + n and lc(Q_k) = (-1)^k/k! lc(Q_0) for every k.
inline bool rank_two_top_degree(const RankTwo& op, const Poly& q0) {
  return !q0.is_zero() && q0.degree() == std::max(op.p.degree(), op.r.degree());
}

}  // namespace detail

/// Monotonicity verdict for an operator: scans Q_0..Q_N and, where a closed
/// form covers the operator family, extends the conclusion to every k.
/// A violation found by the scan is always reported.
inline MonotoneVerdict classify_operator(const OperatorSpec& spec, std::size_t order) {
  const DiffOpPrefix rep = rep_prefix(spec, order);
  const auto verdict = monotone_classify(rep);
  if (std::holds_alternative<NotMonotone>(verdict)) return verdict;

  if (const auto* diag = std::get_if<DiagonalInBasis>(&spec); diag && detail::is_affine_or_standard(diag->basis)) {
    // Q_k = g_k^*(-1)/(k! a^k) (ax+b)^k. For eigenvalues polynomial in k of
    // degree d the factor g_k^*(-1) vanishes exactly for k > d, so the
    // closed form through d + 1 decides every k.
    std::size_t last = order;
    bool total = false;
    if (const auto* poly = std::get_if<PolynomialInK>(&diag->eigenvalues)) {
      last = std::max(order, poly->f.is_zero() ? std::size_t{0} : poly->f.degree().value() + 1);
      total = true;
    } else {
      last = std::max(order, std::get<ExplicitList>(diag->eigenvalues).values.size() - 1);
    }
    const auto [a, b] = detail::affine_map(diag->basis);
    DiffOpPrefix closed;
    for (std::size_t k = 0; k <= last; ++k) closed.q.push_back(closed_affine(diag->eigenvalues, a, b, k));
    const auto extended = monotone_classify(closed);
    if (std::holds_alternative<NotMonotone>(extended)) return extended;
    return MonotoneProved{total ? "diagonal in an affine basis: Q_k = g_k*(-1)/(k! a^k) (ax+b)^k, checked for every k"
                                : "diagonal in an affine basis: Q_k = g_k*(-1)/(k! a^k) (ax+b)^k, checked for all " +
                                      std::to_string(last + 1) + " given eigenvalues"};
  }

  if (const auto* r2 = std::get_if<RankTwo>(&spec); r2 && detail::rank_two_top_degree(*r2, rep.q.front()))
    return MonotoneProved{"rank two, Q_0 of top degree in the range: deg Q_k = deg Q_0 + k for every k"};

  return verdict;
}

/// Certificate that infinitely many Q_k are nonzero, when a closed form
/// decides it. nullopt means the prefix is the only evidence.
inline std::optional<std::string> infinite_order_certificate(const OperatorSpec& spec) {
  const auto* r2 = std::get_if<RankTwo>(&spec);
  if (!r2) return std::nullopt;

  const auto rep = rep_prefix(spec, 1);
  const Poly& q0 = rep.q[0];
  const Poly& q1 = rep.q[1];

  if (detail::images_vanish_from_two(*r2)) {
    // Q_k = +-x^{k-1}/(k-1)! * ((k-1)/k x Q_0 + Q_1), k >= 2. This vanishes
    // only if Q_1 = -(k-1)/k x Q_0, which can hold for at most one k.
    if (q0.is_zero() && q1.is_zero()) return std::nullopt;
    if (q0.is_zero()) return "Q_k = +-x^{k-1}Q_1/(k-1)! != 0 for all k >= 2";
    const Poly xq0 = shift(q0, 1);
    const auto dm = divmod(q1, xq0);
    const bool proportional = q1.is_zero() || (dm.remainder.is_zero() && dm.quotient.degree() == Degree::of(0));
    if (!proportional) return "Q_k = +-x^{k-1}/(k-1)! ((k-1)/k x Q_0 + Q_1) and Q_1 is not a multiple of x Q_0";
    const Rational c = q1.is_zero() ? Rational(0) : dm.quotient.coeff(0);
    // -c = (k-1)/k  <=>  k = 1/(1+c)
    const Rational denom = c + 1;
    if (denom != 0) {
      const Rational k = Rational(1) / denom;
      if (k.get_den() == 1 && k >= 2) return std::nullopt;
    }
    return "Q_k = +-x^{k-1}/(k-1)! ((k-1)/k x Q_0 + Q_1) never vanishes for k >= 2";
  }

  if (detail::rank_two_top_degree(*r2, q0)) return "deg Q_k = deg Q_0 + k for every k";
  return std::nullopt;
}

}  // namespace polyop
