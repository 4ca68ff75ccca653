#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "polyop/error.hpp"
#include "polyop/operators.hpp"
#include "polyop/poly.hpp"

namespace polyop {

/// Bivariate series truncated at w-order N: entry k is the coefficient of
/// w^k, a polynomial in z.
struct TruncatedBiSeries {
  std::vector<Poly> w_coeffs;

  std::size_t order() const noexcept { return w_coeffs.empty() ? 0 : w_coeffs.size() - 1; }
  friend bool operator==(const TruncatedBiSeries&, const TruncatedBiSeries&) = default;
};

/// G_T(z, w) = sum_k (-1)^k T[z^k] w^k / k!, through w^N.
inline TruncatedBiSeries symbol(const OperatorSpec& spec, std::size_t order) {
  auto imgs = images(spec, order);
  TruncatedBiSeries s;
  s.w_coeffs.reserve(imgs.size());
  for (std::size_t k = 0; k < imgs.size(); ++k) {
    Rational c = Rational(1) / Rational(factorial(k));
    if (k % 2 == 1) c = -c;
    s.w_coeffs.push_back(imgs[k] * c);
  }
  return s;
}

/// G(z, w) -> G(z, -w).
inline TruncatedBiSeries substitute_neg_w(TruncatedBiSeries s) {
  for (std::size_t k = 1; k < s.w_coeffs.size(); k += 2) s.w_coeffs[k] = -s.w_coeffs[k];
  return s;
}

/// c z^i w^j
struct BiMonomial {
  std::size_t z_power;
  std::size_t w_power;
  Rational coeff;
};

struct ExpZw {};
/// (sum of monomials) * e^{zw}
struct PolyTimesExpZw {
  std::vector<BiMonomial> prefactor;
};

using ReferenceExpr = std::variant<ExpZw, PolyTimesExpZw>;

/// Exact truncation of the reference expression; e^{zw} = sum z^k w^k / k!.
inline TruncatedBiSeries reference_series(const ReferenceExpr& expr, std::size_t order) {
  std::vector<Poly> exp_terms;
  exp_terms.reserve(order + 1);
  for (std::size_t k = 0; k <= order; ++k) exp_terms.push_back(Poly::monomial(Rational(1) / Rational(factorial(k)), k));

  if (std::holds_alternative<ExpZw>(expr)) return {exp_terms};

  TruncatedBiSeries s;
  s.w_coeffs.assign(order + 1, Poly{});
  for (const auto& m : std::get<PolyTimesExpZw>(expr).prefactor) {
    for (std::size_t k = 0; k + m.w_power <= order; ++k)
      s.w_coeffs[k + m.w_power] += shift(exp_terms[k], m.z_power) * m.coeff;
  }
  return s;
}

inline bool series_eq(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
  if (a.w_coeffs.size() != b.w_coeffs.size())
    throw Error(Errc::order_mismatch, "series orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
  return a == b;
}

/// Entrywise a*s + b*t, both of the same order.
inline TruncatedBiSeries combine(const Rational& a, const TruncatedBiSeries& s, const Rational& b,
                                 const TruncatedBiSeries& t) {
  if (s.w_coeffs.size() != t.w_coeffs.size()) throw Error(Errc::order_mismatch, "cannot combine series");
  TruncatedBiSeries out;
  out.w_coeffs.reserve(s.w_coeffs.size());
  for (std::size_t k = 0; k < s.w_coeffs.size(); ++k) out.w_coeffs.push_back(s.w_coeffs[k] * a + t.w_coeffs[k] * b);
  return out;
}

/// The truncated series at w = w0, as a polynomial in z. Only meaningful as
/// a falsification probe when the symbol itself is polynomial in w of
/// degree <= N.
inline Poly specialize_w(const TruncatedBiSeries& s, const Rational& w0) {
  Poly out;
  Rational wk = 1;
  for (const auto& c : s.w_coeffs) {
    out += c * wk;
    wk *= w0;
  }
  return out;
}

}  // namespace polyop
