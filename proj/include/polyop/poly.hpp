#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyop/error.hpp"
#include "polyop/rational.hpp"

namespace polyop {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which compares below every finite degree and absorbs under addition.
class Degree {
 public:
  constexpr Degree() noexcept = default;

  static constexpr Degree minus_infinity() noexcept { return Degree{}; }
  static constexpr Degree of(std::size_t n) noexcept {
    Degree d;
    d.value_ = n;
    return d;
  }

  constexpr bool is_minus_infinity() const noexcept { return !value_.has_value(); }
  constexpr bool is_finite() const noexcept { return value_.has_value(); }
  // Throws std::bad_optional_access for minus infinity.
  constexpr std::size_t value() const { return value_.value(); }

  friend constexpr bool operator==(Degree, Degree) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
    if (a.is_minus_infinity() || b.is_minus_infinity())
      return a.is_finite() <=> b.is_finite();
    return *a.value_ <=> *b.value_;
  }
  friend constexpr Degree operator+(Degree a, Degree b) noexcept {
    if (a.is_minus_infinity() || b.is_minus_infinity()) return minus_infinity();
    return of(*a.value_ + *b.value_);
  }

 private:
  std::optional<std::size_t> value_;
};

inline std::string to_string(Degree d) {
  return d.is_minus_infinity() ? std::string("−∞") : std::to_string(d.value());
}

/// Dense univariate polynomial over the rationals, ascending coefficients,
/// never carrying a trailing zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

  static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
  static Poly monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(1, 1); }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Degree degree() const noexcept {
    return is_zero() ? Degree::minus_infinity() : Degree::of(coeffs_.size() - 1);
  }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  /// Leading coefficient, 0 for the zero polynomial.
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }
  Poly& operator/=(const Rational& c) {
    if (c == 0) throw Error(Errc::bad_parameter, "division of a polynomial by zero");
    for (auto& a : coeffs_) a /= c;
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// p * x^k
inline Poly shift(const Poly& p, std::size_t k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<Rational> v(k);
  v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
  return Poly(std::move(v));
}

/// k-fold formal derivative.
inline Poly derivative(const Poly& p, std::size_t k = 1) {
  const auto& c = p.coeffs();
  if (k >= c.size()) return {};
  std::vector<Rational> out(c.size() - k);
  for (std::size_t i = k; i < c.size(); ++i) {
    out[i - k] = c[i];
    out[i - k] *= falling_factorial(i, k);
  }
  return Poly(std::move(out));
}

inline Rational eval(const Poly& p, const Rational& r) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= r;
    acc += *it;
  }
  return acc;
}

inline int sign_at(const Poly& p, const Rational& r) { return sgn(eval(p, r)); }

struct DivMod {
  Poly quotient;
  Poly remainder;
};

inline DivMod divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(Errc::zero_polynomial, "polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  if (rem.size() < d.size()) return {Poly{}, num};

  std::vector<Rational> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / d.back();
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d[j];
  }
  rem.resize(dd);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

/// Monic greatest common divisor by the Euclidean algorithm.
inline Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(Errc::both_zero, "gcd of two zero polynomials");
  Poly a = monic(p);
  Poly b = monic(q);
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = monic(r);
  }
  return a;
}

inline Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "squarefree part of the zero polynomial");
  return monic(divmod(p, gcd(p, derivative(p))).quotient);
}

/// x^{deg p} p(1/x).
inline Poly reverse(const Poly& p) {
  std::vector<Rational> v(p.coeffs().rbegin(), p.coeffs().rend());
  return Poly(std::move(v));
}

/// p(a x + b).
inline Poly compose_affine(const Poly& p, const Rational& a, const Rational& b) {
  const Poly inner{b, a};
  Poly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Poly::constant(*it);
  return acc;
}

/// Human-readable rendering, descending powers: "x^2 - 1/4", "-3/4*x".
inline std::string to_string(const Poly& p, char var = 'x') {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rational mag = abs(c[i]);
    if (out.empty())
      out += sgn(c[i]) < 0 ? "-" : "";
    else
      out += sgn(c[i]) < 0 ? " - " : " + ";
    const bool unit = mag == 1;
    if (i == 0 || !unit) out += to_string(mag);
    if (i > 0) {
      if (!unit) out += '*';
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace polyop
