#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "polyop/error.hpp"

namespace polyop {

// GMP keeps mpq values canonical after every arithmetic operation; the only
// way to obtain a non-canonical value is mpq_set_str, which parse_rational
// follows with canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational frac(long num, long den) {
  if (den == 0) throw Error(Errc::bad_parameter, "zero denominator");
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

/// Accepts "p" or "p/q" with optional leading sign; surrounding blanks ignored.
inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::parse_error, "empty rational literal");

  auto well_formed = [](std::string_view digits, bool allow_sign) {
    if (allow_sign && !digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) return false;
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!well_formed(num, true) || !well_formed(den, false))
    throw Error(Errc::parse_error, "malformed rational '" + std::string(text) + "'");

  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer numerator(n, 10);
  Integer denominator(std::string(den), 10);
  if (denominator == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  Rational r{numerator, denominator};
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

/// n!/(n-k)!, the coefficient produced by D^k acting on x^n. Zero when k > n.
inline Integer falling_factorial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer f = 1;
  for (unsigned long i = 0; i < k; ++i) f *= n - i;
  return f;
}

inline Rational pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

/// (-1)^k as a small integer.
constexpr int sign_pow(unsigned long k) noexcept { return (k % 2 == 0) ? 1 : -1; }

}  // namespace polyop
