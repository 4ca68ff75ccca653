#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "polyop/error.hpp"
#include "polyop/poly.hpp"

namespace polyop {

/// Signed remainder sequence p, p', -rem(p, p'), ... ending at the last
/// nonzero entry. Degrees strictly decrease along the chain.
struct SturmChain {
  std::vector<Poly> chain;
};

inline SturmChain sturm_chain(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "Sturm chain of the zero polynomial");
  SturmChain s;
  s.chain.push_back(p);
  Poly next = derivative(p);
  while (!next.is_zero()) {
    s.chain.push_back(next);
    const auto n = s.chain.size();
    next = -divmod(s.chain[n - 2], s.chain[n - 1]).remainder;
  }
  return s;
}

namespace detail {

inline std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

inline std::size_t variations_at(const SturmChain& s, const Rational& r) {
  std::vector<int> signs;
  signs.reserve(s.chain.size());
  for (const auto& q : s.chain) signs.push_back(sign_at(q, r));
  return count_variations(signs);
}

// Sign at +inf is the sign of the leading coefficient; at -inf it is flipped
// for odd degree.
inline std::size_t variations_at_infinity(const SturmChain& s, bool positive) {
  std::vector<int> signs;
  signs.reserve(s.chain.size());
  for (const auto& q : s.chain) {
    int sg = sgn(q.leading());
    if (!positive && q.degree().value() % 2 == 1) sg = -sg;
    signs.push_back(sg);
  }
  return count_variations(signs);
}

}  // namespace detail

struct WholeLine {};
/// The half-open interval (lo, hi].
struct HalfOpen {
  Rational lo;
  Rational hi;
};
using RootRange = std::variant<WholeLine, HalfOpen>;

inline std::size_t count_distinct_real_roots(const SturmChain& s, const RootRange& range) {
  if (const auto* iv = std::get_if<HalfOpen>(&range)) {
    const Poly& p = s.chain.front();
    if (sign_at(p, iv->lo) == 0 || sign_at(p, iv->hi) == 0)
      throw Error(Errc::endpoint_is_root, "interval endpoint is a root");
    if (iv->lo >= iv->hi) return 0;
    return detail::variations_at(s, iv->lo) - detail::variations_at(s, iv->hi);
  }
  return detail::variations_at_infinity(s, false) - detail::variations_at_infinity(s, true);
}

inline std::size_t count_distinct_real_roots(const Poly& p, const RootRange& range = WholeLine{}) {
  return count_distinct_real_roots(sturm_chain(p), range);
}

enum class Hyperbolicity { hyperbolic, not_hyperbolic, zero_polynomial };

/// All roots real counting multiplicity. Nonzero constants qualify vacuously;
/// the zero polynomial gets its own marker.
inline Hyperbolicity is_hyperbolic(const Poly& p) {
  if (p.is_zero()) return Hyperbolicity::zero_polynomial;
  const Poly s = squarefree_part(p);
  return count_distinct_real_roots(s) == s.degree().value() ? Hyperbolicity::hyperbolic
                                                            : Hyperbolicity::not_hyperbolic;
}

inline const char* to_string(Hyperbolicity h) {
  switch (h) {
    case Hyperbolicity::hyperbolic: return "True";
    case Hyperbolicity::not_hyperbolic: return "False";
    case Hyperbolicity::zero_polynomial: return "Zero";
  }
  return "?";
}

/// 1 + max |a_i| / |a_n|; every real root lies strictly inside (-B, B).
inline Rational cauchy_bound(const Poly& p) {
  if (p.is_zero() || p.degree().value() < 1)
    throw Error(Errc::degree_too_low, "Cauchy bound needs degree >= 1");
  const auto& c = p.coeffs();
  Rational m = 0;
  const Rational lead = abs(c.back());
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Rational r = abs(c[i]) / lead;
    if (r > m) m = r;
  }
  return m + 1;
}

/// Ascending, pairwise disjoint intervals (lo, hi], one distinct root each.
/// Endpoints are never roots.
struct Isolation {
  std::vector<HalfOpen> intervals;
};

namespace detail {

// A split point in (lo, hi) that is not a root of p. Tries 1/2, 1/3, 2/3,
// 1/4, 3/4, ... of the way across; p has finitely many roots so this stops.
inline Rational non_root_between(const Poly& p, const Rational& lo, const Rational& hi) {
  for (long den = 2;; ++den) {
    for (long num = 1; num < den; ++num) {
      Rational t = lo + (hi - lo) * frac(num, den);
      if (sign_at(p, t) != 0) return t;
    }
  }
}

inline void bisect(const SturmChain& s, HalfOpen iv, std::size_t count, std::vector<HalfOpen>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(std::move(iv));
    return;
  }
  const Rational mid = non_root_between(s.chain.front(), iv.lo, iv.hi);
  const std::size_t left = count_distinct_real_roots(s, HalfOpen{iv.lo, mid});
  bisect(s, HalfOpen{iv.lo, mid}, left, out);
  bisect(s, HalfOpen{mid, iv.hi}, count - left, out);
}

}  // namespace detail

inline Isolation isolate_roots(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "cannot isolate roots of the zero polynomial");
  if (p.degree().value() < 1) throw Error(Errc::degree_too_low, "isolation needs degree >= 1");
  const Poly sq = squarefree_part(p);
  const SturmChain s = sturm_chain(sq);
  const Rational b = cauchy_bound(sq);
  Isolation iso;
  detail::bisect(s, HalfOpen{-b, b}, count_distinct_real_roots(s, WholeLine{}), iso.intervals);
  return iso;
}

/// Strict alternation of the zeros of p and q along the real line.
/// Both must be hyperbolic, squarefree, coprime, of degree >= 1, with
/// degrees differing by at most one.
inline bool interlaces(const Poly& p, const Poly& q) {
  for (const Poly* f : {&p, &q}) {
    if (f->is_zero() || f->degree().value() < 1)
      throw Error(Errc::degree_too_low, "interlacing needs degree >= 1");
    if (is_hyperbolic(*f) != Hyperbolicity::hyperbolic)
      throw Error(Errc::not_hyperbolic, to_string(*f) + " has non-real zeros");
    if (gcd(*f, derivative(*f)).degree() != Degree::of(0))
      throw Error(Errc::not_squarefree, to_string(*f) + " has a repeated zero");
  }
  if (gcd(p, q).degree() != Degree::of(0)) throw Error(Errc::not_coprime, "common zero");
  const std::size_t dp = p.degree().value();
  const std::size_t dq = q.degree().value();
  if ((dp > dq ? dp - dq : dq - dp) > 1) throw Error(Errc::degree_gap_too_large, "degrees differ by more than one");

  // Each interval isolating a zero of p*q holds exactly one zero, owned by
  // exactly one of p, q (coprime), and its endpoints are roots of neither.
  const SturmChain sp = sturm_chain(p);
  const Isolation iso = isolate_roots(p * q);
  int last_owner = -1;
  for (const auto& iv : iso.intervals) {
    const int owner = count_distinct_real_roots(sp, iv) == 1 ? 0 : 1;
    if (owner == last_owner) return false;
    last_owner = owner;
  }
  return true;
}

}  // namespace polyop
