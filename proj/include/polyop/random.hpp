#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polyop/error.hpp"
#include "polyop/poly.hpp"

namespace polyop {

/// Portable 64-bit LCG (Knuth's MMIX constants):
///   s' = 6364136223846793005 s + 1442695040888963407  (mod 2^64)
/// Draws use the high 32 bits of each state and reduce by modulo, with no
/// std distributions involved, so sequences are identical on every platform.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : engine_(seed) {}

  std::uint32_t next32() { return static_cast<std::uint32_t>(engine_() >> 32); }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    if (hi < lo) throw Error(Errc::bad_parameter, "empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next32() % span);
  }

  /// num/den with num in [-num_bound, num_bound], den in [1, max_den].
  Rational rational(long num_bound, long max_den) {
    const long num = uniform(-num_bound, num_bound);
    const long den = uniform(1, max_den);
    return frac(num, den);
  }

  Rational nonzero_rational(long num_bound, long max_den) {
    for (;;) {
      Rational r = rational(num_bound, max_den);
      if (r != 0) return r;
    }
  }

 private:
  std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL> engine_;
};

/// Seeded corpus of hyperbolic polynomials: each item is
/// lead * prod (x - r_i) with degree in [1, max_degree], lead a nonzero
/// integer in [-3, 3], and roots r_i = n/d, d in [1, 4], |r_i| <= root_pool.
struct CorpusGenerator {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t max_degree = 6;
  long root_pool = 4;
};

inline std::vector<Poly> generate_corpus(const CorpusGenerator& g) {
  if (g.max_degree < 1 || g.root_pool < 0) throw Error(Errc::bad_parameter, "corpus needs max_degree >= 1");
  Lcg64 rng(g.seed);
  std::vector<Poly> corpus;
  corpus.reserve(g.count);
  for (std::size_t i = 0; i < g.count; ++i) {
    const long degree = rng.uniform(1, static_cast<long>(g.max_degree));
    long lead = 0;
    while (lead == 0) lead = rng.uniform(-3, 3);
    Poly p = Poly::constant(lead);
    for (long j = 0; j < degree; ++j) {
      const long den = rng.uniform(1, 4);
      const long num = rng.uniform(-g.root_pool * den, g.root_pool * den);
      p *= Poly{-frac(num, den), Rational(1)};
    }
    corpus.push_back(std::move(p));
  }
  return corpus;
}

}  // namespace polyop
