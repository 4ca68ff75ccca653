#pragma once

// Self-contained checks that reproduce each worked result end to end.
// Every scenario hard-codes its operators and seeds, so `verify` needs no
// input files.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "polyop/bases.hpp"
#include "polyop/diffrep.hpp"
#include "polyop/io.hpp"
#include "polyop/operators.hpp"
#include "polyop/random.hpp"
#include "polyop/realroot.hpp"
#include "polyop/symbol.hpp"

namespace polyop::scenarios {

using io::json;

struct Result {
  std::string name;
  bool passed = true;
  json diff;  // first mismatch, null when passed
};

// ---------------------------------------------------------------------------
// Operators used by the scenarios
// ---------------------------------------------------------------------------

/// alpha(f) = f'(0), beta(f) = f(0), P = x(x+1)(x-1), R = x^2 - 1/4.
inline RankTwo rank_two_sample_operator() {
  return RankTwo{FunctionalSpec{{0, 1}, 0}, FunctionalSpec{{1}, 0}, Poly{0, -1, 0, 1}, Poly{frac(-1, 4), 0, 1}};
}

/// x D + D^2
inline FiniteDiffOp xd_plus_d2() { return FiniteDiffOp{{Poly{}, Poly{0, 1}, Poly{1}}}; }

constexpr std::uint64_t kPreserveSeed = 20240601;
constexpr std::size_t kPreserveCount = 200;
constexpr std::size_t kPreserveMaxDegree = 8;
constexpr long kPreserveRootPool = 4;

// ---------------------------------------------------------------------------
// Seeded inputs
// ---------------------------------------------------------------------------

inline ExplicitList random_sequence(Lcg64& rng, std::size_t length) {
  ExplicitList s;
  for (std::size_t i = 0; i < length; ++i) s.values.push_back(rng.rational(1000, 97));
  return s;
}

inline ExplicitList random_nondecreasing(Lcg64& rng, std::size_t length) {
  ExplicitList s;
  Rational v = rng.rational(10, 3);
  for (std::size_t i = 0; i < length; ++i) {
    s.values.push_back(v);
    v += abs(rng.rational(12, 4));
  }
  return s;
}

/// deg R = m, deg P = m + 1, roots strictly alternating; alpha(1), beta(1) != 0.
inline RankTwo random_interlacing_rank_two(Lcg64& rng) {
  const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
  std::vector<Rational> roots;
  Rational r = rng.rational(6, 2);
  for (std::size_t i = 0; i < 2 * m + 1; ++i) {
    roots.push_back(r);
    r += abs(rng.nonzero_rational(8, 4));
  }
  Poly p = Poly::constant(rng.nonzero_rational(5, 3));
  Poly q = Poly::constant(rng.nonzero_rational(5, 3));
  for (std::size_t i = 0; i < roots.size(); ++i) (i % 2 == 0 ? p : q) *= Poly{-roots[i], Rational(1)};

  FunctionalSpec alpha{{rng.nonzero_rational(9, 4)}, 0};
  FunctionalSpec beta{{rng.nonzero_rational(9, 4)}, 0};
  for (int i = 0; i < 3; ++i) {
    alpha.values.push_back(rng.rational(9, 4));
    beta.values.push_back(rng.rational(9, 4));
  }
  return RankTwo{alpha, beta, p, q};
}

// ---------------------------------------------------------------------------
// Scenario bodies
// ---------------------------------------------------------------------------

namespace detail {

// Records the first failure only.
struct Checker {
  Result& result;

  bool expect(bool ok, json diff) {
    if (!ok && result.passed) {
      result.passed = false;
      result.diff = std::move(diff);
    }
    return ok;
  }
  bool expect_poly(const Poly& got, const Poly& want, const std::string& what) {
    return expect(got == want, {{"what", what}, {"got", io::to_json(got)}, {"expected", io::to_json(want)}});
  }
  bool expect_polys(const std::vector<Poly>& got, const std::vector<Poly>& want, const std::string& what) {
    return expect(got == want, {{"what", what}, {"got", io::to_json(got)}, {"expected", io::to_json(want)}});
  }
};

inline bool is_not_monotone_at(const MonotoneVerdict& v, std::size_t k) {
  const auto* n = std::get_if<NotMonotone>(&v);
  return n && n->witness == k;
}

}  // namespace detail

inline Result rank_two_sample() {
  Result r{"lemma6", true, nullptr};
  detail::Checker c{r};
  const OperatorSpec op = rank_two_sample_operator();
  const auto rep = rep_prefix(op, 1);
  c.expect_polys(rep.q, {Poly{frac(-1, 4), 0, 1}, Poly{0, frac(-3, 4)}}, "Q_0, Q_1");
  const auto verdict = monotone_classify(rep);
  c.expect(detail::is_not_monotone_at(verdict, 0), {{"what", "monotone verdict"}, {"got", io::to_json(verdict)}});
  const auto& r2 = std::get<RankTwo>(op);
  c.expect(interlaces(r2.p, r2.r), {{"what", "interlaces(P, R)"}, {"got", false}});
  return r;
}

inline Result qform() {
  Result r{"qform", true, nullptr};
  detail::Checker c{r};
  const auto rep = rep_prefix(rank_two_sample_operator(), 25);
  for (std::size_t k = 2; k <= 25; ++k) {
    if (!c.expect_poly(rep.q[k], closed_rank_two_lemma(rep.q[0], rep.q[1], k), "Q_" + std::to_string(k))) break;
  }
  for (std::size_t k = 0; k <= 25; ++k)
    if (!c.expect(!rep.q[k].is_zero(), {{"what", "Q_" + std::to_string(k) + " vanishes"}})) break;
  return r;
}

inline Result symbol_identity() {
  Result r{"symbol", true, nullptr};
  detail::Checker c{r};
  const auto got = substitute_neg_w(symbol(xd_plus_d2(), 8));
  // (z + w) w e^{zw} = (z w + w^2) e^{zw}
  const auto want = reference_series(PolyTimesExpZw{{{1, 1, 1}, {0, 2, 1}}}, 8);
  c.expect(series_eq(got, want), {{"what", "G_T(z,-w)"}, {"got", io::to_json(got)}, {"expected", io::to_json(want)}});
  return r;
}

inline Result standard_diag() {
  Result r{"standard_diag", true, nullptr};
  detail::Checker c{r};
  Lcg64 rng(11);
  for (int trial = 0; trial < 20 && r.passed; ++trial) {
    const SequenceSpec gammas = random_sequence(rng, 13);
    const OperatorSpec op = DiagonalInBasis{StandardBasis{}, gammas};
    const auto rep = rep_prefix(op, 12);
    for (std::size_t k = 0; k <= 12; ++k)
      if (!c.expect_poly(rep.q[k], closed_standard_diagonal(gammas, k), "trial " + std::to_string(trial) + " Q_" + std::to_string(k)))
        break;
    for (std::size_t n = 0; n <= 12; ++n)
      if (!c.expect_poly(apply_prefix(rep, Poly::monomial(1, n)), Poly::monomial(sequence_at(gammas, n), n),
                         "trial " + std::to_string(trial) + " T[x^" + std::to_string(n) + "]"))
        break;
    const auto verdict = classify_operator(op, 12);
    c.expect(std::holds_alternative<MonotoneProved>(verdict),
             {{"what", "trial " + std::to_string(trial) + " verdict"}, {"got", io::to_json(verdict)}});
  }
  return r;
}

inline Result affine() {
  Result r{"affine", true, nullptr};
  detail::Checker c{r};
  Lcg64 rng(13);
  for (int trial = 0; trial < 10 && r.passed; ++trial) {
    const Rational a = rng.nonzero_rational(7, 3);
    const Rational b = rng.rational(7, 3);
    ExplicitList scalings;
    for (int i = 0; i <= 10; ++i) scalings.values.push_back(rng.nonzero_rational(9, 4));
    const SequenceSpec gammas = random_sequence(rng, 11);
    const AffineBasis basis{scalings, a, b};
    const auto rep = rep_prefix(DiagonalInBasis{basis, gammas}, 10);
    const std::string tag = "trial " + std::to_string(trial);
    for (std::size_t k = 0; k <= 10; ++k)
      if (!c.expect_poly(rep.q[k], closed_affine(gammas, a, b, k), tag + " Q_" + std::to_string(k))) break;
    const auto q = basis_prefix(basis, 10);
    for (std::size_t n = 0; n <= 10; ++n)
      if (!c.expect_poly(apply_prefix(rep, q[n]), q[n] * sequence_at(gammas, n), tag + " T[q_" + std::to_string(n) + "]"))
        break;
  }
  return r;
}

inline Result hermite() {
  Result r{"hermite", true, nullptr};
  detail::Checker c{r};
  Lcg64 rng(17);
  std::vector<SequenceSpec> sequences{PolynomialInK{Poly{0, 2}}};
  for (int i = 0; i < 5; ++i) sequences.push_back(random_nondecreasing(rng, 11));
  for (const Rational& alpha : {frac(1, 2), frac(1, 1), frac(3, 1)}) {
    for (std::size_t s = 0; s < sequences.size(); ++s) {
      const auto rep = rep_prefix(DiagonalInBasis{GeneralizedHermiteBasis{alpha}, sequences[s]}, 10);
      for (std::size_t k = 0; k <= 10; ++k)
        if (!c.expect_poly(rep.q[k], closed_hermite(sequences[s], alpha, k),
                           "alpha " + to_string(alpha) + " sequence " + std::to_string(s) + " Q_" + std::to_string(k)))
          break;
    }
  }
  std::vector<Poly> want(11);
  want[1] = Poly{0, 2};
  want[2] = Poly{-1};
  c.expect_polys(rep_prefix(DiagonalInBasis{GeneralizedHermiteBasis{frac(1, 2)}, sequences[0]}, 10).q, want,
                 "2xD - D^2 prefix");
  return r;
}

inline Result legendre() {
  Result r{"legendre", true, nullptr};
  detail::Checker c{r};
  // k^2 + alpha k + beta with alpha = 2, beta = 3
  const auto rep = rep_prefix(DiagonalInBasis{LegendreBasis{}, PolynomialInK{Poly{3, 2, 1}}}, 4);
  c.expect_polys(rep.q,
                 {Poly{3}, Poly{0, 3}, Poly{frac(-4, 3), 0, 1}, Poly{0, frac(2, 15)}, Poly{frac(-1, 105), 0, frac(-4, 105)}},
                 "alpha=2, beta=3 prefix");
  // alpha = 1 kills every term from D^3 on
  std::vector<Poly> want(11);
  want[0] = Poly{3};
  want[1] = Poly{0, 2};
  want[2] = Poly{-1, 0, 1};
  c.expect_polys(rep_prefix(DiagonalInBasis{LegendreBasis{}, PolynomialInK{Poly{3, 1, 1}}}, 10).q, want,
                 "alpha=1, beta=3 prefix");
  return r;
}

inline Result bates() {
  Result r{"bates", true, nullptr};
  detail::Checker c{r};
  const auto rep = rep_prefix(FiniteDiffOp{{Poly{1}, Poly{0, 2}, Poly{-1}}}, 5);
  c.expect_polys(rep.q, {Poly{1}, Poly{0, 2}, Poly{-1}, Poly{}, Poly{}, Poly{}}, "1 + 2xD - D^2 prefix");
  const auto verdict = monotone_classify(rep);
  c.expect(detail::is_not_monotone_at(verdict, 1), {{"what", "monotone verdict"}, {"got", io::to_json(verdict)}});
  return r;
}

inline Result preserve() {
  Result r{"preserve", true, nullptr};
  detail::Checker c{r};
  const auto corpus = generate_corpus({kPreserveSeed, kPreserveCount, kPreserveMaxDegree, kPreserveRootPool});
  for (const auto& [name, op] : {std::pair<std::string, OperatorSpec>{"rank-two sample", rank_two_sample_operator()},
                                 std::pair<std::string, OperatorSpec>{"xD+D^2", xd_plus_d2()}}) {
    const auto report = preserve_test(op, corpus);
    if (report.clean()) continue;
    const auto& first = report.items[report.violations.front()];
    c.expect(false, {{"what", name + " violations: " + std::to_string(report.violations.size()) + " of " +
                                  std::to_string(report.items.size())},
                     {"first_index", report.violations.front()},
                     {"input", io::to_json(first.input)},
                     {"image", io::to_json(first.image)}});
  }
  c.expect(is_hyperbolic(Poly{1, 0, 1}) == Hyperbolicity::not_hyperbolic, {{"what", "x^2+1 hyperbolic?"}});
  c.expect(is_hyperbolic(Poly{2, -3, 0, 1}) == Hyperbolicity::hyperbolic, {{"what", "x^3-3x+2 hyperbolic?"}});
  c.expect(count_distinct_real_roots(Poly{1, 0, 1}) == 0, {{"what", "roots of x^2+1"}});
  c.expect(count_distinct_real_roots(Poly{0, -1, 0, 1}) == 3, {{"what", "roots of x^3-x"}});
  c.expect(count_distinct_real_roots(Poly{2, -3, 0, 1}) == 2, {{"what", "roots of x^3-3x+2"}});
  return r;
}

inline Result rank_two_leading() {
  Result r{"rank_two_leading", true, nullptr};
  detail::Checker c{r};
  Lcg64 rng(19);
  for (int trial = 0; trial < 10 && r.passed; ++trial) {
    const RankTwo op = random_interlacing_rank_two(rng);
    const std::string tag = "trial " + std::to_string(trial);
    c.expect(interlaces(op.p, op.r), {{"what", tag + " P, R interlace"}, {"operator", io::to_json(OperatorSpec{op})}});
    const auto rep = rep_prefix(op, 10);
    c.expect(leading_profile_check(rep), {{"what", tag + " leading profile"}, {"Q", io::to_json(rep.q)}});
    for (std::size_t k = 0; k <= 10; ++k)
      if (!c.expect(!rep.q[k].is_zero(), {{"what", tag + " Q_" + std::to_string(k) + " vanishes"}})) break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct Entry {
  std::string_view name;
  Result (*run)();
};

inline const std::array<Entry, 10>& registry() {
  static const std::array<Entry, 10> entries{{
      {"lemma6", &rank_two_sample},
      {"qform", &qform},
      {"symbol", &symbol_identity},
      {"standard_diag", &standard_diag},
      {"affine", &affine},
      {"hermite", &hermite},
      {"legendre", &legendre},
      {"bates", &bates},
      {"preserve", &preserve},
      {"rank_two_leading", &rank_two_leading},
  }};
  return entries;
}

/// Runs a scenario; a library error inside it becomes a failure.
inline Result run(const Entry& e) {
  try {
    return e.run();
  } catch (const Error& err) {
    return Result{std::string(e.name), false, {{"error", err.what()}}};
  }
}

}  // namespace polyop::scenarios
