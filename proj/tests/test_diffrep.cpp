#include <gtest/gtest.h>

#include "polyop/diffrep.hpp"
#include "property_laws.hpp"

namespace {

using namespace polyop;

const Poly kP{0, -1, 0, 1};
const Poly kR{frac(-1, 4), 0, 1};

OperatorSpec rank_two_sample() { return RankTwo{FunctionalSpec{{0, 1}, 0}, FunctionalSpec{{1}, 0}, kP, kR}; }
OperatorSpec xd_plus_d2() { return FiniteDiffOp{{Poly{}, Poly::x(), Poly{1}}}; }
OperatorSpec identity() { return DiagonalInBasis{StandardBasis{}, PolynomialInK{Poly{1}}}; }

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::parse_error;
}

TEST(RepPrefix, Examples) {
  EXPECT_EQ(rep_prefix(rank_two_sample(), 1).q, (std::vector<Poly>{kR, Poly{0, frac(-3, 4)}}));
  EXPECT_EQ(rep_prefix(identity(), 3).q, (std::vector<Poly>{Poly{1}, Poly{}, Poly{}, Poly{}}));
  const OperatorSpec xd = DiagonalInBasis{StandardBasis{}, PolynomialInK{Poly{0, 1}}};
  EXPECT_EQ(rep_prefix(xd, 3).q, (std::vector<Poly>{Poly{}, Poly::x(), Poly{}, Poly{}}));
  EXPECT_EQ(rep_prefix(xd_plus_d2(), 4).q, (std::vector<Poly>{Poly{}, Poly::x(), Poly{1}, Poly{}, Poly{}}));
  EXPECT_EQ(rep_prefix(rank_two_sample(), 6).order(), 6u);
}

TEST(RepPrefix, FiniteOperatorRoundTrips) {
  const std::vector<Poly> q{Poly{1}, Poly{0, 2}, Poly{-1}};
  const auto rep = rep_prefix(FiniteDiffOp{q}, 5);
  EXPECT_EQ(rep.q, (std::vector<Poly>{Poly{1}, Poly{0, 2}, Poly{-1}, Poly{}, Poly{}, Poly{}}));
}

TEST(ApplyPrefix, MatchesOperator) {
  const auto rep = rep_prefix(rank_two_sample(), 3);
  const Poly p{2, 3, -1, frac(1, 2)};
  EXPECT_EQ(apply_prefix(rep, p), polyop::apply(rank_two_sample(), p));
  EXPECT_TRUE(apply_prefix(rep, Poly{}).is_zero());
  EXPECT_EQ(error_of([&] { apply_prefix(rep, Poly::monomial(1, 4)); }), Errc::prefix_too_short);
}

// sum_{k<=N} Q_k D^k reproduces T on every polynomial of degree <= N.
TEST(ApplyPrefix, ReconstructsRandomOperators) {
  Lcg64 rng(606);
  for (int trial = 0; trial < 120; ++trial) {
    const OperatorSpec op = laws::random_operator(rng, 8);
    const auto rep = rep_prefix(op, 8);
    for (int j = 0; j < 3; ++j) {
      const Poly p = laws::random_poly(rng, 8);
      ASSERT_EQ(apply_prefix(rep, p), polyop::apply(op, p)) << io::to_json(op).dump();
    }
  }
}

TEST(Monotone, Verdicts) {
  EXPECT_EQ(to_string(monotone_classify(rep_prefix(rank_two_sample(), 6))), "NotMonotone(0)");
  EXPECT_EQ(to_string(monotone_classify(rep_prefix(xd_plus_d2(), 6))), "NotMonotone(1)");
  // Q_1 = 0 has degree minus infinity, below deg Q_0 = 0.
  EXPECT_EQ(to_string(monotone_classify(rep_prefix(identity(), 6))), "NotMonotone(0)");
  const DiffOpPrefix growing{{Poly{}, Poly{1}, Poly::x(), Poly{0, 0, 1}}, {}};
  const auto v = monotone_classify(growing);
  ASSERT_TRUE(std::holds_alternative<MonotoneThrough>(v));
  EXPECT_EQ(std::get<MonotoneThrough>(v).order, 3u);
}

TEST(Monotone, ClassifyOperatorProvesAffineDiagonal) {
  std::vector<Rational> g;
  for (std::size_t k = 0; k <= 10; ++k) g.push_back(pow(Rational(2), k + 1) - 1);
  const OperatorSpec op = DiagonalInBasis{StandardBasis{}, ExplicitList{g}};
  EXPECT_TRUE(std::holds_alternative<MonotoneThrough>(monotone_classify(rep_prefix(op, 10))));
  EXPECT_TRUE(std::holds_alternative<MonotoneProved>(classify_operator(op, 10)));
  // Polynomial eigenvalues of degree d: Q_{d+1} = 0 breaks the pattern.
  const OperatorSpec quad = DiagonalInBasis{AffineBasis{PolynomialInK{Poly{1}}, 2, 1}, PolynomialInK{Poly{1, 1, 1}}};
  EXPECT_EQ(to_string(classify_operator(quad, 2)), "NotMonotone(2)");
  EXPECT_EQ(to_string(classify_operator(rank_two_sample(), 6)), "NotMonotone(0)");
}

// gamma = 1, 2, 3, 5 has second difference 0 but third difference 1, so
// Q_2 = 0 sits between nonzero Q_1 and Q_3.
TEST(Monotone, StandardDiagonalWithVanishingDifference) {
  const OperatorSpec op = DiagonalInBasis{StandardBasis{}, ExplicitList{{1, 2, 3, 5}}};
  const auto rep = rep_prefix(op, 3);
  EXPECT_TRUE(rep.q[2].is_zero());
  EXPECT_EQ(rep.q[3], Poly::monomial(frac(1, 6), 3));
  EXPECT_EQ(to_string(classify_operator(op, 3)), "NotMonotone(1)");
}

TEST(Monotone, RankTwoTopDegreeIsProved) {
  const OperatorSpec op = RankTwo{FunctionalSpec{{}, 1}, FunctionalSpec{{}, 1}, Poly{-1, 0, 1}, Poly::x()};
  EXPECT_TRUE(std::holds_alternative<MonotoneProved>(classify_operator(op, 6)));
}

TEST(ClosedForm, RankTwoLemma) {
  const Poly q0{1, 2}, q1{0, 0, 3};
  // k = 2: -Q0 x^2 / 2 - x Q1;  k = 3: Q0 x^3 / 3 + x^2 Q1 / 2
  EXPECT_EQ(closed_rank_two_lemma(q0, q1, 2), shift(q0, 2) * frac(-1, 2) - shift(q1, 1));
  EXPECT_EQ(closed_rank_two_lemma(q0, q1, 3), shift(q0, 3) * frac(1, 3) + shift(q1, 2) * frac(1, 2));
  const auto rep = rep_prefix(rank_two_sample(), 1);
  EXPECT_EQ(closed_rank_two_lemma(rep.q[0], rep.q[1], 2), Poly({0, 0, frac(7, 8), 0, frac(-1, 2)}));
  EXPECT_EQ(error_of([&] { closed_rank_two_lemma(q0, q1, 1); }), Errc::bad_index);
}

TEST(ClosedForm, StandardDiagonal) {
  const SequenceSpec ones = PolynomialInK{Poly{1}};
  EXPECT_EQ(closed_standard_diagonal(ones, 0), Poly{1});
  EXPECT_TRUE(closed_standard_diagonal(ones, 3).is_zero());
  const SequenceSpec k = PolynomialInK{Poly{0, 1}};
  EXPECT_EQ(closed_standard_diagonal(k, 1), Poly::x());
  const SequenceSpec k2 = PolynomialInK{Poly{0, 0, 1}};  // x D + x^2 D^2
  EXPECT_EQ(closed_standard_diagonal(k2, 2), Poly::monomial(1, 2));
  EXPECT_EQ(rep_prefix(DiagonalInBasis{StandardBasis{}, k2}, 3).q,
            (std::vector<Poly>{Poly{}, Poly::x(), Poly::monomial(1, 2), Poly{}}));
}

TEST(ClosedForm, Affine) {
  const SequenceSpec g = ExplicitList{{1, 2}};
  EXPECT_EQ(closed_affine(g, 1, 1, 0), Poly{1});
  EXPECT_EQ(closed_affine(g, 1, 1, 1), Poly({1, 1}));
  EXPECT_EQ(rep_prefix(DiagonalInBasis{AffineBasis{ExplicitList{{3, 5}}, 1, 1}, g}, 1).q,
            (std::vector<Poly>{Poly{1}, Poly({1, 1})}));
  EXPECT_TRUE(closed_affine(PolynomialInK{Poly{4}}, 3, -2, 2).is_zero());
  const SequenceSpec r = ExplicitList{{2, -1, 5, frac(1, 3), 7}};
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(closed_affine(r, 1, 0, k), closed_standard_diagonal(r, k));
  EXPECT_EQ(error_of([&] { closed_affine(r, 0, 1, 1); }), Errc::bad_parameter);
}

TEST(ClosedForm, Hermite) {
  const SequenceSpec two_n = PolynomialInK{Poly{0, 2}};
  EXPECT_TRUE(closed_hermite(two_n, frac(1, 2), 0).is_zero());
  EXPECT_EQ(closed_hermite(two_n, frac(1, 2), 1), Poly({0, 2}));
  EXPECT_EQ(closed_hermite(two_n, frac(1, 2), 2), Poly{-1});
  EXPECT_TRUE(closed_hermite(two_n, frac(1, 2), 3).is_zero());
  EXPECT_EQ(closed_hermite(PolynomialInK{Poly{3, 2}}, 1, 0), Poly{3});
  EXPECT_EQ(error_of([&] { closed_hermite(two_n, 0, 1); }), Errc::bad_parameter);
}

TEST(LeadingProfile, Cases) {
  EXPECT_FALSE(leading_profile_check(rep_prefix(rank_two_sample(), 4)));
  EXPECT_FALSE(leading_profile_check(rep_prefix(identity(), 4)));
  const OperatorSpec top = RankTwo{FunctionalSpec{{}, 1}, FunctionalSpec{{}, 1}, Poly{-1, 0, 1}, Poly::x()};
  EXPECT_TRUE(leading_profile_check(rep_prefix(top, 6)));
  const OperatorSpec xd = DiagonalInBasis{StandardBasis{}, PolynomialInK{Poly{0, 1}}};
  EXPECT_EQ(error_of([&] { leading_profile_check(rep_prefix(xd, 3)); }), Errc::zero_q0);
}

// Interlacing P = x, R = x - 1 of equal degree, alpha(1) = 1, beta(1) = -1:
// T[1] = P - R = 1 and T[x] = x, so Q_0 = 1 and Q_1 = 0.
TEST(LeadingProfile, EqualDegreeCounterexample) {
  const Poly p = Poly::x(), r{-1, 1};
  ASSERT_TRUE(interlaces(p, r));
  const OperatorSpec op = RankTwo{FunctionalSpec{{1, 1}, 0}, FunctionalSpec{{-1}, 0}, p, r};
  const auto rep = rep_prefix(op, 4);
  EXPECT_EQ(rep.q[0], Poly{1});
  EXPECT_TRUE(rep.q[1].is_zero());
  EXPECT_FALSE(leading_profile_check(rep));
}

TEST(Reversal, RankTwoSample) {
  const auto rep = rep_prefix(rank_two_sample(), 1);
  EXPECT_EQ(reverse_rep(rep).q, (std::vector<Poly>{Poly{1, 0, frac(-1, 4)}, Poly{frac(-3, 4)}}));
  EXPECT_EQ(leading_coeffs(rep), (std::vector<Rational>{1, frac(-3, 4)}));
  EXPECT_EQ(leading_coeffs(rep_prefix(xd_plus_d2(), 2)), (std::vector<Rational>{0, 1, 1}));
}

TEST(Reversal, LeadingCoefficientsAreReversedValuesAtZero) {
  Lcg64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rep = rep_prefix(laws::random_operator(rng, 7), 7);
    const auto lc = leading_coeffs(rep);
    const auto rev = reverse_rep(rep);
    for (std::size_t k = 0; k < rep.q.size(); ++k) EXPECT_EQ(lc[k], eval(rev.q[k], 0));
  }
}

TEST(Reversal, InvolutionWhenConstantTermsNonzero) {
  const DiffOpPrefix rep{{Poly{1, 2, 3}, Poly{-1, 0, 0, 5}, Poly{frac(1, 2)}}, {}};
  EXPECT_EQ(reverse_rep(reverse_rep(rep)), rep);
}

TEST(InfiniteOrder, Certificates) {
  EXPECT_TRUE(infinite_order_certificate(rank_two_sample()).has_value());
  EXPECT_FALSE(infinite_order_certificate(xd_plus_d2()).has_value());
  EXPECT_FALSE(infinite_order_certificate(identity()).has_value());
  const OperatorSpec top = RankTwo{FunctionalSpec{{}, 1}, FunctionalSpec{{}, 1}, Poly{-1, 0, 1}, Poly::x()};
  EXPECT_TRUE(infinite_order_certificate(top).has_value());
}

// T[1] = 1, T[x] = x/2: Q_1 = -x Q_0 / 2, so Q_2 vanishes.
TEST(InfiniteOrder, WithheldWhenSomeQkVanishes) {
  const OperatorSpec op = RankTwo{FunctionalSpec{{1, 0}, 0}, FunctionalSpec{{0, 1}, 0}, Poly{1}, Poly{0, frac(1, 2)}};
  const auto rep = rep_prefix(op, 3);
  EXPECT_TRUE(rep.q[2].is_zero());
  EXPECT_FALSE(rep.q[3].is_zero());
  EXPECT_FALSE(infinite_order_certificate(op).has_value());
}

}  // namespace
