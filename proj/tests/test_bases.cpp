#include <gtest/gtest.h>

#include "polyop/bases.hpp"

namespace {

using namespace polyop;

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

Poly pow_poly(const Poly& p, std::size_t n) {
  Poly out{1};
  for (std::size_t i = 0; i < n; ++i) out *= p;
  return out;
}

TEST(Sequence, ExplicitAndPolynomial) {
  const SequenceSpec list = ExplicitList{{1, 4, 9}};
  EXPECT_EQ(sequence_at(list, 2), 9);
  try {
    sequence_at(list, 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::sequence_exhausted);
    EXPECT_EQ(e.index(), 3u);
  }
  const SequenceSpec sq = PolynomialInK{Poly{3, 2, 1}};  // k^2 + 2k + 3
  EXPECT_EQ(sequence_at(sq, 0), 3);
  EXPECT_EQ(sequence_at(sq, 4), 27);
  EXPECT_EQ(sequence_at(sq, 1000), 1002003);
}

TEST(Basis, Affine) {
  const BasisSpec b = AffineBasis{PolynomialInK{Poly{1}}, 1, 1};
  EXPECT_EQ(basis_poly(b, 3), Poly({1, 3, 3, 1}));
  const BasisSpec scaled = AffineBasis{ExplicitList{{2, 3, frac(1, 2)}}, -2, frac(1, 3)};
  EXPECT_EQ(basis_poly(scaled, 2), Poly({frac(1, 9), frac(-4, 3), 4}) * frac(1, 2));
  EXPECT_EQ(error_of([] { basis_prefix(AffineBasis{PolynomialInK{Poly{1}}, 0, 1}, 2); }), Errc::bad_parameter);
  EXPECT_EQ(error_of([] { basis_prefix(AffineBasis{ExplicitList{{1, 0}}, 1, 0}, 1); }), Errc::bad_parameter);
  EXPECT_EQ(error_of([] { basis_prefix(AffineBasis{ExplicitList{{1, 1}}, 1, 0}, 4); }), Errc::sequence_exhausted);
}

TEST(Basis, LegendreSmall) {
  EXPECT_EQ(basis_poly(LegendreBasis{}, 0), Poly{1});
  EXPECT_EQ(basis_poly(LegendreBasis{}, 1), Poly::x());
  EXPECT_EQ(basis_poly(LegendreBasis{}, 2), Poly({frac(-1, 2), 0, frac(3, 2)}));
  EXPECT_EQ(basis_poly(LegendreBasis{}, 3), Poly({0, frac(-3, 2), 0, frac(5, 2)}));
}

// Rodrigues: P_n = D^n (x^2 - 1)^n / (2^n n!).
TEST(Basis, LegendreMatchesRodrigues) {
  const auto legendre = basis_prefix(LegendreBasis{}, 14);
  for (std::size_t n = 0; n <= 14; ++n) {
    const Poly rodrigues =
        derivative(pow_poly(Poly{-1, 0, 1}, n), n) / (pow(Rational(2), n) * Rational(factorial(n)));
    EXPECT_EQ(legendre[n], rodrigues) << n;
    EXPECT_EQ(eval(legendre[n], 1), 1);
  }
}

TEST(Basis, HermiteSmall) {
  EXPECT_EQ(generalized_hermite(frac(1, 2), 0), Poly{1});
  EXPECT_EQ(generalized_hermite(frac(1, 2), 1), Poly::x());
  EXPECT_EQ(generalized_hermite(frac(1, 2), 2), Poly({frac(-1, 2), 0, 1}));
  EXPECT_EQ(generalized_hermite(1, 3), Poly({0, -3, 0, 1}));
  EXPECT_EQ(error_of([] { generalized_hermite(0, 2); }), Errc::bad_parameter);
  EXPECT_EQ(error_of([] { generalized_hermite(-1, 2); }), Errc::bad_parameter);
}

// With alpha = 1/2, 2^n H_n is the physicists' Hermite polynomial:
// h_{n+1} = 2x h_n - 2n h_{n-1}.
TEST(Basis, HermiteMatchesPhysicistsRecurrence) {
  const auto h = generalized_hermite_prefix(frac(1, 2), 10);
  std::vector<Poly> phys{Poly{1}, Poly{0, 2}};
  for (std::size_t n = 1; n < 10; ++n) phys.push_back(shift(phys[n], 1) * Rational(2) - phys[n - 1] * Rational(2 * n));
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(h[n] * pow(Rational(2), n), phys[n]) << n;
  EXPECT_EQ(phys[4], Poly({12, 0, -48, 0, 16}));
}

TEST(Basis, HermiteRescaling) {
  // H_n^(alpha)(x) = alpha^{n/2} He_n(x / sqrt(alpha)); with alpha = 4 this is 2^n He_n(x/2).
  const auto he = generalized_hermite_prefix(1, 8);
  const auto h4 = generalized_hermite_prefix(4, 8);
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(h4[n], compose_affine(he[n], frac(1, 2), 0) * pow(Rational(2), n));
}

TEST(Expansion, Examples) {
  const std::vector<Rational> legendre_coords{frac(1, 3), 0, frac(2, 3)};
  EXPECT_EQ(expand_in_basis(Poly::monomial(1, 2), LegendreBasis{}), legendre_coords);
  const std::vector<Rational> affine_coords{-1, 1};
  EXPECT_EQ(expand_in_basis(Poly::x(), AffineBasis{PolynomialInK{Poly{1}}, 1, 1}), affine_coords);
  EXPECT_TRUE(expand_in_basis(Poly{}, StandardBasis{}).empty());
  const std::vector<Rational> std_coords{3, 0, -2};
  EXPECT_EQ(expand_in_basis(Poly{3, 0, -2}, StandardBasis{}), std_coords);
}

TEST(Expansion, ShortPrefixIsRejected) {
  const auto basis = basis_prefix(StandardBasis{}, 1);
  EXPECT_EQ(error_of([&] { expand_in_prefix(Poly::monomial(1, 2), basis); }), Errc::sequence_exhausted);
}

TEST(Jensen, Examples) {
  const SequenceSpec ones = ExplicitList{{1, 1, 1}};
  EXPECT_EQ(jensen_reversed(ones, 2), Poly({1, 2, 1}));
  EXPECT_EQ(jensen_at_minus_one(ones, 0), 1);
  EXPECT_EQ(jensen_at_minus_one(ones, 2), 0);
  const SequenceSpec k = PolynomialInK{Poly{0, 1}};
  EXPECT_EQ(jensen_at_minus_one(k, 1), 1);
  EXPECT_EQ(jensen_at_minus_one(k, 2), 0);
  // gamma_j = 2^j: forward differences are all 1
  const SequenceSpec pow2 = ExplicitList{{1, 2, 4, 8, 16}};
  for (std::size_t i = 0; i <= 4; ++i) EXPECT_EQ(jensen_at_minus_one(pow2, i), 1);
  EXPECT_EQ(jensen_at_minus_one(pow2, 4), eval(jensen_reversed(pow2, 4), -1));
  EXPECT_EQ(error_of([&] { jensen_at_minus_one(ones, 3); }), Errc::sequence_exhausted);
}

// Polynomial eigenvalues of degree d have vanishing differences past d.
TEST(Jensen, DifferencesOfPolynomialVanish) {
  const SequenceSpec cubic = PolynomialInK{Poly{5, -1, frac(1, 2), 2}};
  EXPECT_EQ(jensen_at_minus_one(cubic, 3), 12);  // 3! * 2
  for (std::size_t k = 4; k <= 12; ++k) EXPECT_EQ(jensen_at_minus_one(cubic, k), 0);
}

}  // namespace
