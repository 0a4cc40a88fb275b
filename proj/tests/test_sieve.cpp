#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "gls/exp_sums.hpp"
#include "gls/gaussian.hpp"
#include "gls/sieve.hpp"

using namespace gls;
using cplx = std::complex<double>;

namespace {

// Sigma from the Kloosterman sum S(n, 0; c) evaluated directly.
double sigma_oracle(const CoeffSeq& a, double T, double c_max) {
  double acc = 0.0;
  for (const auto& c : annulus(0.0, c_max)) {
    double inner = 0.0;
    for (const auto& [n, an] : a.entries) inner += an * kloosterman(n.gen(), 0, c.gen()).value.real();
    acc += inner * inner / std::pow(static_cast<double>(c.norm()), 2);
  }
  return T * T * acc;
}

}  // namespace

TEST(Coefficients, FirstIdealsAndDeterminism) {
  const CoeffSeq a = coeff_first(1.0, 2, 3);
  ASSERT_EQ(a.size(), 2u);
  auto it = a.entries.begin();
  EXPECT_EQ(it->first.gen(), GaussianInt(1, 1));
  EXPECT_EQ(std::next(it)->first.gen(), GaussianInt(2, 0));
  EXPECT_EQ(coeff_gen(4, CoeffDist::gaussian, 11).entries, coeff_gen(4, CoeffDist::gaussian, 11).entries);
  EXPECT_NE(coeff_gen(4, CoeffDist::gaussian, 11).entries, coeff_gen(4, CoeffDist::gaussian, 12).entries);
  const CoeffSeq u = coeff_gen(4, CoeffDist::unit, 1);
  u.validate();
  for (const auto& [n, v] : u.entries) {
    EXPECT_GT(modulus(n.gen()), 4.0);
    EXPECT_LE(modulus(n.gen()), 8.0);
    EXPECT_EQ(std::abs(v), 1.0);
  }
}

TEST(Sigma, MatchesDirectKloostermanOracle) {
  const CoeffSeq a = coeff_gen(3, CoeffDist::gaussian, 5);
  const double got = sigma_bilinear(a, 2.0, 12.0).value;
  EXPECT_NEAR(got, sigma_oracle(a, 2.0, 12.0), 1e-10 * std::abs(got));
}

TEST(Sigma, QuadraticFormPolarization) {
  const CoeffSeq a = coeff_gen(3, CoeffDist::gaussian, 5), b = coeff_gen(3, CoeffDist::gaussian, 6);
  const auto S = [](const CoeffSeq& x) { return sigma_bilinear(x, 3.0, 15.0).value; };
  const double lhs = S(CoeffSeq::combine(a, 1, b, 1)) + S(CoeffSeq::combine(a, 1, b, -1));
  EXPECT_NEAR(lhs, 2 * S(a) + 2 * S(b), 1e-10 * lhs);
  EXPECT_NEAR(S(a.scaled(-3)), 9 * S(a), 1e-10 * S(a) * 9);
}

TEST(GeometricP, QuadraticScaling) {
  const CoeffSeq a = coeff_first(1.0, 2, 2);
  const auto sp = SpectralParams::square(3.0);
  const double p1 = geometric_P(a, sp, 1.0, PForm::kloosterman_H);
  const double p2 = geometric_P(a.scaled(2.0), sp, 1.0, PForm::kloosterman_H);
  EXPECT_NEAR(p2, 4 * p1, 1e-10 * std::abs(p2));
}

TEST(Poisson, DiagonalVanishes) {
  FCache cache(4.0);
  const auto s = poisson_sides({1, 1}, {2, 1}, {2, 1}, cache);
  EXPECT_EQ(std::abs(s.lhs), 0.0);
  EXPECT_EQ(s.rhs, 0.0);
}

TEST(Poisson, ExamplePairs) {
  EXPECT_LT(poisson_qsum_residual({1, 1}, {1, 0}, {2, 0}, 4.0), 2e-5);
  EXPECT_LT(poisson_qsum_residual({2, 0}, {1, 1}, {1, 0}, 4.0), 2e-5);
}

TEST(ZeroCoefficients, EveryTermVanishes) {
  CoeffSeq zero;
  zero.N = 1.0;
  const auto split = q_poisson_split(zero, 4.0, 2.0);
  EXPECT_EQ(split.Q, 0.0);
  EXPECT_EQ(split.Z, 0.0);
  EXPECT_EQ(split.S, 0.0);
  EXPECT_EQ(eisenstein_E(zero, 3.0).value, 0.0);
  EXPECT_EQ(sigma_bilinear(zero, 3.0, 10.0).value, 0.0);
}

TEST(LargeSieve, ZeroSequenceGivesZero) {
  std::vector<std::pair<GaussianInt, cplx>> b;
  for (const auto& n : annulus(8, 16)) b.emplace_back(n.gen(), 0.0);
  for (auto kind : {LsKind::classical, LsKind::quadform, LsKind::ramanujan_ineq})
    EXPECT_EQ(ls_sides(kind, LsParams{}, b).lhs, 0.0) << to_string(kind);
}

TEST(LargeSieve, ReproducibleAndWithinBudget) {
  const auto a = ls_ratios(LsKind::quadform, LsParams{}, 5, 9);
  const auto b = ls_ratios(LsKind::quadform, LsParams{}, 5, 9);
  EXPECT_EQ(a.lhs, b.lhs);
  EXPECT_TRUE(a.passed);
  EXPECT_TRUE(ls_ratios(LsKind::mean_value, LsParams{}, 5, 9).passed);
  EXPECT_TRUE(ls_ratios(LsKind::classical, LsParams{}, 5, 9).passed);
}

TEST(LargeSieve, KindNamesRoundTrip) {
  for (auto k : {LsKind::classical, LsKind::hybrid, LsKind::cor1, LsKind::cor2, LsKind::quadform, LsKind::mean_value,
                 LsKind::ramanujan_ineq})
    EXPECT_EQ(parse_ls_kind(to_string(k)), k);
  EXPECT_THROW(parse_ls_kind("bogus"), std::invalid_argument);
}

TEST(Cost, GuardThrows) {
  EXPECT_THROW(check_cost(2e8, "test"), CostExceeded);
  EXPECT_NO_THROW(check_cost(10, "test"));
  LsParams p;
  p.C = 3000;
  p.N = 3000;
  EXPECT_THROW(ls_ratios(LsKind::classical, p, 1, 1), CostExceeded);
}

TEST(QForms, KloostermanEqualsVSum) { EXPECT_TRUE(verify_q_forms(4.0, 50, 7).passed); }

TEST(Eisenstein, WeightIdentity) { EXPECT_TRUE(verify_eis_weight(4.0).passed); }

TEST(Eisenstein, ZeroTermPositive) {
  const auto z = e_zero_split(coeff_gen(4, CoeffDist::gaussian, 3), 4.0);
  EXPECT_GT(z.E0, 0.0);
  EXPECT_GT(z.sigma_over_32, 0.0);
  EXPECT_LT(z.ratio(), 1.0);
}
