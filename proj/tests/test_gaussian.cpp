#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "gls/gaussian.hpp"
#include "gls/rng.hpp"

using namespace gls;

namespace {

// Independent oracle: divisibility by exact rational division.
bool divides_naive(GaussianInt d, GaussianInt n) {
  const std::int64_t nd = d.re * d.re + d.im * d.im;
  const std::int64_t re = n.re * d.re + n.im * d.im;
  const std::int64_t im = n.im * d.re - n.re * d.im;
  return re % nd == 0 && im % nd == 0;
}

GaussianInt random_nonzero(CounterRng& rng, std::int64_t r) {
  GaussianInt z;
  do z = {rng.uniform_int(-r, r), rng.uniform_int(-r, r)};
  while (z.is_zero());
  return z;
}

}  // namespace

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical({3, 0}).gen(), GaussianInt(3, 0));
  EXPECT_EQ(canonical({0, -2}).gen(), GaussianInt(2, 0));
  EXPECT_EQ(canonical({-1, -1}).gen(), GaussianInt(1, 1));
}

TEST(Canonical, UnitInvariance) {
  CounterRng rng(1, 0);
  for (int k = 0; k < 500; ++k) {
    const auto z = random_nonzero(rng, 50);
    const auto c = canonical(z).gen();
    const double a = std::atan2(static_cast<double>(c.im), static_cast<double>(c.re));
    EXPECT_GE(a, 0.0);
    EXPECT_LT(a, M_PI / 2);
    for (const auto& u : kUnits) EXPECT_EQ(canonical(u * z).gen(), c);
  }
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd({1, 1}, {2, 0}).gen(), GaussianInt(1, 1));
  EXPECT_EQ(gcd({3, 0}, {5, 0}).gen(), GaussianInt(1, 0));
  EXPECT_EQ(gcd({4, 7}, {4, 7}).gen(), canonical({4, 7}).gen());
}

TEST(Gcd, DividesBothAndIsMaximal) {
  CounterRng rng(2, 0);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_nonzero(rng, 30), b = random_nonzero(rng, 30);
    const auto g = gcd(a, b).gen();
    EXPECT_TRUE(divides_naive(g, a));
    EXPECT_TRUE(divides_naive(g, b));
    // Any common divisor of small norm divides g.
    for (std::int64_t x = -6; x <= 6; ++x)
      for (std::int64_t y = -6; y <= 6; ++y) {
        const GaussianInt d{x, y};
        if (d.is_zero()) continue;
        if (divides_naive(d, a) && divides_naive(d, b)) EXPECT_TRUE(divides_naive(d, g));
      }
  }
}

TEST(Residues, Examples) {
  EXPECT_EQ(residues({1, 0}).size(), 1u);
  EXPECT_EQ(residues({1, 0})[0], GaussianInt(0, 0));
  EXPECT_EQ(residues({1, 1}).size(), 2u);
  EXPECT_EQ(residues({2, 0}).size(), 4u);
}

TEST(Residues, CompleteAndIncongruent) {
  for (std::int64_t x = -20; x <= 20; ++x)
    for (std::int64_t y = -20; y <= 20; ++y) {
      const GaussianInt c{x, y};
      if (c.is_zero() || norm(c) > 400) continue;
      const auto rs = residues(c);
      ASSERT_EQ(static_cast<std::int64_t>(rs.size()), norm(c));
      if (norm(c) > 60) continue;
      for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j) EXPECT_FALSE(divides_naive(c, rs[i] - rs[j]));
    }
}

TEST(Residues, IndexRoundTrip) {
  for (const GaussianInt c : {GaussianInt{3, 2}, GaussianInt{4, 0}, GaussianInt{5, 5}, GaussianInt{1, 7}}) {
    const ResidueSystem rs(c);
    CounterRng rng(3, 0);
    for (int k = 0; k < 100; ++k) {
      const GaussianInt z{rng.uniform_int(-100, 100), rng.uniform_int(-100, 100)};
      EXPECT_TRUE(divides_naive(c, rs[rs.index_of(z)] - z));
    }
    for (std::size_t a = 0; a < rs.size(); a += 3)
      for (std::size_t b = 0; b < rs.size(); b += 5) {
        EXPECT_TRUE(divides_naive(c, rs[rs.add(a, b)] - (rs[a] + rs[b])));
        EXPECT_TRUE(divides_naive(c, rs[rs.sub(a, b)] - (rs[a] - rs[b])));
      }
  }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(reduce(inverse({1, 0}, {3, 2}) - GaussianInt{1, 0}, {3, 2}), GaussianInt(0, 0));
  const auto x = inverse({0, 1}, {2, 1});
  EXPECT_TRUE(divides_naive({2, 1}, GaussianInt{0, 1} * x - GaussianInt{1, 0}));
  EXPECT_THROW(inverse({1, 1}, {2, 0}), std::domain_error);
}

TEST(Inverse, Property) {
  CounterRng rng(4, 0);
  int tested = 0;
  while (tested < 300) {
    const auto c = random_nonzero(rng, 15), a = random_nonzero(rng, 40);
    if (gcd(a, c).norm() != 1) continue;
    ++tested;
    EXPECT_TRUE(divides_naive(c, a * inverse(a, c) - GaussianInt{1, 0}));
  }
}

TEST(Factor, Examples) {
  const auto f2 = factor({2, 0});
  ASSERT_EQ(f2.size(), 1u);
  EXPECT_EQ(f2[0].prime.gen(), GaussianInt(1, 1));
  EXPECT_EQ(f2[0].exponent, 2);
  const auto f5 = factor({5, 0});
  ASSERT_EQ(f5.size(), 2u);
  std::set<std::int64_t> res;
  for (const auto& p : f5) {
    EXPECT_EQ(p.prime.norm(), 5);
    EXPECT_EQ(p.exponent, 1);
    res.insert(p.prime.gen().re * 10 + p.prime.gen().im);
  }
  EXPECT_EQ(res, (std::set<std::int64_t>{12, 21}));
  const auto f3 = factor({3, 0});
  ASSERT_EQ(f3.size(), 1u);
  EXPECT_EQ(f3[0].prime.gen(), GaussianInt(3, 0));
}

TEST(Factor, ProductAndDivisorCount) {
  CounterRng rng(5, 0);
  for (int k = 0; k < 200; ++k) {
    const auto n = random_nonzero(rng, 60);
    GaussianInt prod{1, 0};
    std::int64_t tau = 1;
    for (const auto& p : factor(n)) {
      for (int e = 0; e < p.exponent; ++e) prod = prod * p.prime.gen();
      tau *= p.exponent + 1;
    }
    EXPECT_TRUE(is_unit(exact_div(n, prod)));
    EXPECT_EQ(tau_div(n), tau);
    EXPECT_EQ(static_cast<std::int64_t>(divisors(n).size()), tau_div(n));
    // Brute-force divisor count over canonical generators of norm <= norm(n).
    if (norm(n) <= 400) {
      std::int64_t count = 0;
      for (const auto& d : annulus(0.0, modulus(n) + 1e-9))
        if (divides_naive(d.gen(), n)) ++count;
      EXPECT_EQ(count, tau_div(n));
    }
  }
}

TEST(Factor, TauMultiplicative) {
  CounterRng rng(6, 0);
  int tested = 0;
  while (tested < 100) {
    const auto a = random_nonzero(rng, 20), b = random_nonzero(rng, 20);
    if (gcd(a, b).norm() != 1) continue;
    ++tested;
    EXPECT_EQ(tau_div(a * b), tau_div(a) * tau_div(b));
  }
}

TEST(Divisors, Examples) {
  const auto d = divisors({1, 1});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].gen(), GaussianInt(1, 0));
  EXPECT_EQ(d[1].gen(), GaussianInt(1, 1));
  EXPECT_EQ(tau_div({1, 1}), 2);
  EXPECT_EQ(tau_div({2, 0}), 3);
}

TEST(Annulus, Examples) {
  const auto a = annulus(0.0, 1.5);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].gen(), GaussianInt(1, 0));
  EXPECT_EQ(a[1].gen(), GaussianInt(1, 1));
}

TEST(Annulus, UnionWithoutOverlap) {
  for (const auto& [n1, n2, n3] : {std::tuple{0.0, 2.0, 5.0}, std::tuple{1.5, 3.0, 7.5}, std::tuple{2.0, 2.5, 10.0}}) {
    auto lo = annulus(n1, n2), hi = annulus(n2, n3), all = annulus(n1, n3);
    std::set<std::pair<std::int64_t, std::int64_t>> s;
    for (const auto& v : lo) s.insert({v.gen().re, v.gen().im});
    for (const auto& v : hi) EXPECT_TRUE(s.insert({v.gen().re, v.gen().im}).second);
    EXPECT_EQ(s.size(), all.size());
    for (const auto& v : all) EXPECT_TRUE(s.count({v.gen().re, v.gen().im}));
  }
}

TEST(Moebius, Values) {
  EXPECT_EQ(moebius({1, 0}), 1);
  EXPECT_EQ(moebius({1, 1}), -1);
  EXPECT_EQ(moebius({2, 0}), 0);
  EXPECT_EQ(moebius({5, 0}), 1);
  EXPECT_EQ(moebius({3, 0}), -1);
}

TEST(Arithmetic, OverflowIsLoud) {
  const GaussianInt big{std::int64_t{1} << 62, 0};
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_THROW(big + big, std::overflow_error);
}

TEST(Divmod, RemainderInFundamentalDomain) {
  CounterRng rng(7, 0);
  for (int k = 0; k < 500; ++k) {
    const auto c = random_nonzero(rng, 20);
    const GaussianInt a{rng.uniform_int(-500, 500), rng.uniform_int(-500, 500)};
    const auto [q, r] = divmod(a, c);
    EXPECT_EQ(q * c + r, a);
    const std::complex<double> t = to_complex(r) / to_complex(c);
    EXPECT_GT(t.real(), -0.5 - 1e-12);
    EXPECT_LE(t.real(), 0.5 + 1e-12);
    EXPECT_GT(t.imag(), -0.5 - 1e-12);
    EXPECT_LE(t.imag(), 0.5 + 1e-12);
  }
}

TEST(Literals, Grammar) {
  EXPECT_EQ(parse_gaussian("3-2i"), GaussianInt(3, -2));
  EXPECT_EQ(parse_gaussian("-1+0i"), GaussianInt(-1, 0));
  EXPECT_EQ(parse_gaussian("+4+7i"), GaussianInt(4, 7));
  for (const char* bad : {"1+", "3", "1 + 2i", "1+2", "i", "1+2j", "", "1++2i"})
    EXPECT_THROW(parse_gaussian(bad), std::invalid_argument) << bad;
  EXPECT_NEAR(std::abs(parse_complex("2@1.5707963267948966") - std::complex<double>(0, 2)), 0.0, 1e-15);
  EXPECT_EQ(parse_complex("0.5-1.25i"), std::complex<double>(0.5, -1.25));
  EXPECT_EQ(parse_complex(to_string_complex({0.1, -1.0 / 3.0})), std::complex<double>(0.1, -1.0 / 3.0));
}
