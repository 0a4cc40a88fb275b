#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "gls/exp_sums.hpp"
#include "gls/gaussian.hpp"
#include "gls/rng.hpp"

using namespace gls;
using cplx = std::complex<double>;

namespace {

bool divides_naive(GaussianInt d, GaussianInt n) {
  const std::int64_t nd = d.re * d.re + d.im * d.im;
  const std::int64_t re = n.re * d.re + n.im * d.im;
  const std::int64_t im = n.im * d.re - n.re * d.im;
  return re % nd == 0 && im % nd == 0;
}

// Residue representatives from the box [0, N)^2, deduplicated by brute force.
std::vector<GaussianInt> naive_residues(GaussianInt c) {
  const std::int64_t N = norm(c);
  std::vector<GaussianInt> reps;
  for (std::int64_t a = 0; a < N && static_cast<std::int64_t>(reps.size()) < N; ++a)
    for (std::int64_t b = 0; b < N && static_cast<std::int64_t>(reps.size()) < N; ++b) {
      const GaussianInt z{a, b};
      bool fresh = true;
      for (const auto& r : reps)
        if (divides_naive(c, z - r)) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(z);
    }
  return reps;
}

cplx e_naive(cplx z) { return std::exp(cplx(0.0, 2.0 * M_PI * z.real())); }

cplx e_over(GaussianInt x, GaussianInt c) { return e_naive(to_complex(x) / to_complex(c)); }

// Inverse by scanning the representatives; zero if none.
bool naive_inverse(GaussianInt a, GaussianInt c, const std::vector<GaussianInt>& reps, GaussianInt& out) {
  for (const auto& b : reps)
    if (divides_naive(c, a * b - GaussianInt{1, 0})) {
      out = b;
      return true;
    }
  return false;
}

cplx naive_kloosterman(GaussianInt m, GaussianInt n, GaussianInt c) {
  const auto reps = naive_residues(c);
  cplx s = 0.0;
  for (const auto& a : reps) {
    GaussianInt ai;
    if (!naive_inverse(a, c, reps, ai)) continue;
    s += e_over(a * m + ai * n, c);
  }
  return s;
}

cplx naive_v(GaussianInt q, GaussianInt m, GaussianInt n, GaussianInt c) {
  const auto reps = naive_residues(c);
  cplx s = 0.0;
  for (const auto& a : reps) {
    GaussianInt ai, bi;
    if (!naive_inverse(a, c, reps, ai) || !naive_inverse(q - a, c, reps, bi)) continue;
    s += e_over(ai * m + bi * n, c);
  }
  return s;
}

GaussianInt rnd(CounterRng& rng, std::int64_t r) { return {rng.uniform_int(-r, r), rng.uniform_int(-r, r)}; }

GaussianInt rnd_nonzero(CounterRng& rng, std::int64_t r) {
  GaussianInt z;
  do z = rnd(rng, r);
  while (z.is_zero());
  return z;
}

}  // namespace

TEST(EOf, Examples) {
  EXPECT_NEAR(std::abs(e_of(0.0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e_of(cplx(0.0, 3.7)) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e_of(0.5) + 1.0), 0.0, 1e-15);
}

TEST(Kloosterman, Examples) {
  EXPECT_NEAR(std::abs(kloosterman(1, 1, {1, 1}).value - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(kloosterman(1, 0, {1, 1}).value + 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(kloosterman({3, 5}, {-2, 1}, 1).value - 1.0), 0.0, 1e-12);
}

TEST(Kloosterman, MatchesNaiveOracle) {
  CounterRng rng(11, 0);
  for (int k = 0; k < 60; ++k) {
    GaussianInt c;
    do c = rnd_nonzero(rng, 6);
    while (norm(c) > 40);
    const auto m = rnd(rng, 20), n = rnd(rng, 20);
    EXPECT_NEAR(std::abs(kloosterman(m, n, c).value - naive_kloosterman(m, n, c)), 0.0, 1e-10 * norm(c));
  }
}

TEST(Kloosterman, SymmetryRealityPeriodicity) {
  CounterRng rng(12, 0);
  for (int k = 0; k < 200; ++k) {
    GaussianInt c;
    do c = rnd_nonzero(rng, 20);
    while (norm(c) > 400);
    const auto m = rnd(rng, 50), n = rnd(rng, 50);
    const ModulusContext ctx(c);
    const cplx s = ctx.kloosterman(m, n).value;
    EXPECT_LT(std::abs(s - ctx.kloosterman(n, m).value), 1e-10);
    EXPECT_LT(std::abs(s.imag()), 1e-10 * norm(c));
    const auto a = rnd(rng, 5), b = rnd(rng, 5);
    EXPECT_LT(std::abs(s - ctx.kloosterman(m + a * c, n + b * c).value), 1e-9);
  }
}

TEST(Ramanujan, BoundAndConsistency) {
  for (std::int64_t x = -20; x <= 20; x += 1)
    for (std::int64_t y = -20; y <= 20; y += 3) {
      const GaussianInt c{x, y};
      if (c.is_zero() || norm(c) > 400) continue;
      const ModulusContext ctx(c);
      for (const GaussianInt n : {GaussianInt{1, 0}, GaussianInt{2, 0}, GaussianInt{3, 1}, GaussianInt{6, 6}, c}) {
        const std::int64_t r = ramanujan_sum(n, c);
        EXPECT_LE(std::abs(r), gcd(n, c).norm());
        EXPECT_NEAR(ctx.kloosterman(n, 0).value.real(), static_cast<double>(r), 1e-9 * norm(c));
      }
    }
}

TEST(VSum, Examples) {
  EXPECT_NEAR(std::abs(v_sum({2, 1}, {1, 3}, {-4, 0}, 1).value - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(v_sum(1, 1, 1, {1, 1}).value), 0.0, 1e-12);
}

TEST(VSum, MatchesNaiveOracle) {
  CounterRng rng(13, 0);
  for (int k = 0; k < 40; ++k) {
    GaussianInt c;
    do c = rnd_nonzero(rng, 6);
    while (norm(c) > 40);
    const auto q = rnd(rng, 10), m = rnd(rng, 10), n = rnd(rng, 10);
    EXPECT_NEAR(std::abs(v_sum(q, m, n, c).value - naive_v(q, m, n, c)), 0.0, 1e-10 * norm(c));
  }
}

// alpha -> -alpha gives V_{-q}(-m,-n;c) = V_q(m,n;c); negating m, n alone conjugates.
TEST(VSum, NegationSymmetry) {
  CounterRng rng(14, 0);
  for (int k = 0; k < 100; ++k) {
    GaussianInt c;
    do c = rnd_nonzero(rng, 10);
    while (norm(c) > 100);
    const auto q = rnd(rng, 10), m = rnd(rng, 10), n = rnd(rng, 10);
    const cplx v = v_sum(q, m, n, c).value;
    EXPECT_LT(std::abs(v_sum(-q, -m, -n, c).value - v), 1e-9);
    EXPECT_LT(std::abs(v_sum(q, -m, -n, c).value - std::conj(v)), 1e-9);
  }
}

TEST(VDft, Examples) {
  EXPECT_LT(v_dft_residual(1, 1, 1, 1), 1e-12);
  EXPECT_LT(v_dft_residual(1, 1, 1, {1, 1}), 1e-12);
  CounterRng rng(15, 0);
  for (int k = 0; k < 10; ++k) EXPECT_LT(v_dft_residual(rnd(rng, 9), rnd(rng, 9), rnd(rng, 9), {2, 1}), 1e-9);
}

TEST(Decomposition, Examples) {
  EXPECT_LT(decomposition_residual(3, {1, 2}, 1), 1e-12);
  EXPECT_LT(decomposition_residual(1, 1, {1, 1}), 1e-9);
  EXPECT_LT(decomposition_residual(1, 2, 3), 1e-9);
}

TEST(Weil, Examples) {
  EXPECT_NEAR(weil_margin({2, 3}, {1, -1}, 1), 1.0, 1e-12);
  EXPECT_NEAR(weil_margin(1, 1, {1, 1}), 1.0 / (2.0 * std::sqrt(2.0)), 1e-12);
  CounterRng rng(16, 0);
  for (int k = 0; k < 30; ++k) {
    GaussianInt c;
    do c = rnd_nonzero(rng, 100);
    while (norm(c) > 10000);
    EXPECT_LE(weil_margin(rnd(rng, 1000), rnd(rng, 1000), c), 1.0 + 1e-9);
  }
}

TEST(Sweeps, SmallRangesPass) {
  EXPECT_TRUE(verify_v_dft(60, 5, 3).passed);
  EXPECT_TRUE(verify_decomposition(60, 5, 3).passed);
  EXPECT_TRUE(verify_weil(60, 5, 3).passed);
  EXPECT_TRUE(verify_ramanujan_bound(60, 5, 3).passed);
}
