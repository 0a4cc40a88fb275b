#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>

#include "gls/fourier.hpp"
#include "gls/rng.hpp"

using namespace gls;
using cplx = std::complex<double>;

namespace {

// Independent radial oracle: f(w; v) = 2 pi |w|^2 int eta(r) exp(-|w|^2/(r T)^2) J0(2 pi |v| r) r^-3 dr,
// adaptive Gauss-Kronrod on the cutoff ramp, fixed panels up to r = 3000.
double f_oracle(double W, double V, double T) {
  using boost::math::quadrature::gauss_kronrod;
  const double a = W * W / (T * T);
  const auto g = [&](double r) { return eta(r) * std::exp(-a / (r * r)) * std::cyl_bessel_j(0.0, 2 * M_PI * V * r) / (r * r * r); };
  double acc = gauss_kronrod<double, 31>::integrate(g, 0.5, 1.0, 20, 1e-13);
  const double step = V > 0 ? std::min(1.0, 0.5 / V) : 1.0;
  for (double lo = 1.0; lo < 3000.0; lo += step) acc += gauss_kronrod<double, 31>::integrate(g, lo, lo + step, 0, 0);
  return 2 * M_PI * W * W * acc;
}

}  // namespace

TEST(Eta, SupportAndSymmetry) {
  EXPECT_EQ(eta(0.4), 0.0);
  EXPECT_EQ(eta(1.2), 1.0);
  EXPECT_NEAR(eta(0.75), 0.5, 1e-15);
  double prev = 0.0;
  for (double x = 0.5; x <= 1.0; x += 0.01) {
    EXPECT_GE(eta(x), prev);
    prev = eta(x);
    EXPECT_NEAR(eta(x) + eta(1.5 - x), 1.0, 1e-14);
  }
  EXPECT_EQ(psi(0.9), 0.0);
  EXPECT_EQ(psi(2.5), -1.0);
}

TEST(FKernel, VanishesAtZeroW) {
  EXPECT_EQ(f_kernel(0.0, cplx(1, 2), 4.0), 0.0);
  EXPECT_EQ(f_kernel(0.0, 0.0, 4.0), 0.0);
}

TEST(FKernel, RadialInBothArguments) {
  const double a = f_kernel(cplx(1.2, 0.5), cplx(0.3, -0.4), 3.0);
  const double b = f_kernel(std::polar(std::abs(cplx(1.2, 0.5)), 2.0), std::polar(0.5, -1.0), 3.0);
  EXPECT_NEAR(a, b, 1e-12 * std::abs(a));
}

TEST(FKernel, ZeroFrequencyRewrite) {
  for (double T : {2.0, 4.0})
    for (double W : {0.3, 1.0, 5.0, 12.0}) {
      const double direct = f_kernel_radial(W, 0.0, T), rew = f_kernel_zero_rewritten(W, T);
      EXPECT_NEAR(rew, direct, 1e-6 * std::abs(direct)) << W << " " << T;
    }
}

TEST(FKernel, MatchesGaussKronrodOracle) {
  for (const auto& [W, V] : {std::pair{0.7, 0.0}, std::pair{2.0, 0.5}, std::pair{5.0, 1.3}, std::pair{1.0, 3.0}}) {
    const double want = f_oracle(W, V, 4.0);
    EXPECT_NEAR(f_kernel_radial(W, V, 4.0), want, 1e-6 * (1 + std::abs(want))) << W << " " << V;
  }
}

TEST(FHat, FormulaAgreesWithDirect) {
  const double a = f_hat(0.2, cplx(1, 1), 4.0, FhatMethod::formula);
  const double b = f_hat(0.2, cplx(1, 1), 4.0, FhatMethod::direct);
  EXPECT_LT(std::abs(a - b), 1e-4);
}

TEST(FHat, UndefinedAtOrigin) { EXPECT_THROW(f_hat_formula(0.0, 0.0, 4.0), std::domain_error); }

TEST(Ibp, Examples) {
  EXPECT_EQ(ibp_residual(2.0, 1.0, 0), 0.0);
  EXPECT_LT(ibp_residual(2.0, 1.0, 1), 1e-6);
}

TEST(SelfDuality, GaussianIsSelfDual) {
  for (double T : {1.0, 3.0})
    for (double u : {0.0, 0.3, 1.1}) EXPECT_LT(self_duality_residual(u, T), 1e-10);
}

TEST(Sweeps, BoundsHold) {
  EXPECT_TRUE(verify_self_duality().passed);
  EXPECT_TRUE(verify_f_bound(4).passed);
  EXPECT_TRUE(verify_fhat_decay(4).passed);
  EXPECT_TRUE(verify_fhat_log(4).passed);
}
