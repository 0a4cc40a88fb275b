#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "gls/bessel.hpp"
#include "gls/rng.hpp"
#include "gls/special.hpp"

using namespace gls;
using cplx = std::complex<double>;

TEST(Gamma, ClosedForms) {
  EXPECT_NEAR(std::abs(gls::gamma(5.0) - 24.0), 0.0, 1e-11);
  EXPECT_NEAR(std::abs(gls::gamma(0.5) - std::sqrt(M_PI)), 0.0, 1e-13);
  CounterRng rng(31, 0);
  for (int k = 0; k < 200; ++k) {
    const double x = rng.uniform() * 20 - 9.7;
    EXPECT_NEAR(gls::gamma(cplx(x)).real() / std::tgamma(x), 1.0, 1e-12) << x;
    // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
    const double t = rng.uniform() * 10 - 5;
    EXPECT_NEAR(std::norm(gls::gamma(cplx(0.5, t))) * std::cosh(M_PI * t) / M_PI, 1.0, 1e-12);
  }
  EXPECT_EQ(rgamma(-3.0), cplx(0.0));
}

TEST(BesselJ, Examples) {
  EXPECT_NEAR(std::abs(bessel_j(0.0, 0.0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(bessel_j(0.5, 1.0) - std::sqrt(2.0 / M_PI) * std::sin(1.0)), 0.0, 1e-14);
  EXPECT_NEAR(bessel_j(0.5, 1.0).real(), 0.6713967071418031, 1e-14);
}

TEST(BesselJ, MatchesStdOnRealAxis) {
  for (double nu : {0.0, 0.3, 1.0, 2.5, 7.0})
    for (double x : {0.1, 1.0, 4.0, 11.0, 19.0})
      // The power series loses about exp(x) ulps to cancellation.
      EXPECT_NEAR(bessel_j(nu, x).real(), std::cyl_bessel_j(nu, x), x < 12.0 ? 1e-11 : 1e-9) << nu << " " << x;
  for (int n : {0, 1, 2, 5})
    for (double x : {0.5, 10.0, 60.0, 300.0}) EXPECT_NEAR(bessel_jn(n, x), std::cyl_bessel_j(n, x), 1e-12);
}

TEST(BesselJ, RecurrenceComplexOrder) {
  CounterRng rng(32, 0);
  for (int k = 0; k < 100; ++k) {
    const cplx nu(rng.uniform() * 4 - 2, rng.uniform() * 6 - 3);
    const cplx z(rng.uniform() * 10 - 5, rng.uniform() * 10 - 5);
    const cplx lhs = bessel_j(nu - 1.0, z) + bessel_j(nu + 1.0, z);
    const cplx rhs = 2.0 * nu / z * bessel_j(nu, z);
    EXPECT_LT(std::abs(lhs - rhs), 1e-9 * (1 + std::abs(rhs)));
  }
}

TEST(KernelJ, Definition) {
  const cplx z(1.3, -0.4);
  const double kappa = 0.7;
  const int p = 2;
  const cplx want = bessel_j(cplx(p, kappa), z) * bessel_j(cplx(-p, kappa), std::conj(z));
  EXPECT_LT(std::abs(kernel_J(kappa, p, z) - want), 1e-12);
}

TEST(BoldJ, SymmetryUnderNegation) {
  for (double kappa : {0.3, 1.0, 2.2})
    for (int p : {0, 1, 3})
      for (const cplx z : {cplx(0.7, 0.2), cplx(2.0, -1.5), cplx(-3.0, 0.5)}) {
        const cplx a = bold_J(kappa, p, z), b = bold_J(-kappa, -p, z);
        EXPECT_LT(std::abs(a - b), 1e-9 * (1 + std::abs(a)));
      }
}

TEST(BoldJ, ContinuousAtKappaZero) {
  const cplx z(1.1, 0.6);
  for (int p : {0, 1}) {
    const cplx a = bold_J(0.0, p, z);
    const cplx b = 0.5 * (bold_J(1e-3, p, z) + bold_J(-1e-3, p, z));
    EXPECT_LT(std::abs(a - b), 1e-4 * (1 + std::abs(a)));
  }
}

TEST(LineRep, Examples) {
  EXPECT_LT(boldj_line_rep_residual(1.0, 0, 1.0, 0.0), 1e-6);
  EXPECT_LT(boldj_line_rep_residual(0.5, 1, 2.0, M_PI / 3), 1e-6);
  EXPECT_LT(boldj_line_rep_residual(2.0, 2, 5.0, 0.0), 1e-5);
}

TEST(CircleFormula, Examples) {
  EXPECT_LT(circle_formula_residual(0, 1.0), 1e-12);
  EXPECT_LT(circle_formula_residual(1, cplx(0.0, 2.0)), 1e-10);
  EXPECT_LT(circle_formula_residual(3, cplx(1.0, 1.0)), 1e-10);
}

TEST(Trh, ExamplesAndHyperbolicIdentity) {
  const auto o = DualPoint::make(0.0, 0.0);
  EXPECT_EQ(trh(o), cplx(1.0));
  EXPECT_EQ(trh_prime(o), cplx(0.0));
  const auto a = DualPoint::make(0.8, 0.0);
  EXPECT_NEAR(std::abs(trh(a) - std::cosh(0.8)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(trh_prime(a) - std::sinh(0.8)), 0.0, 1e-15);
  CounterRng rng(33, 0);
  for (int k = 0; k < 500; ++k) {
    const auto pt = DualPoint::make(rng.uniform() * 6 - 3, rng.uniform() * 10 - 5);
    const cplx t = trh(pt), tp = trh_prime(pt);
    EXPECT_LT(std::abs(t * t - tp * tp - 1.0), 1e-12 * (1 + std::norm(t)));
    EXPECT_GE(pt.omega, 0.0);
    EXPECT_LT(pt.omega, M_PI);
  }
}

TEST(Weights, ClosedForms) {
  const SpectralParams sp{2.0, 3.0, 2.5};
  for (double r : {0.0, 0.2, -0.7})
    for (double om : {0.0, 0.4, 2.9}) {
      const auto w = weights(DualPoint::make(r, om), sp);
      EXPECT_NEAR(w.k, std::sqrt(M_PI) * 2.0 * std::exp(-4.0 * r * r), 1e-13);
      double th = 0.0;
      for (int p = -20; p <= 20; ++p) th += std::exp(-std::pow(3.0 * (om + M_PI * p), 2));
      EXPECT_NEAR(w.theta, std::sqrt(M_PI) * 3.0 * th, 1e-12);
      // f = -k'' theta - k theta''
      const double h = 1e-4;
      const double kdd = (k_weight(r + h, 2.0) - 2 * k_weight(r, 2.0) + k_weight(r - h, 2.0)) / (h * h);
      const double tdd = (theta_weight(om + h, 3.0) - 2 * theta_weight(om, 3.0) + theta_weight(om - h, 3.0)) / (h * h);
      EXPECT_NEAR(w.f, -kdd * w.theta - w.k * tdd, 1e-4 * (1 + std::abs(w.f)));
      EXPECT_NEAR(theta_weight(om + M_PI, 3.0), w.theta, 1e-12);
    }
}

TEST(Weights, CutoffSupport) {
  const double T = 5.0, s = std::pow(T, 0.3) / T;
  EXPECT_EQ(tau_cut(0.99 * s, -0.99 * s, T), 1.0);
  EXPECT_EQ(tau_cut(2.01 * s, 0.0, T), 0.0);
  EXPECT_EQ(tau_cut(0.0, -2.01 * s, T), 0.0);
}

TEST(Weights, GAtOrigin) {
  EXPECT_NEAR(g_weight(0.0, 0.0, cplx(3.0, 1.0), cplx(-2.0, 0.5)), std::norm(cplx(-2.0, 0.5)), 1e-13);
}

// (d_r^2 + d_omega^2) cos(Re(v trh - w trh')) + g cos(...) = 0
TEST(Weights, LaplacianIdentity) {
  CounterRng rng(34, 0);
  for (int k = 0; k < 50; ++k) {
    const cplx v(rng.uniform() * 4 - 2, rng.uniform() * 4 - 2), w(rng.uniform() * 4 - 2, rng.uniform() * 4 - 2);
    const double r = rng.uniform() * 2 - 1, om = rng.uniform() * 3;
    const auto F = [&](double a, double b) {
      const cplx z(a, b);
      return std::cos((v * std::cosh(z) - w * std::sinh(z)).real());
    };
    const double h = 1e-3;
    const double lap = (F(r + h, om) + F(r - h, om) + F(r, om + h) + F(r, om - h) - 4 * F(r, om)) / (h * h);
    EXPECT_LT(std::abs(lap + g_weight(r, om, v, w) * F(r, om)), 1e-4 * (1 + std::norm(v) + std::norm(w)));
  }
}

TEST(HBessel, ThreeWayAgreement) {
  const SpectralParams sp{3.0, 3.0, 3.0};
  const cplx z = std::polar(2.0, M_PI / 4), u = std::sqrt(2.0);
  const cplx d = H_bessel(z, u, sp, {}, HMethod::direct).value;
  const cplx a = H_bessel(z, u, sp, {}, HMethod::rep1).value;
  const cplx b = H_bessel(z, u, sp, {}, HMethod::rep2).value;
  EXPECT_LT(std::abs(a - d), 1e-5 * std::abs(d));
  EXPECT_LT(std::abs(b - d), 1e-5 * std::abs(d));
}

TEST(IVariant, FirstAtOriginIsIntegralOfF) {
  // Over R x R/piZ both k'' and theta'' integrate to zero, so int int f = 0.
  EXPECT_LT(std::abs(I_variant(0.0, 0.0, SpectralParams::square(3), {}, IForm::first).value), 1e-8);
}

TEST(IVariant, MainVanishesAtZeroW) {
  EXPECT_EQ(I_variant(cplx(2.0, 1.0), 0.0, SpectralParams::square(4), {}, IForm::main).value, cplx(0.0));
}

TEST(IVariant, FirstAndSecondFormsAgree) {
  const auto sp = SpectralParams::square(8);
  for (const auto& [v, w] : {std::pair{cplx(3, 1), cplx(2, -1)}, std::pair{cplx(0.5, 0), cplx(6, 2)},
                             std::pair{cplx(-4, 3), cplx(1, 1)}}) {
    const cplx a = I_variant(v, w, sp, {}, IForm::first).value, b = I_variant(v, w, sp, {}, IForm::second).value;
    EXPECT_LT(std::abs(a - b), 1e-6 * (1 + std::abs(a)));
  }
}

TEST(IVariant, QuadratureSelfConsistency) {
  QuadratureSpec q;
  q.tol = 0.0;
  const auto r = I_variant(cplx(2, 1), cplx(3, -2), SpectralParams::square(4), q, IForm::first);
  EXPECT_LT(r.error, 1e-7 * std::max(1.0, std::abs(r.value)));
}

TEST(GaussianFT, Examples) {
  EXPECT_LT(gaussian_ft_residual(0.0, 3.0), 1e-12);
  EXPECT_LT(gaussian_ft_residual(3.0, 4.0), 1e-8 * 10);
  EXPECT_LT(gaussian_ft_residual(cplx(4, 4), 8.0), 1e-8 * 33);
}

TEST(ThetaPoisson, ExamplesAndPeriodicity) {
  EXPECT_LT(poisson_theta_residual(0.0, 1.0), 1e-10);
  EXPECT_LT(poisson_theta_residual(M_PI / 2, 3.0), 1e-10);
  for (double om : {0.1, 0.9, 2.0}) EXPECT_NEAR(theta_weight(om, 2.0), theta_weight(om + M_PI, 2.0), 1e-12);
}

TEST(DecayMargin, BoundedAndFrozen) {
  EXPECT_LT(i_natural_decay_margin(2.0, 3.0, SpectralParams::square(6), 0), 10.0);
  // T = 6, |w| = 3T, |v| <= T, gamma = 1; the worst margin on this grid is 87.57.
  const auto sp = SpectralParams::square(6);
  double worst = 0.0;
  for (double vr : {0.0, 6.0})
    for (double ang : {0.0, 2.0}) worst = std::max(worst, i_natural_decay_margin(std::polar(vr, 0.3), std::polar(18.0, ang), sp, 1));
  EXPECT_NEAR(worst, 87.572, 5e-3);
  EXPECT_LE(worst, 90.0);
}

TEST(Lemma41, ConstantAtT4) {
  QuadratureSpec q;
  q.tol = 1e-6;
  const auto r = verify_lemma41(4.0, 8.0, 2, 2, q);
  EXPECT_TRUE(r.passed);
  EXPECT_LE(r.lhs, 50.0);
}

TEST(Sweeps, ExactIdentities) {
  EXPECT_TRUE(verify_circle_formula().passed);
  EXPECT_TRUE(verify_theta_poisson().passed);
  EXPECT_TRUE(verify_gaussian_ft().passed);
}
