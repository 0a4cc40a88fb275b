#pragma once

#include <complex>
#include <cstdint>

#include "gls/report.hpp"

namespace gls {

struct SpectralParams {
  double K = 1.0;
  double P = 1.0;
  double T = 1.0;

  static SpectralParams square(double T);
  // Throws std::domain_error unless K, P, T >= 1.
  void validate() const;
  bool is_square() const { return K == P && P == T; }
  // h(kappa, p) = exp(-(kappa/K)^2 - (p/P)^2)
  double h(double kappa, double p) const;
};

// Point of R x R/piZ, omega reduced to [0, pi).
struct DualPoint {
  double r = 0.0;
  double omega = 0.0;
  static DualPoint make(double r, double omega);
};

struct QuadratureSpec {
  double r_max = 0.0;         // 0 selects 5.5/K
  int steps_per_period = 8;   // nodes per phase period
  double tol = 1e-7;          // relative step-halving tolerance
  int p_max = 0;              // 0 selects ceil(6.2 P)
};

struct Integral {
  std::complex<double> value;
  double error = 0.0;  // change under step halving
  std::int64_t nodes = 0;
};

// J_{i kappa + p}(z) J_{i kappa - p}(conj z)
std::complex<double> kernel_J(double kappa, int p, std::complex<double> z);
// (2 pi^2 / sin(pi nu)) (J_{-nu,-p}(z) - J_{nu,p}(z)), nu = i kappa; removable
// singularity at kappa = 0 handled by a symmetric Richardson limit.
std::complex<double> bold_J(double kappa, int p, std::complex<double> z);

// 4 pi (-1)^p int chibar_{2p}(cosh(r + i phi)) J_{2p}(2x|cosh(r + i phi)|) e^{2irk} dr
Integral bold_J_line(double kappa, int p, double x, double phi, const QuadratureSpec& quad = {});
double boldj_line_rep_residual(double kappa, int p, double x, double phi, const QuadratureSpec& quad = {});
double circle_formula_residual(int p, std::complex<double> a);

std::complex<double> trh(const DualPoint& pt);
std::complex<double> trh_prime(const DualPoint& pt);

// Scalar weights on the dual plane; omega is taken mod pi where periodic.
double k_weight(double r, double K);
double k_weight_dd(double r, double K);
double theta_weight(double omega, double P);
double theta_weight_dd(double omega, double P);
double f_weight(double r, double omega, const SpectralParams& sp);
double f_natural(double r, double omega, double T);
double tau_cut(double r, double omega, double T, double eps = 0.3);
double g_weight(double r, double omega, std::complex<double> v, std::complex<double> w);

struct Weights {
  double k = 0.0;
  double theta = 0.0;
  double f = 0.0;
  double f_nat = 0.0;
  double tau_cut = 0.0;
};
Weights weights(const DualPoint& pt, const SpectralParams& sp, double eps = 0.3);

enum class HMethod { direct, rep1, rep2 };
enum class IForm { first, second, natural, main };

Integral H_bessel(std::complex<double> z, std::complex<double> u, const SpectralParams& sp,
                  const QuadratureSpec& quad, HMethod method);
Integral I_variant(std::complex<double> v, std::complex<double> w, const SpectralParams& sp,
                   const QuadratureSpec& quad, IForm form, double eps = 0.3);

double gaussian_ft_residual(std::complex<double> w, double T);
double poisson_theta_residual(double omega, double P);
double i_natural_decay_margin(std::complex<double> v, std::complex<double> w, const SpectralParams& sp, int gamma,
                              const QuadratureSpec& quad = {});

// Sweeps used by the verification suites.
Report verify_line_rep(const QuadratureSpec& quad = {});
Report verify_circle_formula();
Report verify_three_way(int grid, const QuadratureSpec& quad = {});
Report verify_theta_poisson();
Report verify_gaussian_ft();
// max |I_first - main| / (|v| + |w|) over |v|, |w| <= vmax; budget 50.
Report verify_lemma41(double T, double vmax, int radial, int angular, const QuadratureSpec& quad = {});

}  // namespace gls
