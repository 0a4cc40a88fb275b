#pragma once

#include <complex>
#include <vector>

#include "gls/report.hpp"

namespace gls {

struct CutoffSpec {
  double inner = 0.5;
  double outer = 1.0;
};

// 0 on (0, 1/2], 1 on [1, inf), smooth monotone in between; eta(3/4) = 1/2.
double eta(double x);
// eta(1/x) - 1: 0 on (0, 1], -1 on [2, inf).
double psi(double x);

struct FourierQuad {
  double window = 600.0;  // oscillation count (times 2 pi) covered before the smooth cutoff
};

// f(w; v) = |w|^2 int int eta(|z|) h(w/z) e[-vz] dz/|z|^4, h(z) = exp(-|z|^2/T^2).
// Radial in both arguments and real-valued.
double f_kernel(std::complex<double> w, std::complex<double> v, double T, const FourierQuad& quad = {});
double f_kernel_radial(double W, double V, double T, const FourierQuad& quad = {});
// f(w; 0) written as pi T^2 + |w|^2 int int psi(|z|) h(wz) dz.
double f_kernel_zero_rewritten(double W, double T);

enum class FhatMethod { formula, direct };

// f^(u; v) = int int f(w; v) e[-uw] dw.
double f_hat(std::complex<double> u, std::complex<double> v, double T, FhatMethod method,
             const FourierQuad& quad = {});
double f_hat_formula(double U, double V, double T);
// Hankel transform of sampled f(.; V) for several |u| at once.
std::vector<double> f_hat_direct(const std::vector<double>& U, double V, double T, const FourierQuad& quad = {});

// |int int F e[-vz] dz - (pi i |v|)^{-2 gamma} int int Delta^gamma F e[-vz] dz| for the
// radial test function F(z) = eta(|z|/(2 rho)) exp(-|z|^2/s^2), Delta = d^2/dz dzbar.
double ibp_residual(std::complex<double> v, double rho, int gamma, double s = 2.0);

// Transform of k(z) = pi T^2 exp(-T^2|z|^2) by quadrature against pi^2 exp(-pi^2|u|^2/T^2).
double self_duality_residual(double u, double T);

// Sweeps.
Report verify_fhat_agreement(double T, const FourierQuad& quad = {});
Report verify_fhat_decay(double T);
Report verify_f_bound(double T);
Report verify_fhat_uniform(double T);
Report verify_fhat_log(double T);
Report verify_self_duality();

}  // namespace gls
