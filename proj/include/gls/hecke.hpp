#pragma once

#include <complex>
#include <cstdint>

#include "gls/gaussian.hpp"

namespace gls {

// |z|^{i kappa} (z/|z|)^p
std::complex<double> chi(double kappa, int p, std::complex<double> z);
// chi_{4p}(n) = (n/|n|)^{4p}, the Hecke character on ideals.
std::complex<double> chi4(int p, GaussianInt n);

struct ZetaValue {
  std::complex<double> value;
  double tail_bound = 0.0;
  std::int64_t terms = 0;
};

// Truncated Dirichlet series of zeta(s, p) over ideals with |n| <= cutoff,
// with a bound on the omitted tail. Requires Re s > 1.
ZetaValue zeta_hecke(std::complex<double> s, int p, double cutoff);
// Smoothly windowed lattice sum with the continuous remainder added back.
// The tail_bound field is the change against a window twice as large.
ZetaValue zeta_hecke_smooth(std::complex<double> s, int p, double radius = 60.0);

struct TauSigma {
  std::complex<double> tau;
  std::complex<double> sigma;
};

// tau_{s,p}(n) = sum_{(a)(b)=(n)} chi_{4p}(a/b)|a/b|^{2s},
// sigma_{s,p}(n) = sum_{(d)|(n)} chi_{4p}(d)|d|^{2s}.
TauSigma tau_sigma(std::complex<double> s, int p, GaussianInt n);

inline constexpr double kDefaultTruncationEpsilon = 0.3;

// |sigma_{1-s,p}(n)/zeta(s,p) - sum_{log|c| <= Y^eps} S(n,0;c) chi_{4p}(c)/|c|^{2s}|
double ramanujan_residual(std::complex<double> s, int p, GaussianInt n, double Y,
                          double eps = kDefaultTruncationEpsilon);

// sum over ideals (c) with log|c| <= Y^eps of mu(c) chi_{4p}(c)/|c|^{2s}: the
// truncated 1/zeta(s, p).
std::complex<double> inverse_zeta_truncated(std::complex<double> s, int p, double Y,
                                            double eps = kDefaultTruncationEpsilon);

}  // namespace gls
