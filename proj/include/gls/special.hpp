#pragma once

#include <complex>

namespace gls {

// Gamma function for complex argument (Lanczos, g = 7, 9 terms; reflection
// for Re z < 0.5).
std::complex<double> gamma(std::complex<double> z);
// 1/Gamma(z), exactly 0 at the poles z = 0, -1, -2, ...
std::complex<double> rgamma(std::complex<double> z);

inline constexpr double kBesselSeriesRadius = 40.0;

// J_nu(z) by its power series with the principal branch of (z/2)^nu.
// Negative integer orders use J_{-n} = (-1)^n J_n. Throws std::domain_error
// for |z| > radius and std::runtime_error if 500 terms do not converge.
std::complex<double> bessel_j(std::complex<double> nu, std::complex<double> z,
                              double radius = kBesselSeriesRadius);

// J_n(x) for integer n and real x >= 0, valid for large x.
double bessel_jn(int n, double x);

}  // namespace gls
