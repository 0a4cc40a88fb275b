#include "gls/special.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/bessel.hpp>

#include "gls/numeric.hpp"

namespace gls {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,      -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) { return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()); }

cplx gamma_right(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return std::sqrt(kTwoPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

}  // namespace

cplx gamma(cplx z) {
  if (is_nonpositive_integer(z)) throw std::domain_error("gamma: pole");
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma_right(1.0 - z));
  return gamma_right(z);
}

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.real() < 0.5) return std::sin(kPi * z) * gamma_right(1.0 - z) / kPi;
  return 1.0 / gamma_right(z);
}

cplx bessel_j(cplx nu, cplx z, double radius) {
  if (std::abs(z) > radius) throw std::domain_error("bessel_j: argument outside series radius");
  if (is_nonpositive_integer(nu) && nu.real() < 0.0) {
    const int n = static_cast<int>(-nu.real());
    const cplx v = bessel_j(cplx(n, 0.0), z, radius);
    return (n % 2 == 0) ? v : -v;
  }
  if (z == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu.real() > 0.0) return 0.0;
    throw std::domain_error("bessel_j: singular at z = 0");
  }
  const cplx half = 0.5 * z;
  const cplx q = -half * half;
  cplx term = std::exp(nu * std::log(half)) * rgamma(nu + 1.0);
  CompensatedSum<cplx> sum;
  sum.add(term);
  // The series terms may grow until k exceeds |nu| and |z|/2; only stop after that.
  const double k_min = std::abs(nu) + std::abs(half);
  for (int k = 0; k < 500; ++k) {
    term *= q / (static_cast<double>(k + 1) * (nu + static_cast<double>(k + 1)));
    sum.add(term);
    if (k + 1 > k_min && std::abs(term) <= 1e-17 * std::abs(sum.value())) return sum.value();
    if (term == 0.0 && k + 1 > k_min) return sum.value();
  }
  throw std::runtime_error("bessel_j: series did not converge");
}

double bessel_jn(int n, double x) { return boost::math::cyl_bessel_j(n, x); }

}  // namespace gls
