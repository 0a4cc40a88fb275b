#include "gls/hecke.hpp"

#include <cmath>
#include <stdexcept>

#include "gls/exp_sums.hpp"
#include "gls/numeric.hpp"

namespace gls {

cplx chi(double kappa, int p, cplx z) {
  if (z == 0.0) throw std::domain_error("chi: z = 0");
  const double r = std::abs(z);
  return std::exp(cplx(0.0, kappa * std::log(r) + p * std::arg(z)));
}

cplx chi4(int p, GaussianInt n) {
  if (p == 0) return 1.0;
  return std::polar(1.0, 4.0 * p * std::atan2(static_cast<double>(n.im), static_cast<double>(n.re)));
}

namespace {

// |n|^{-2s} = exp(-s log N(n))
cplx norm_power(std::int64_t nrm, cplx s) { return std::exp(-s * std::log(static_cast<double>(nrm))); }

// Calls fn(gen) for every first-quadrant ideal generator with |gen| <= radius.
template <class F>
void for_each_ideal(double radius, F&& fn) {
  const auto r = static_cast<std::int64_t>(std::floor(radius));
  const double r2 = radius * radius;
  for (std::int64_t a = 1; a <= r; ++a)
    for (std::int64_t b = 0; b <= r; ++b) {
      const std::int64_t nn = a * a + b * b;
      if (static_cast<double>(nn) > r2) break;
      fn(GaussianInt(a, b));
    }
}

}  // namespace

ZetaValue zeta_hecke(cplx s, int p, double cutoff) {
  if (!(s.real() > 1.0)) throw std::domain_error("zeta_hecke: Re s must exceed 1");
  if (!(cutoff >= 1.0)) throw std::domain_error("zeta_hecke: cutoff must be >= 1");
  CompensatedSum<cplx> acc;
  ZetaValue out;
  for_each_ideal(cutoff, [&](GaussianInt n) {
    acc.add(chi4(p, n) * norm_power(norm(n), s));
    ++out.terms;
  });
  out.value = acc.value();
  // Ideal count up to R is at most (pi/4)(R + sqrt 2)^2.
  const double sigma = s.real();
  out.tail_bound = 0.5 * kPi * std::pow(1.0 + std::sqrt(2.0) / cutoff, 2) * std::pow(cutoff, 2.0 - 2.0 * sigma) /
                   (2.0 * sigma - 2.0);
  return out;
}

namespace {

cplx zeta_smooth_once(cplx s, int p, double radius, std::int64_t& terms) {
  CompensatedSum<cplx> acc;
  for_each_ideal(radius, [&](GaussianInt n) {
    const double w = smooth_window(modulus(n), 0.5 * radius, radius);
    if (w == 0.0) return;
    acc.add(w * chi4(p, n) * norm_power(norm(n), s));
    ++terms;
  });
  cplx value = acc.value();
  if (p == 0) {
    // (1/4) * 2 pi int rho^{1-2s} (1 - W) d rho over the transition and beyond.
    const auto g = [&](double rho) {
      return (1.0 - smooth_window(rho, 0.5 * radius, radius)) * std::exp((1.0 - 2.0 * s) * std::log(rho));
    };
    const cplx transition = gauss_legendre_panels(g, 0.5 * radius, radius, [&](double) { return radius / 32.0; });
    const cplx beyond = std::exp((2.0 - 2.0 * s) * std::log(radius)) / (2.0 * s - 2.0);
    value += 0.5 * kPi * (transition + beyond);
  }
  return value;
}

}  // namespace

ZetaValue zeta_hecke_smooth(cplx s, int p, double radius) {
  if (!(s.real() > 1.0)) throw std::domain_error("zeta_hecke_smooth: Re s must exceed 1");
  ZetaValue out;
  out.value = zeta_smooth_once(s, p, radius, out.terms);
  std::int64_t extra = 0;
  out.tail_bound = std::abs(zeta_smooth_once(s, p, 2.0 * radius, extra) - out.value);
  return out;
}

TauSigma tau_sigma(cplx s, int p, GaussianInt n) {
  if (n.is_zero()) throw std::domain_error("tau_sigma: n = 0");
  const auto nrm = static_cast<double>(norm(n));
  CompensatedSum<cplx> tau, sigma;
  for (const auto& a : divisors(n)) {
    const GaussianInt b = exact_div(n, a.gen());
    const double ratio = static_cast<double>(a.norm()) / nrm * static_cast<double>(a.norm());  // N(a)/N(b)
    // chi_{4p}(a/b) = chi_{4p}(a) conj(chi_{4p}(b)); |a/b|^{2s} = (N(a)/N(b))^s.
    tau.add(chi4(p, a.gen()) * std::conj(chi4(p, b)) * std::exp(s * std::log(ratio)));
    sigma.add(chi4(p, a.gen()) * std::exp(s * std::log(static_cast<double>(a.norm()))));
  }
  return {tau.value(), sigma.value()};
}

cplx inverse_zeta_truncated(cplx s, int p, double Y, double eps) {
  const double radius = std::exp(std::pow(Y, eps));
  CompensatedSum<cplx> acc;
  for_each_ideal(radius, [&](GaussianInt c) {
    const int mu = moebius(c);
    if (mu != 0) acc.add(static_cast<double>(mu) * chi4(p, c) * norm_power(norm(c), s));
  });
  return acc.value();
}

double ramanujan_residual(cplx s, int p, GaussianInt n, double Y, double eps) {
  if (n.is_zero()) throw std::domain_error("ramanujan_residual: n = 0");
  if (!(Y >= 2.0)) throw std::domain_error("ramanujan_residual: Y must be >= 2");
  const ZetaValue z = zeta_hecke_smooth(s, p);
  const cplx sigma = tau_sigma(1.0 - s, p, n).sigma;
  const double propagated = z.tail_bound * std::abs(sigma) / std::norm(z.value);
  if (propagated > 1e-2 / Y) throw std::runtime_error("ramanujan_residual: zeta accuracy insufficient");
  const double radius = std::exp(std::pow(Y, eps));
  CompensatedSum<cplx> acc;
  for_each_ideal(radius, [&](GaussianInt c) {
    const std::int64_t r = ramanujan_sum(n, c);
    if (r != 0) acc.add(static_cast<double>(r) * chi4(p, c) * norm_power(norm(c), s));
  });
  return std::abs(sigma / z.value - acc.value());
}

}  // namespace gls
