#include "gls/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gls/gaussian.hpp"
#include "gls/numeric.hpp"
#include "gls/parallel.hpp"
#include "gls/special.hpp"

namespace gls {

SpectralParams SpectralParams::square(double T) {
  SpectralParams sp{T, T, T};
  sp.validate();
  return sp;
}

void SpectralParams::validate() const {
  if (!(K >= 1.0 && P >= 1.0 && T >= 1.0)) throw std::domain_error("spectral parameters must be >= 1");
}

double SpectralParams::h(double kappa, double p) const { return std::exp(-(kappa / K) * (kappa / K) - (p / P) * (p / P)); }

namespace {

// omega mod pi in [lo, lo + pi)
double reduce_pi(double omega, double lo) {
  double x = std::fmod(omega - lo, kPi);
  if (x < 0.0) x += kPi;
  return lo + x;
}

}  // namespace

DualPoint DualPoint::make(double r, double omega) {
  DualPoint pt{r, reduce_pi(omega, 0.0)};
  if (pt.omega >= kPi) pt.omega = 0.0;
  return pt;
}

cplx kernel_J(double kappa, int p, cplx z) {
  if (z == 0.0) throw std::domain_error("kernel_J: z = 0");
  const cplx nu(0.0, kappa);
  return bessel_j(nu + static_cast<double>(p), z) * bessel_j(nu - static_cast<double>(p), std::conj(z));
}

namespace {

cplx bold_J_raw(double kappa, int p, cplx z) {
  // sin(pi i kappa) = i sinh(pi kappa)
  const cplx s(0.0, std::sinh(kPi * kappa));
  return 2.0 * kPi * kPi / s * (kernel_J(-kappa, -p, z) - kernel_J(kappa, p, z));
}

}  // namespace

cplx bold_J(double kappa, int p, cplx z) {
  if (z == 0.0) throw std::domain_error("bold_J: z = 0");
  if (std::abs(kappa) >= 1e-3) return bold_J_raw(kappa, p, z);
  const auto sym = [&](double d) { return 0.5 * (bold_J_raw(kappa + d, p, z) + bold_J_raw(kappa - d, p, z)); };
  return (4.0 * sym(2e-3) - sym(4e-3)) / 3.0;
}

Integral bold_J_line(double kappa, int p, double x, double phi, const QuadratureSpec& quad) {
  if (!(x > 0.0)) throw std::domain_error("bold_J_line: x must be positive");
  const double cphi = std::cos(phi), sphi = std::sin(phi);
  // s = sinh r; cosh(r + i phi) = sqrt(1+s^2) cos(phi) + i s sin(phi)
  const double S = std::max(2000.0 / x, 40.0);
  double h = std::min({0.1, kPi / (8.0 * x)});
  if (std::abs(cphi) > 0.0) h = std::min(h, std::max(0.2 * std::abs(cphi), 1e-3));
  h *= 8.0 / quad.steps_per_period;
  const auto g = [&](double s) -> cplx {
    const double w = smooth_window(std::abs(s), 0.5 * S, S);
    if (w == 0.0) return 0.0;
    const double q = std::sqrt(1.0 + s * s);
    const cplx C(q * cphi, s * sphi);
    const double a = std::abs(C);
    const cplx chibar = (p == 0 || a == 0.0) ? cplx(1.0) : std::pow(std::conj(C) / a, 2 * p);
    const double r = std::asinh(s);
    return w * chibar * bessel_jn(2 * p, 2.0 * x * a) * std::polar(1.0, 2.0 * r * kappa) / q;
  };
  // Nested grids: fine nodes j h/2, coarse nodes the even j.
  const auto n = static_cast<std::int64_t>(std::ceil(S / (0.5 * h)));
  CompensatedSum<cplx> fine, coarse;
  for (std::int64_t j = -n; j <= n; ++j) {
    const cplx val = g(0.5 * h * static_cast<double>(j));
    fine.add(val);
    if (j % 2 == 0) coarse.add(val);
  }
  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  const cplx vf = 4.0 * kPi * sign * 0.5 * h * fine.value();
  const cplx vc = 4.0 * kPi * sign * h * coarse.value();
  Integral out{vf, std::abs(vf - vc), 2 * n + 1};
  if (quad.tol > 0.0 && out.error > quad.tol * std::max(1.0, std::abs(vf)))
    throw std::runtime_error("bold_J_line: quadrature did not converge");
  return out;
}

double boldj_line_rep_residual(double kappa, int p, double x, double phi, const QuadratureSpec& quad) {
  if (!(x > 0.0 && x <= 20.0)) throw std::domain_error("line representation: x must lie in (0, 20]");
  const cplx z = std::polar(x, phi);
  return std::abs(bold_J(kappa, p, z) - bold_J_line(kappa, p, x, phi, quad).value);
}

double circle_formula_residual(int p, cplx a) {
  constexpr int kNodes = 128;
  CompensatedSum<cplx> acc;
  for (int j = 0; j < kNodes; ++j) {
    const double om = kTwoPi * j / kNodes;
    acc.add(std::exp(cplx(0.0, 2.0 * p * om + (a * std::polar(1.0, om)).real())));
  }
  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  const cplx rhs = sign * acc.value() / static_cast<double>(kNodes);
  const double r = std::abs(a);
  cplx lhs;
  if (r == 0.0) {
    lhs = (p == 0) ? 1.0 : 0.0;
  } else {
    lhs = std::pow(std::conj(a) / r, 2 * p) * bessel_jn(2 * p, r);
  }
  return std::abs(lhs - rhs);
}

cplx trh(const DualPoint& pt) { return std::cosh(cplx(pt.r, pt.omega)); }
cplx trh_prime(const DualPoint& pt) { return std::sinh(cplx(pt.r, pt.omega)); }

double k_weight(double r, double K) { return std::sqrt(kPi) * K * std::exp(-(K * r) * (K * r)); }

double k_weight_dd(double r, double K) {
  const double K2 = K * K;
  return std::sqrt(kPi) * K * (4.0 * K2 * K2 * r * r - 2.0 * K2) * std::exp(-K2 * r * r);
}

double theta_weight(double omega, double P) {
  const double w = reduce_pi(omega, -0.5 * kPi);
  double acc = 0.0;
  for (int p = -3; p <= 3; ++p) acc += k_weight(w + kPi * p, P);
  return acc;
}

double theta_weight_dd(double omega, double P) {
  const double w = reduce_pi(omega, -0.5 * kPi);
  double acc = 0.0;
  for (int p = -3; p <= 3; ++p) acc += k_weight_dd(w + kPi * p, P);
  return acc;
}

double f_weight(double r, double omega, const SpectralParams& sp) {
  return -k_weight_dd(r, sp.K) * theta_weight(omega, sp.P) - k_weight(r, sp.K) * theta_weight_dd(omega, sp.P);
}

double f_natural(double r, double omega, double T) {
  return -k_weight_dd(r, T) * k_weight(omega, T) - k_weight(r, T) * k_weight_dd(omega, T);
}

namespace {

double eta(double x) { return smooth_step(2.0 * x - 1.0); }

}  // namespace

double tau_cut(double r, double omega, double T, double eps) {
  const double scale = T / std::pow(T, eps);
  return eta(2.0 - std::abs(r) * scale) * eta(2.0 - std::abs(omega) * scale);
}

double g_weight(double r, double omega, cplx v, cplx w) {
  const double sr = std::sinh(r), so = std::sin(omega), cr = std::cosh(r);
  const cplx cross = cplx(std::sinh(2.0 * r), std::sin(2.0 * omega)) * v * std::conj(w);
  return (sr * sr + so * so) * std::norm(v) + (cr * cr - so * so) * std::norm(w) - cross.real();
}

Weights weights(const DualPoint& pt, const SpectralParams& sp, double eps) {
  Weights out;
  out.k = k_weight(pt.r, sp.K);
  out.theta = theta_weight(pt.omega, sp.P);
  out.f = f_weight(pt.r, pt.omega, sp);
  out.f_nat = f_natural(pt.r, pt.omega, sp.T);
  out.tau_cut = tau_cut(pt.r, pt.omega, sp.T, eps);
  return out;
}

namespace {

// Region of the (r, omega) plane with the integrand's phase-rate bound
// 1 + a_plus e^r + a_minus e^{-r} and the weight scales in r and omega.
struct Region {
  double r_lo, r_hi;
  double w_lo, w_len;
  double a_plus, a_minus;
  double r_scale;
  double w_scale;
  bool periodic = true;  // otherwise Gauss-Legendre panels in omega
};

// Outer Gauss-Legendre panels in r sized to the local phase rate; inner
// trapezoid in omega for periodic or compactly supported integrands, panels otherwise.
template <class F>
cplx dual_pass(const F& f, const Region& g, int spp, std::int64_t& nodes) {
  const double refine = 8.0 / spp;
  const auto rate = [&](double r) { return 1.0 + g.a_plus * std::exp(r) + g.a_minus * std::exp(-r); };
  const auto inner = [&](double r) -> cplx {
    if (!g.periodic) {
      const double wd = refine * std::min(0.5 * g.w_scale, kTwoPi / rate(r));
      std::int64_t cnt = 0;
      const cplx v = gauss_legendre_panels([&](double om) {
        ++cnt;
        return f(r, om);
      }, g.w_lo, g.w_lo + g.w_len, [&](double) { return wd; });
      nodes += cnt;
      return v;
    }
    const double m = g.w_len * (spp * rate(r) / kTwoPi + 4.0 / (refine * g.w_scale));
    const auto M = static_cast<std::int64_t>(std::ceil(m)) + 8;
    const double d = g.w_len / static_cast<double>(M);
    CompensatedSum<cplx> acc;
    for (std::int64_t j = 0; j < M; ++j) acc.add(f(r, g.w_lo + d * static_cast<double>(j)));
    nodes += M;
    return d * acc.value();
  };
  const auto width = [&](double r) {
    const double ahead = rate(r + 0.5 * g.r_scale);
    return refine * std::min(0.5 * g.r_scale, kTwoPi / std::max(rate(r), ahead));
  };
  return gauss_legendre_panels(inner, g.r_lo, g.r_hi, width);
}

template <class F>
Integral dual_integral(const F& f, const Region& g, const QuadratureSpec& quad, const char* what) {
  Integral out;
  const cplx coarse = dual_pass(f, g, quad.steps_per_period, out.nodes);
  out.value = dual_pass(f, g, 2 * quad.steps_per_period, out.nodes);
  out.error = std::abs(out.value - coarse);
  if (quad.tol > 0.0 && out.error > quad.tol * std::max(1.0, std::abs(out.value)))
    throw std::runtime_error(std::string(what) + ": quadrature did not converge");
  return out;
}

double r_extent(const QuadratureSpec& quad, double K) { return quad.r_max > 0.0 ? quad.r_max : 5.5 / K; }

Integral H_direct(cplx z, cplx u, const SpectralParams& sp, const QuadratureSpec& quad) {
  if (sp.K > 4.0 || sp.P > 4.0) throw std::domain_error("H_bessel direct: K, P must be <= 4");
  const double L = std::log(std::abs(u)), A = std::arg(u);
  const int pmax = quad.p_max > 0 ? quad.p_max : static_cast<int>(std::ceil(6.2 * sp.P));
  const double kmax = 6.2 * sp.K;
  const auto pass = [&](double step, std::int64_t& nodes) {
    // Offset nodes avoid kappa = 0.
    const auto n = static_cast<int>(std::ceil(kmax / step));
    std::vector<int> ps;
    for (int p = -pmax; p <= pmax; ++p) ps.push_back(p);
    const auto slices = parallel_map<cplx>(ps.size(), [&](std::size_t i) {
      const int p = ps[i];
      CompensatedSum<cplx> acc;
      for (int j = -n; j < n; ++j) {
        const double kappa = (j + 0.5) * step;
        const double wgt = sp.h(kappa, p) * std::cos(2.0 * kappa * L + 2.0 * p * A) * (kappa * kappa + p * p);
        if (wgt == 0.0) continue;
        acc.add(wgt * bold_J(kappa, p, z));
      }
      return step * acc.value();
    });
    CompensatedSum<cplx> acc;
    for (const auto& s : slices) acc.add(s);
    nodes += static_cast<std::int64_t>(ps.size()) * 2 * n;
    return acc.value();
  };
  Integral out;
  const double step = 0.1 * 8.0 / quad.steps_per_period;
  const cplx coarse = pass(step, out.nodes);
  out.value = pass(0.5 * step, out.nodes);
  out.error = std::abs(out.value - coarse);
  if (quad.tol > 0.0 && out.error > quad.tol * std::max(1.0, std::abs(out.value)))
    throw std::runtime_error("H_bessel direct: quadrature did not converge");
  return out;
}

}  // namespace

Integral H_bessel(cplx z, cplx u, const SpectralParams& sp, const QuadratureSpec& quad, HMethod method) {
  sp.validate();
  if (z == 0.0 || u == 0.0) throw std::domain_error("H_bessel: z and u must be nonzero");
  if (method == HMethod::direct) return H_direct(z, u, sp, quad);
  const cplx v = z * u + z / u, w = z * u - z / u;
  const double R = r_extent(quad, sp.K);
  // v trh - w trh' = (z/u) e^zeta + (zu) e^{-zeta}
  const Region g{-R, R, 0.0, kPi, std::abs(z / u), std::abs(z * u), 1.0 / sp.K, 1.0 / sp.P};
  if (method == HMethod::rep1) {
    const auto f = [&](double r, double om) -> cplx {
      const cplx zeta(r, om);
      return std::cos((v * std::cosh(zeta) - w * std::sinh(zeta)).real()) * f_weight(r, om, sp);
    };
    return dual_integral(f, g, quad, "H_bessel rep1");
  }
  const auto f = [&](double r, double om) -> cplx {
    const cplx zeta(r, om);
    return std::cos((v * std::cosh(zeta) - w * std::sinh(zeta)).real()) * g_weight(r, om, v, w) *
           k_weight(r, sp.K) * theta_weight(om, sp.P);
  };
  return dual_integral(f, g, quad, "H_bessel rep2");
}

Integral I_variant(cplx v, cplx w, const SpectralParams& sp, const QuadratureSpec& quad, IForm form, double eps) {
  sp.validate();
  if ((form == IForm::natural || form == IForm::main) && !sp.is_square())
    throw std::domain_error("I_variant: natural and main forms need K = P = T");
  if (form == IForm::main) {
    const double T = sp.T;
    return {kPi * kPi * std::norm(w) * std::exp(-std::norm(w) / (4.0 * T * T)), 0.0, 0};
  }
  const double amp = 0.5 * (std::abs(v) + std::abs(w));
  if (form == IForm::natural) {
    const double rho = 1.5 * std::pow(sp.T, eps) / sp.T;
    const Region g{-rho, rho, -rho, 2.0 * rho, amp, amp, std::min(rho / 10.0, 1.0 / sp.T), std::min(rho / 10.0, 1.0 / sp.T), false};
    const auto f = [&](double r, double om) -> cplx {
      const double cut = tau_cut(r, om, sp.T, eps);
      if (cut == 0.0) return 0.0;
      const cplx zeta(r, om);
      return std::exp(cplx(0.0, (v * (std::cosh(zeta) - 1.0)).real())) * std::cos((w * std::sinh(zeta)).real()) *
             f_natural(r, om, sp.T) * cut;
    };
    return dual_integral(f, g, quad, "I_variant natural");
  }
  const double R = r_extent(quad, sp.K);
  // omega over [-pi/2, pi/2): one period of R/piZ centred on the peak at 0. The
  // integrand is not pi-periodic; trapezoid only once theta has decayed at the edges.
  const bool edge_negligible = 0.5 * kPi * sp.P > 6.5;
  const Region g{-R, R, -0.5 * kPi, kPi, amp, amp, 1.0 / sp.K, 1.0 / sp.P, edge_negligible};
  if (form == IForm::first) {
    const auto f = [&](double r, double om) -> cplx {
      const cplx zeta(r, om);
      return std::exp(cplx(0.0, (v * (std::cosh(zeta) - 1.0)).real())) * std::cos((w * std::sinh(zeta)).real()) *
             f_weight(r, om, sp);
    };
    return dual_integral(f, g, quad, "I_variant first");
  }
  const auto f = [&](double r, double om) -> cplx {
    const cplx zeta(r, om);
    return std::exp(cplx(0.0, (v * (std::cosh(zeta) - 1.0) - w * std::sinh(zeta)).real())) *
           g_weight(r, om, v, w) * k_weight(r, sp.K) * theta_weight(om, sp.P);
  };
  return dual_integral(f, g, quad, "I_variant second");
}

double gaussian_ft_residual(cplx w, double T) {
  if (!(T >= 1.0)) throw std::domain_error("gaussian_ft_residual: T must be >= 1");
  // The double trapezoid sum factorises: cos(a r - b omega) = Re(e^{iar} e^{-ib omega}).
  const double a = w.real(), b = w.imag();
  const double h = std::min(0.25 / T, kPi / (8.0 * (1.0 + std::abs(w))));
  const auto n = static_cast<int>(std::ceil(6.5 / (T * h)));
  const auto moments = [&](double freq, cplx& m0, cplx& m2) {
    CompensatedSum<cplx> s0, s2;
    for (int j = -n; j <= n; ++j) {
      const double x = h * j;
      const cplx e = std::polar(1.0, freq * x);
      s0.add(k_weight(x, T) * e);
      s2.add(k_weight_dd(x, T) * e);
    }
    m0 = h * s0.value();
    m2 = h * s2.value();
  };
  cplx r0, r2, w0, w2;
  moments(a, r0, r2);
  moments(-b, w0, w2);
  const double lhs = (-r2 * w0 - r0 * w2).real();
  const double rhs = kPi * kPi * std::norm(w) * std::exp(-std::norm(w) / (4.0 * T * T));
  return std::abs(lhs - rhs);
}

double poisson_theta_residual(double omega, double P) {
  if (!(P >= 1.0)) throw std::domain_error("poisson_theta_residual: P must be >= 1");
  // exp(-(p/P)^2) < 1e-17 once |p| > 6.3 P
  const int pmax = static_cast<int>(std::ceil(6.3 * P));
  CompensatedSum<double> lhs;
  for (int p = -pmax; p <= pmax; ++p) lhs.add(std::cos(2.0 * omega * p) * std::exp(-(p / P) * (p / P)));
  return std::abs(lhs.value() - theta_weight(omega, P));
}

double i_natural_decay_margin(cplx v, cplx w, const SpectralParams& sp, int gamma, const QuadratureSpec& quad) {
  if (gamma < 0 || gamma > 2) throw std::domain_error("decay margin: gamma must be 0, 1 or 2");
  if (gamma > 0 && w == 0.0) throw std::domain_error("decay margin: w must be nonzero");
  const double T = sp.T;
  const double I = std::abs(I_variant(v, w, sp, quad, IForm::natural).value);
  double budget = T * T;
  if (gamma > 0) {
    const double aw = std::abs(w);
    budget *= std::pow(T / aw + std::norm(v) / (T * aw * aw * aw), 2 * gamma);
  }
  return I / budget;
}

Report verify_line_rep(const QuadratureSpec& quad) {
  const double t0 = now_seconds();
  struct Case {
    double kappa;
    int p;
    double x, phi;
  };
  std::vector<Case> cases;
  for (double kappa : {0.5, 1.0, 2.0})
    for (int p : {0, 1, 2})
      for (double x : {0.5, 1.0, 2.0, 5.0})
        for (double phi : {0.0, kPi / 4.0}) cases.push_back({kappa, p, x, phi});
  const auto res = parallel_map<double>(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    return boldj_line_rep_residual(c.kappa, c.p, c.x, c.phi, quad);
  });
  const auto it = std::max_element(res.begin(), res.end());
  const auto& worst = cases[static_cast<std::size_t>(it - res.begin())];
  Report r("line-rep", *it, 1e-5);
  r.params["cases"] = cases.size();
  r.params["worst_kappa"] = worst.kappa;
  r.params["worst_p"] = worst.p;
  r.params["worst_x"] = worst.x;
  r.params["worst_phi"] = worst.phi;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

Report verify_circle_formula() {
  const double t0 = now_seconds();
  double worst = 0.0;
  int count = 0;
  for (int p = 0; p <= 4; ++p)
    for (double rad : {0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0})
      for (int k = 0; k < 8; ++k) {
        worst = std::max(worst, circle_formula_residual(p, std::polar(rad, kTwoPi * k / 8.0 + 0.1)));
        ++count;
      }
  Report r("circle-formula", worst, 1e-10);
  r.params["cases"] = count;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

Report verify_three_way(int grid, const QuadratureSpec& quad) {
  const double t0 = now_seconds();
  const std::vector<double> Ks = grid >= 3 ? std::vector<double>{1.0, 2.0, 3.0} : std::vector<double>{2.0};
  const std::vector<double> zs = grid >= 3 ? std::vector<double>{0.5, 1.0, 2.0} : std::vector<double>{1.0};
  const std::vector<cplx> us = grid >= 3 ? std::vector<cplx>{1.0, std::polar(std::sqrt(2.0), 0.3), std::polar(0.7, 1.1)}
                                         : std::vector<cplx>{std::polar(std::sqrt(2.0), 0.3)};
  struct Case {
    double K;
    cplx z, u;
  };
  std::vector<Case> cases;
  for (double K : Ks)
    for (double az : zs)
      for (const cplx& u : us) cases.push_back({K, std::polar(az, kPi / 4.0), u});
  const auto res = parallel_map<double>(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    const SpectralParams sp{c.K, c.K, c.K};
    const cplx d = H_bessel(c.z, c.u, sp, quad, HMethod::direct).value;
    const cplx r1 = H_bessel(c.z, c.u, sp, quad, HMethod::rep1).value;
    const cplx r2 = H_bessel(c.z, c.u, sp, quad, HMethod::rep2).value;
    const double scale = std::max({std::abs(d), std::abs(r1), 1e-300});
    return std::max({std::abs(d - r1), std::abs(d - r2), std::abs(r1 - r2)}) / scale;
  });
  const auto it = std::max_element(res.begin(), res.end());
  const auto& worst = cases[static_cast<std::size_t>(it - res.begin())];
  Report r("three-way-H", *it, 1e-5);
  r.params["cases"] = cases.size();
  r.params["worst_K"] = worst.K;
  r.params["worst_abs_z"] = std::abs(worst.z);
  r.params["worst_u"] = to_string_complex(worst.u);
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

Report verify_theta_poisson() {
  const double t0 = now_seconds();
  double worst = 0.0;
  int count = 0;
  for (double P : {1.0, 2.0, 3.0, 5.0, 8.0})
    for (int k = 0; k < 32; ++k) {
      worst = std::max(worst, poisson_theta_residual(-kPi + kTwoPi * k / 32.0, P));
      ++count;
    }
  Report r("theta-poisson", worst, 1e-10);
  r.params["cases"] = count;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

Report verify_gaussian_ft() {
  const double t0 = now_seconds();
  double worst = 0.0;
  int count = 0;
  for (double T : {1.0, 4.0, 8.0})
    for (double rad : {0.0, 1.0, 3.0, 10.0, 30.0})
      for (int k = 0; k < 6; ++k) {
        const cplx w = std::polar(rad, kTwoPi * k / 6.0 + 0.2);
        worst = std::max(worst, gaussian_ft_residual(w, T) / (1.0 + std::norm(w)));
        ++count;
      }
  Report r("gaussian-ft", worst, 1e-8);
  r.params["cases"] = count;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

Report verify_lemma41(double T, double vmax, int radial, int angular, const QuadratureSpec& quad) {
  const double t0 = now_seconds();
  const SpectralParams sp = SpectralParams::square(T);
  std::vector<cplx> pts;
  for (int i = 0; i <= radial; ++i)
    for (int k = 0; k < (i == 0 ? 1 : angular); ++k)
      pts.push_back(std::polar(vmax * i / radial, kPi * k / angular + 0.1));
  std::vector<std::pair<cplx, cplx>> cases;
  for (const auto& v : pts)
    for (const auto& w : pts)
      if (v != 0.0 || w != 0.0) cases.emplace_back(v, w);
  const auto res = parallel_map<double>(cases.size(), [&](std::size_t i) {
    const auto [v, w] = cases[i];
    const cplx I = I_variant(v, w, sp, quad, IForm::first).value;
    const cplx M = I_variant(v, w, sp, quad, IForm::main).value;
    return std::abs(I - M) / (std::abs(v) + std::abs(w));
  });
  const auto it = std::max_element(res.begin(), res.end());
  const auto& worst = cases[static_cast<std::size_t>(it - res.begin())];
  Report r("lemma41-constant", *it, 50.0);
  r.params["T"] = T;
  r.params["vmax"] = vmax;
  r.params["cases"] = cases.size();
  r.params["worst_v"] = to_string_complex(worst.first);
  r.params["worst_w"] = to_string_complex(worst.second);
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

}  // namespace gls
