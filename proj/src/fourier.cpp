#include "gls/fourier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "gls/numeric.hpp"
#include "gls/parallel.hpp"
#include "gls/special.hpp"

namespace gls {

double eta(double x) { return smooth_step(2.0 * x - 1.0); }

double psi(double x) {
  if (!(x > 0.0)) throw std::domain_error("psi: x must be positive");
  return eta(1.0 / x) - 1.0;
}

namespace {

double j0(double x) { return bessel_jn(0, x); }

}  // namespace

double f_kernel_radial(double W, double V, double T, const FourierQuad& quad) {
  if (!(T >= 1.0)) throw std::domain_error("f_kernel: T must be >= 1");
  if (W == 0.0) return 0.0;
  const double a = W * W / (T * T), b = kTwoPi * V;
  const double osc = b > 0.0 ? kPi / b : 1.0;
  const auto inner = [&](double r) { return eta(r) * std::exp(-a / (r * r)) * j0(b * r) / (r * r * r); };
  const double head = gauss_legendre_panels(inner, 0.5, 1.0, [&](double) { return std::min(0.125, osc); });
  double tail;
  if (V == 0.0) {
    tail = -std::expm1(-a) / (2.0 * a);
  } else {
    const double sa = std::sqrt(a);
    const double R = std::max(quad.window / b, 3.0 * sa + 4.0);
    const double lo = std::max(1.0, sa / 6.25);
    const auto outer = [&](double r) {
      return smooth_window(r, 0.5 * R, R) * std::exp(-a / (r * r)) * j0(b * r) / (r * r * r);
    };
    tail = gauss_legendre_panels(outer, lo, R, [&](double r) { return std::min(0.25 * r, 2.0 * osc); });
  }
  return kTwoPi * W * W * (head + tail);
}

double f_kernel(cplx w, cplx v, double T, const FourierQuad& quad) {
  return f_kernel_radial(std::abs(w), std::abs(v), T, quad);
}

double f_kernel_zero_rewritten(double W, double T) {
  if (!(T >= 1.0)) throw std::domain_error("f_kernel: T must be >= 1");
  const double c = W * W / (T * T);
  const auto g = [&](double r) { return psi(r) * std::exp(-c * r * r) * r; };
  const double mid = gauss_legendre_panels(g, 1.0, 2.0, [](double) { return 0.125; });
  return kPi * T * T * (1.0 - std::exp(-4.0 * c)) + kTwoPi * W * W * mid;
}

double f_hat_formula(double U, double V, double T) {
  if (!(T >= 1.0)) throw std::domain_error("f_hat: T must be >= 1");
  if (U == 0.0 && V == 0.0) throw std::domain_error("f_hat: undefined at u = v = 0");
  const double a = kPi * kPi * T * T * U * U, b = kTwoPi * V;
  const double osc = b > 0.0 ? kPi / b : 1.0;
  const double T4 = T * T * T * T;
  if (a >= 1.0) {
    // 2 pi^2 T^4 int eta (1 - a r^2) e^{-a r^2} J0(b r) r dr, Gaussian-damped.
    const double end = std::max(1.0, std::sqrt(45.0 / a));
    const auto g = [&](double r) { return eta(r) * (1.0 - a * r * r) * std::exp(-a * r * r) * j0(b * r) * r; };
    const double width = std::min({0.125, osc, 0.25 / std::sqrt(a)});
    return 2.0 * kPi * kPi * T4 * gauss_legendre_panels(g, 0.5, end, [&](double) { return width; });
  }
  // Whole-plane Gaussian part in closed form minus the compact piece on [0, 1].
  const double whole = (V == 0.0 || a == 0.0) ? 0.0 : kPi * kPi * kPi * V * V / (a * a) * std::exp(-kPi * kPi * V * V / a);
  const auto g = [&](double r) { return (1.0 - eta(r)) * (1.0 - a * r * r) * std::exp(-a * r * r) * j0(b * r) * r; };
  const double inner = gauss_legendre_panels(g, 0.0, 1.0, [&](double) { return std::min(0.125, osc); });
  return kPi * T4 * (whole - kTwoPi * inner);
}

std::vector<double> f_hat_direct(const std::vector<double>& U, double V, double T, const FourierQuad& quad) {
  if (!(V > 0.0)) throw std::domain_error("f_hat direct: needs v != 0 for decay of f");
  double umax = 0.0;
  for (double u : U) umax = std::max(umax, u);
  // f(.; V) oscillates with period about T/V and decays like exp(-c (V W/T)^{2/3}).
  const double wmax = 80.0 * T / V;
  const double width = std::min(2.0, 1.0 / (umax + V / T));
  const auto panels = static_cast<std::size_t>(std::ceil(wmax / width));
  const double h = wmax / static_cast<double>(panels);
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const auto& x = Rule::abscissa();
  const auto& wt = Rule::weights();
  // Nodes and weights of the composite rule on [0, wmax].
  std::vector<double> nodes, weights;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * h;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) {
        nodes.push_back(mid);
        weights.push_back(0.5 * h * wt[i]);
        continue;
      }
      nodes.push_back(mid - 0.5 * h * x[i]);
      weights.push_back(0.5 * h * wt[i]);
      nodes.push_back(mid + 0.5 * h * x[i]);
      weights.push_back(0.5 * h * wt[i]);
    }
  }
  const auto fv = parallel_map<double>(nodes.size(), [&](std::size_t i) {
    const double r = nodes[i];
    const double win = smooth_window(r, 0.5 * wmax, wmax);
    return win == 0.0 ? 0.0 : win * f_kernel_radial(r, V, T, quad);
  });
  std::vector<double> out;
  for (double u : U) {
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (fv[i] != 0.0) acc.add(weights[i] * fv[i] * j0(kTwoPi * u * nodes[i]) * nodes[i]);
    out.push_back(kTwoPi * acc.value());
  }
  return out;
}

double f_hat(cplx u, cplx v, double T, FhatMethod method, const FourierQuad& quad) {
  if (method == FhatMethod::formula) return f_hat_formula(std::abs(u), std::abs(v), T);
  return f_hat_direct({std::abs(u)}, std::abs(v), T, quad).front();
}

namespace {

// Truncated Taylor series in one variable, enough for fourth derivatives.
struct Jet {
  static constexpr int N = 5;
  std::array<double, N> c{};

  static Jet constant(double x) {
    Jet j;
    j.c[0] = x;
    return j;
  }
  static Jet variable(double x) {
    Jet j;
    j.c[0] = x;
    j.c[1] = 1.0;
    return j;
  }
  // k-th derivative at the expansion point.
  double d(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f * c[static_cast<std::size_t>(k)];
  }
};

Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  for (int i = 0; i < Jet::N; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  for (int i = 0; i < Jet::N; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k < Jet::N; ++k)
    for (int i = 0; i <= k; ++i) r.c[k] += a.c[i] * b.c[k - i];
  return r;
}

Jet operator*(double s, const Jet& a) {
  Jet r;
  for (int i = 0; i < Jet::N; ++i) r.c[i] = s * a.c[i];
  return r;
}

Jet exp(const Jet& f) {
  Jet g;
  g.c[0] = std::exp(f.c[0]);
  for (int k = 1; k < Jet::N; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * f.c[j] * g.c[k - j];
    g.c[k] = s / k;
  }
  return g;
}

Jet recip(const Jet& f) {
  Jet h;
  h.c[0] = 1.0 / f.c[0];
  for (int k = 1; k < Jet::N; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += f.c[j] * h.c[k - j];
    h.c[k] = -s / f.c[0];
  }
  return h;
}

Jet eta_jet(const Jet& x) {
  const Jet t = 2.0 * x - Jet::constant(1.0);
  if (t.c[0] <= 0.0) return Jet::constant(0.0);
  if (t.c[0] >= 1.0) return Jet::constant(1.0);
  const Jet A = exp(-1.0 * recip(t));
  const Jet B = exp(-1.0 * recip(Jet::constant(1.0) - t));
  return A * recip(A + B);
}

// Radial Delta^gamma of F(rho) = eta(rho/(2 rho0)) exp(-rho^2/s^2); Delta = (F'' + F'/rho)/4.
double laplace_power(double r, double rho0, double s, int gamma) {
  const Jet x = Jet::variable(r);
  const Jet F = eta_jet((0.5 / rho0) * x) * exp((-1.0 / (s * s)) * x * x);
  if (gamma == 0) return F.d(0);
  const double f1 = F.d(1), f2 = F.d(2), f3 = F.d(3), f4 = F.d(4);
  const double G = f2 + f1 / r;
  if (gamma == 1) return G / 4.0;
  const double G1 = f3 + f2 / r - f1 / (r * r);
  const double G2 = f4 + f3 / r - 2.0 * f2 / (r * r) + 2.0 * f1 / (r * r * r);
  return (G2 + G1 / r) / 16.0;
}

}  // namespace

double ibp_residual(cplx v, double rho, int gamma, double s) {
  if (gamma < 0 || gamma > 2) throw std::domain_error("ibp_residual: gamma must be 0, 1 or 2");
  if (!(rho > 0.0 && s > 0.0)) throw std::domain_error("ibp_residual: unsupported test function");
  if (gamma > 0 && v == 0.0) throw std::domain_error("ibp_residual: v must be nonzero");
  const double V = std::abs(v), b = kTwoPi * V;
  const double end = 2.0 * rho + 7.0 * s;
  const double width = std::min({0.25 * rho, b > 0.0 ? kPi / b : 1.0, 0.25 * s});
  const auto transform = [&](int g) {
    const auto fn = [&](double r) { return laplace_power(r, rho, s, g) * j0(b * r) * r; };
    return kTwoPi * gauss_legendre_panels(fn, rho, end, [&](double) { return width; });
  };
  const double lhs = transform(0);
  if (gamma == 0) return 0.0;
  const double rhs = std::pow(-kPi * kPi * V * V, -gamma) * transform(gamma);
  return std::abs(lhs - rhs);
}

double self_duality_residual(double u, double T) {
  const auto g = [&](double r) { return kPi * T * T * std::exp(-T * T * r * r) * j0(kTwoPi * u * r) * r; };
  const double width = std::min(0.25 / T, 0.25 / (std::abs(u) + 1e-300));
  const double val = kTwoPi * gauss_legendre_panels(g, 0.0, 7.0 / T, [&](double) { return width; });
  return std::abs(val - kPi * kPi * std::exp(-kPi * kPi * u * u / (T * T)));
}

Report verify_fhat_agreement(double T, const FourierQuad& quad) {
  const double t0 = now_seconds();
  const std::vector<double> us{0.1, 0.2, 0.3, 0.4, 0.5};
  const std::vector<double> vs{1.0, 1.25, std::sqrt(2.0), 1.75, 2.0};
  double worst = 0.0, wu = 0.0, wv = 0.0;
  for (double v : vs) {
    const auto direct = f_hat_direct(us, v, T, quad);
    for (std::size_t i = 0; i < us.size(); ++i) {
      const double d = std::abs(direct[i] - f_hat_formula(us[i], v, T));
      if (d > worst) {
        worst = d;
        wu = us[i];
        wv = v;
      }
    }
  }
  Report r("fhat-agreement", worst, 1e-4);
  r.params["T"] = T;
  r.params["grid"] = "5x5";
  r.params["worst_u"] = wu;
  r.params["worst_v"] = wv;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

namespace {

template <class F>
Report fhat_sweep(const char* name, double T, double budget, const std::vector<double>& us,
                  const std::vector<double>& vs, F&& ratio) {
  const double t0 = now_seconds();
  double worst = 0.0, wu = 0.0, wv = 0.0;
  for (double u : us)
    for (double v : vs) {
      const double q = ratio(u, v);
      if (q > worst) {
        worst = q;
        wu = u;
        wv = v;
      }
    }
  Report r(name, worst, budget);
  r.params["T"] = T;
  r.params["points"] = us.size() * vs.size();
  r.params["worst_u"] = wu;
  r.params["worst_v"] = wv;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

std::vector<double> geometric(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return out;
}

}  // namespace

Report verify_fhat_decay(double T) {
  // |u| > 1/T; the reported constant is |f^(u/pi; v)| / (T^4 exp(-T^2|u|^2/4)).
  const double T4 = T * T * T * T;
  return fhat_sweep("fhat-decay", T, 10.0, geometric(1.01 / T, 8.0 / T, 24), {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0},
                    [&](double u, double v) {
                      return std::abs(f_hat_formula(u / kPi, v, T)) / (T4 * std::exp(-T * T * u * u / 4.0));
                    });
}

Report verify_f_bound(double T) {
  return fhat_sweep("f-bound", T, 100.0, geometric(0.05, 8.0 * T, 24), {0.125, 0.25, 0.5, 1.0, 2.0, 4.0},
                    [&](double W, double V) {
                      const double f = std::abs(f_kernel_radial(W, V, T));
                      const double g0 = std::min(W * W, T * T);
                      const double g1 = std::min(W * W / (V * V), T * T * (T * T) / (V * V * W * W));
                      return std::max(f / g0, f / g1);
                    });
}

Report verify_fhat_uniform(double T) {
  return fhat_sweep("fhat-uniform", T, 100.0, geometric(0.05 / T, 8.0 / T, 24), {0.0, 0.25, 0.5, 1.0, 2.0, 4.0},
                    [&](double u, double v) { return std::abs(f_hat_formula(u / kPi, v, T)) * u * u / (T * T); });
}

Report verify_fhat_log(double T) {
  return fhat_sweep("fhat-log", T, 100.0, geometric(0.01 / T, 8.0 / T, 24), {0.25, 0.5, 1.0, 2.0, 4.0},
                    [&](double u, double v) {
                      return std::abs(f_hat_formula(u / kPi, v, T)) * v * v /
                             (T * T * (1.0 + std::log(1.0 + 2.0 / (T * u))));
                    });
}

Report verify_self_duality() {
  const double t0 = now_seconds();
  double worst = 0.0;
  int count = 0;
  for (double T : {1.0, 4.0, 8.0})
    for (double u : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0}) {
      worst = std::max(worst, self_duality_residual(u, T));
      ++count;
    }
  Report r("self-duality", worst, 1e-10);
  r.params["cases"] = count;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

}  // namespace gls
