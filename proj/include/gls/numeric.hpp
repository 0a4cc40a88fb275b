#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>

namespace gls {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Neumaier-compensated accumulator.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    if constexpr (std::is_same_v<T, cplx>) {
      double re = sum_.real(), im = sum_.imag();
      double cr = comp_.real(), ci = comp_.imag();
      step(re, cr, x.real());
      step(im, ci, x.imag());
      sum_ = {re, im};
      comp_ = {cr, ci};
    } else {
      step(sum_, comp_, x);
    }
  }
  CompensatedSum& operator+=(T x) {
    add(x);
    return *this;
  }
  T value() const { return sum_ + comp_; }

 private:
  static void step(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  T sum_{};
  T comp_{};
};

// Smooth 0->1 transition on [0,1]: B(t)/(B(t)+B(1-t)), B(t)=exp(-1/t).
inline double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

// 1 on [0, a], 0 on [b, inf), smooth in between.
inline double smooth_window(double x, double a, double b) { return 1.0 - smooth_step((x - a) / (b - a)); }

// 20-point Gauss-Legendre on [a, b].
template <class F>
auto gauss_legendre(F&& f, double a, double b) -> decltype(f(a)) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  using R = decltype(f(a));
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  R acc{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      acc += w[i] * f(mid);
    } else {
      acc += w[i] * (f(mid - half * x[i]) + f(mid + half * x[i]));
    }
  }
  return acc * half;
}

// Sum of Gauss-Legendre panels over [a, b]; the panel width at x is
// width(x) (clipped to the interval).
template <class F, class W>
auto gauss_legendre_panels(F&& f, double a, double b, W&& width) -> decltype(f(a)) {
  using R = decltype(f(a));
  CompensatedSum<R> acc;
  double x = a;
  while (x < b) {
    double h = width(x);
    if (!(h > 0.0)) h = b - a;
    const double next = (x + h >= b || b - (x + h) < 1e-3 * h) ? b : x + h;
    acc.add(gauss_legendre(f, x, next));
    x = next;
  }
  return acc.value();
}

}  // namespace gls
