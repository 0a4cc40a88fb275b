#include "gls/sieve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include <boost/math/quadrature/gauss.hpp>

#include "gls/exp_sums.hpp"
#include "gls/fourier.hpp"
#include "gls/hecke.hpp"
#include "gls/numeric.hpp"
#include "gls/parallel.hpp"
#include "gls/rng.hpp"

namespace gls {

void check_cost(double terms, const std::string& what, double cap) {
  if (terms > cap)
    throw CostExceeded(what + ": estimated " + std::to_string(static_cast<long long>(terms)) +
                       " terms exceeds the cap of " + std::to_string(static_cast<long long>(cap)));
}

// ---------------------------------------------------------------------------
// Coefficient sequences

double CoeffSeq::norm2() const {
  CompensatedSum<double> acc;
  for (const auto& [k, v] : entries) acc.add(v * v);
  return acc.value();
}

double CoeffSeq::norm1() const {
  CompensatedSum<double> acc;
  for (const auto& [k, v] : entries) acc.add(std::abs(v));
  return acc.value();
}

void CoeffSeq::validate() const {
  if (!(N >= 1.0)) throw std::domain_error("CoeffSeq: N must be >= 1");
  const long double lo = static_cast<long double>(N) * N, hi = 4.0L * lo;
  for (const auto& [k, v] : entries) {
    const auto nn = static_cast<long double>(k.norm());
    if (!(nn > lo && nn <= hi)) throw std::domain_error("CoeffSeq: key " + to_string(k.gen()) + " outside annulus");
  }
}

CoeffSeq CoeffSeq::scaled(double s) const {
  CoeffSeq out = *this;
  for (auto& [k, v] : out.entries) v *= s;
  return out;
}

CoeffSeq CoeffSeq::combine(const CoeffSeq& a, double s, const CoeffSeq& b, double t) {
  if (a.N != b.N) throw std::domain_error("CoeffSeq::combine: different N");
  CoeffSeq out;
  out.N = a.N;
  for (const auto& [k, v] : a.entries) out.entries[k] += s * v;
  for (const auto& [k, v] : b.entries) out.entries[k] += t * v;
  return out;
}

CoeffDist parse_coeff_dist(const std::string& s) {
  if (s == "unit") return CoeffDist::unit;
  if (s == "gaussian") return CoeffDist::gaussian;
  if (s == "sparse") return CoeffDist::sparse;
  throw std::invalid_argument("unknown coefficient distribution: " + s);
}

CoeffSeq coeff_gen(double N, CoeffDist dist, std::uint64_t seed, std::int64_t cap) {
  if (!(N >= 1.0)) throw std::domain_error("coeff_gen: N must be >= 1");
  CoeffSeq out;
  out.N = N;
  CounterRng rng(seed, 0);
  for (const auto& id : annulus(N, 2.0 * N, cap)) {
    double v = 0.0;
    switch (dist) {
      case CoeffDist::unit:
        v = rng.sign();
        break;
      case CoeffDist::gaussian:
        v = rng.normal();
        break;
      case CoeffDist::sparse: {
        const double u = rng.uniform();
        const double g = rng.normal();
        v = u < 0.2 ? g : 0.0;
        break;
      }
    }
    out.entries[id] = v;
  }
  return out;
}

CoeffSeq coeff_first(double N, std::size_t count, std::uint64_t seed) {
  CoeffSeq full = coeff_gen(N, CoeffDist::gaussian, seed);
  CoeffSeq out;
  out.N = N;
  for (const auto& [k, v] : full.entries) {
    if (out.entries.size() >= count) break;
    out.entries[k] = v;
  }
  return out;
}

namespace {

struct Term {
  GaussianInt n;
  double a;
};

std::vector<Term> terms_of(const CoeffSeq& a) {
  std::vector<Term> out;
  for (const auto& [k, v] : a.entries)
    if (v != 0.0) out.push_back({k.gen(), v});
  return out;
}

// Ideal generators with |c| <= r.
std::vector<GaussianInt> ideals_up_to(double r) {
  std::vector<GaussianInt> out;
  if (r < 1.0) return out;
  for (const auto& id : annulus(0.0, r)) out.push_back(id.gen());
  return out;
}

std::vector<GaussianInt> all_moduli_up_to(double r) {
  return moduli_up_to(static_cast<std::int64_t>(std::floor(r * r + 1e-9)));
}

// S(n, 0; c) for every term, with the coprime shortcut S = mu(c).
std::vector<double> ramanujan_row(const std::vector<Term>& t, GaussianInt c) {
  const int mu = moebius(c);
  std::vector<double> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    out[i] = norm(gcd(t[i].n, c).gen()) == 1 ? mu : static_cast<double>(ramanujan_sum(t[i].n, c));
  return out;
}

double ramanujan_pair_sum(const std::vector<Term>& t, GaussianInt c) {
  const auto row = ramanujan_row(t, c);
  CompensatedSum<double> acc;
  for (std::size_t i = 0; i < t.size(); ++i) acc.add(t[i].a * row[i]);
  return acc.value();
}

// Upper bound for the sum over ideals |c| > C of |c|^-4, from the count
// of ideals with |c| <= x being at most (pi/4)(x + sqrt 2)^2.
double ideal_tail_inv4(double C) {
  const double s2 = std::sqrt(2.0);
  return kPi * (0.5 / (C * C) + 2.0 * s2 / (3.0 * C * C * C) + 0.5 / (C * C * C * C));
}

// sigma_1(n) = sum over ideal divisors of N(d), a bound for |S(n, 0; c)|.
double sigma1(GaussianInt n) {
  double s = 0.0;
  for (const auto& d : divisors(n)) s += static_cast<double>(d.norm());
  return s;
}

}  // namespace

TruncatedValue sigma_bilinear(const CoeffSeq& a, double T, double c_max) {
  if (!(T >= 1.0)) throw std::domain_error("sigma_bilinear: T must be >= 1");
  if (!(c_max >= 1.0)) throw std::domain_error("sigma_bilinear: c_max must be >= 1");
  const auto t = terms_of(a);
  check_cost(0.8 * c_max * c_max * static_cast<double>(t.size()), "sigma_bilinear");
  const auto cs = ideals_up_to(c_max);
  const auto parts = parallel_map<double>(cs.size(), [&](std::size_t i) {
    const double A = ramanujan_pair_sum(t, cs[i]);
    const double nc = static_cast<double>(norm(cs[i]));
    return A * A / (nc * nc);
  });
  CompensatedSum<double> acc;
  for (double p : parts) acc.add(p);
  double b = 0.0;
  for (const auto& x : t) b += std::abs(x.a) * sigma1(x.n);
  return {T * T * acc.value(), T * T * b * b * ideal_tail_inv4(c_max)};
}

// ---------------------------------------------------------------------------
// Geometric side

double phi_c(GaussianInt c, const CoeffSeq& a, const SpectralParams& sp, const QuadratureSpec& quad) {
  if (c.is_zero()) throw std::domain_error("phi_c: zero modulus");
  if (!sp.is_square()) throw std::domain_error("phi_c: the I form needs K = P = T");
  const auto t = terms_of(a);
  check_cost(static_cast<double>(t.size() * t.size()) * 1e4, "phi_c");
  const ModulusContext ctx(c);
  const cplx cc = to_complex(c);
  const auto vals = parallel_map<double>(t.size() * t.size(), [&](std::size_t k) {
    const auto& m = t[k / t.size()];
    const auto& n = t[k % t.size()];
    const cplx S = ctx.kloosterman(m.n, n.n).value * ctx.e_over(m.n + n.n);
    const cplx v = kTwoPi * to_complex(m.n + n.n) / cc;
    const cplx w = kTwoPi * to_complex(m.n - n.n) / cc;
    return m.a * n.a * (S * I_variant(v, w, sp, quad, IForm::first).value).real();
  });
  CompensatedSum<double> acc;
  for (double x : vals) acc.add(x);
  return acc.value();
}

double geometric_P(const CoeffSeq& a, const SpectralParams& sp, double c_max, PForm form, const QuadratureSpec& quad) {
  sp.validate();
  const auto t = terms_of(a);
  if (t.size() > 200) throw CostExceeded("geometric_P: more than 200 ideals");
  const auto cs = all_moduli_up_to(c_max);
  check_cost(static_cast<double>(cs.size() * t.size() * t.size()) * 1e4, "geometric_P");
  CompensatedSum<double> acc;
  for (const auto& c : cs) {
    const double nc = static_cast<double>(norm(c));
    if (form == PForm::symmetrized_I) {
      acc.add(phi_c(c, a, sp, quad) / nc);
      continue;
    }
    const ModulusContext ctx(c);
    const cplx cc = to_complex(c);
    const auto vals = parallel_map<double>(t.size() * t.size(), [&](std::size_t k) {
      const auto& m = t[k / t.size()];
      const auto& n = t[k % t.size()];
      const double S = ctx.kloosterman(m.n, n.n).value.real();
      const cplx sm = std::sqrt(to_complex(m.n)), sn = std::sqrt(to_complex(n.n));
      const cplx z = kTwoPi * sm * sn / cc, u = sm / sn;
      return m.a * n.a * S * H_bessel(z, u, sp, quad, HMethod::rep1).value.real();
    });
    for (double x : vals) acc.add(x / nc);
  }
  return acc.value();
}

double q_main(const CoeffSeq& a, double T, std::int64_t max_norm, QForm form) {
  if (!(T >= 1.0)) throw std::domain_error("q_main: T must be >= 1");
  if (max_norm < 1) throw std::domain_error("q_main: max_norm must be >= 1");
  const auto t = terms_of(a);
  const double pairs = static_cast<double>(t.size() * t.size());
  const double M = static_cast<double>(max_norm);
  check_cost(pairs * M * M * (form == QForm::v_sum ? std::log(M) + 1.0 : 1.0), "q_main");
  const double T2 = T * T;
  const double pi4 = kPi * kPi * kPi * kPi;
  CompensatedSum<double> acc;
  if (form == QForm::kloosterman) {
    for (const auto& c : moduli_up_to(max_norm)) {
      const ModulusContext ctx(c);
      const double nc = static_cast<double>(norm(c));
      for (const auto& m : t)
        for (const auto& n : t) {
          const double dn = static_cast<double>(norm(m.n - n.n));
          if (dn == 0.0) continue;
          const cplx S = ctx.kloosterman(m.n, n.n).value * ctx.e_over(m.n + n.n);
          const double h = std::exp(-kPi * kPi * dn / (nc * T2));
          acc.add(4.0 * pi4 * m.a * n.a * dn * h * S.real() / (nc * nc));
        }
    }
    return acc.value();
  }
  for (const auto& d : moduli_up_to(max_norm)) {
    const ModulusContext ctx(d);
    const double nd = static_cast<double>(norm(d));
    for (const auto& q : moduli_up_to(max_norm / norm(d))) {
      const double ncq = nd * static_cast<double>(norm(q));
      for (const auto& m : t)
        for (const auto& n : t) {
          const double dn = static_cast<double>(norm(m.n - n.n));
          if (dn == 0.0) continue;
          const cplx V = ctx.v_sum(q, m.n, n.n).value;
          const double h = std::exp(-kPi * kPi * dn / (ncq * T2));
          acc.add(pi4 * m.a * n.a * dn * h * V.real() / (ncq * ncq));
        }
    }
  }
  return acc.value();
}

// ---------------------------------------------------------------------------
// Poisson step for the q-sum

namespace {

// Barycentric interpolation on Chebyshev points of the first kind.
class ChebPanel {
 public:
  static constexpr int kNodes = 20;

  ChebPanel(double lo, double hi) : lo_(lo), hi_(hi) {}
  double node(int j) const {
    const double x = std::cos((2.0 * j + 1.0) * kPi / (2.0 * kNodes));
    return 0.5 * (lo_ + hi_) + 0.5 * (hi_ - lo_) * x;
  }
  void set(int j, double f) { f_[static_cast<std::size_t>(j)] = f; }
  double operator()(double v) const {
    double num = 0.0, den = 0.0;
    for (int j = 0; j < kNodes; ++j) {
      const double d = v - node(j);
      if (d == 0.0) return f_[static_cast<std::size_t>(j)];
      const double w = ((j % 2) ? -1.0 : 1.0) * std::sin((2.0 * j + 1.0) * kPi / (2.0 * kNodes)) / d;
      num += w * f_[static_cast<std::size_t>(j)];
      den += w;
    }
    return num / den;
  }

 private:
  double lo_, hi_;
  std::array<double, kNodes> f_{};
};

// Dense 7x7 solve with partial pivoting.
template <std::size_t N>
std::array<double, N> solve(std::array<std::array<double, N>, N> A, std::array<double, N> b) {
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < N; ++i)
      if (std::abs(A[i][k]) > std::abs(A[p][k])) p = i;
    std::swap(A[k], A[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = k + 1; i < N; ++i) {
      const double f = A[i][k] / A[k][k];
      for (std::size_t j = k; j < N; ++j) A[i][j] -= f * A[k][j];
      b[i] -= f * b[k];
    }
  }
  std::array<double, N> x{};
  for (std::size_t k = N; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < N; ++j) s -= A[k][j] * x[j];
    x[k] = s / A[k][k];
  }
  return x;
}

// sum over q != 0 of V[q mod c] |q|^-4 exp(-a/|q|^2).
//
// G(x) = |x|^-4 exp(-a/|x|^2) is split as sum_j c_j G_{b_j} + R with b_j >= 1000 N(c):
// each G_b has lattice sum pi/(b N(c)) per residue class up to dual terms of
// size exp(-0.87 (b k^2)^{1/3}), k = 2 pi/|c|, and R = O(|x|^-18) is summed directly.
cplx lattice_q_sum(const ModulusContext& ctx, const std::vector<cplx>& V, double a) {
  constexpr std::size_t J = 7;
  const double nc = static_cast<double>(ctx.norm());
  const double b0 = std::max(2.0 * a, 1000.0 * nc);
  std::array<double, J> beta{}, rhs{};
  std::array<std::array<double, J>, J> A{};
  for (std::size_t j = 0; j < J; ++j) beta[j] = 1.0 + 0.5 * static_cast<double>(j);
  for (std::size_t k = 0; k < J; ++k) {
    rhs[k] = std::pow(a / b0, static_cast<double>(k));
    for (std::size_t j = 0; j < J; ++j) A[k][j] = std::pow(beta[j], static_cast<double>(k));
  }
  const auto coef = solve(A, rhs);
  double M = std::pow(a, static_cast<double>(J)), vmax = 0.0;
  for (std::size_t j = 0; j < J; ++j) M += std::abs(coef[j]) * std::pow(b0 * beta[j], static_cast<double>(J));
  for (std::size_t k = 1; k <= J; ++k) M /= static_cast<double>(k);
  for (const auto& v : V) vmax = std::max(vmax, std::abs(v));
  const double pw = 2.0 * static_cast<double>(J) + 2.0;
  const double R = 2.0 + std::pow(kTwoPi * std::max(vmax, 1.0) * M / (pw * 1e-14), 1.0 / pw);
  check_cost(kPi * R * R * static_cast<double>(J + 1), "poisson lattice sum");

  const auto& rs = ctx.residues();
  std::vector<CompensatedSum<double>> cls(rs.size());
  const auto r = static_cast<std::int64_t>(std::floor(R));
  for (std::int64_t x = -r; x <= r; ++x)
    for (std::int64_t y = -r; y <= r; ++y) {
      const std::int64_t nn = x * x + y * y;
      if (nn == 0 || static_cast<double>(nn) > R * R) continue;
      const double u = 1.0 / static_cast<double>(nn);
      double g = std::exp(-a * u);
      for (std::size_t j = 0; j < J; ++j) g -= coef[j] * std::exp(-b0 * beta[j] * u);
      cls[rs.index_of(GaussianInt(x, y))].add(g * u * u);
    }
  CompensatedSum<cplx> acc;
  CompensatedSum<cplx> vsum;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    acc.add(V[i] * cls[i].value());
    vsum.add(V[i]);
  }
  double far = 0.0;
  for (std::size_t j = 0; j < J; ++j) far += coef[j] * kPi / (b0 * beta[j] * nc);
  acc.add(vsum.value() * far);
  return acc.value();
}

}  // namespace

const std::map<std::int64_t, double>& FCache::values(std::int64_t dn, std::int64_t cn,
                                                     const std::vector<std::int64_t>& qn) {
  auto& slot = cache_[{dn, cn}];
  std::vector<std::int64_t> missing;
  for (auto q : qn)
    if (!slot.count(q)) missing.push_back(q);
  if (missing.empty()) return slot;
  const double W = kPi * std::sqrt(static_cast<double>(dn) / static_cast<double>(cn));
  const auto V = [&](std::int64_t q) { return std::sqrt(static_cast<double>(q) / static_cast<double>(cn)); };
  const double T = T_;
  if (static_cast<double>(missing.size()) <= quad_.direct_norms) {
    const auto f = parallel_map<double>(missing.size(), [&](std::size_t i) { return f_kernel_radial(W, V(missing[i]), T); });
    for (std::size_t i = 0; i < missing.size(); ++i) slot[missing[i]] = f[i];
    return slot;
  }
  // Direct below V = 2, Chebyshev panels of width 0.5 above.
  std::vector<std::int64_t> near;
  std::vector<std::int64_t> far;
  for (auto q : missing) (V(q) < 2.0 ? near : far).push_back(q);
  const auto fn = parallel_map<double>(near.size(), [&](std::size_t i) { return f_kernel_radial(W, V(near[i]), T); });
  for (std::size_t i = 0; i < near.size(); ++i) slot[near[i]] = fn[i];
  if (far.empty()) return slot;
  const double vtop = V(far.back());
  const double width = 0.5;
  const auto panels = static_cast<std::size_t>(std::ceil((vtop - 2.0) / width)) + 1;
  std::vector<ChebPanel> table;
  for (std::size_t p = 0; p < panels; ++p) table.emplace_back(2.0 + width * p, 2.0 + width * (p + 1));
  const auto fv = parallel_map<double>(panels * ChebPanel::kNodes, [&](std::size_t i) {
    return f_kernel_radial(W, table[i / ChebPanel::kNodes].node(static_cast<int>(i % ChebPanel::kNodes)), T);
  });
  for (std::size_t i = 0; i < fv.size(); ++i) table[i / ChebPanel::kNodes].set(static_cast<int>(i % ChebPanel::kNodes), fv[i]);
  for (auto q : far) {
    const double v = V(q);
    const auto p = std::min(panels - 1, static_cast<std::size_t>((v - 2.0) / width));
    slot[q] = table[p](v);
  }
  return slot;
}

namespace {

PoissonSides poisson_sides_ctx(const ModulusContext& ctx, GaussianInt m, GaussianInt n, FCache& cache) {
  PoissonSides out;
  const std::int64_t dn = norm(m - n);
  if (dn == 0) return out;
  const std::int64_t cn = ctx.norm();
  const double T = cache.T();
  const double a = kPi * kPi * static_cast<double>(dn) / (static_cast<double>(cn) * T * T);
  out.lhs = static_cast<double>(dn) * lattice_q_sum(ctx, ctx.v_all(m, n), a);

  // Dual side: S(m,q;c) S(n,q;c) depends on q mod c, f on N(q).
  const auto& rs = ctx.residues();
  std::vector<double> K(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    K[i] = ctx.kloosterman(m, rs[i]).value.real() * ctx.kloosterman(n, rs[i]).value.real();
  const double vmax = cache.quad().v_max;
  const double qmax2 = vmax * vmax * static_cast<double>(cn);
  check_cost(kPi * qmax2, "poisson dual sum");
  const auto r = static_cast<std::int64_t>(std::floor(std::sqrt(qmax2)));
  std::map<std::int64_t, CompensatedSum<double>> shells;
  for (std::int64_t x = -r; x <= r; ++x)
    for (std::int64_t y = -r; y <= r; ++y) {
      const std::int64_t nn = x * x + y * y;
      if (static_cast<double>(nn) > qmax2) continue;
      shells[nn].add(K[rs.index_of(GaussianInt(x, y))]);
    }
  std::vector<std::int64_t> norms;
  for (const auto& [k, v] : shells) norms.push_back(k);
  const auto& f = cache.values(dn, cn, norms);
  CompensatedSum<double> acc;
  double edge = 0.0, kmax = 0.0;
  for (const auto& [k, s] : shells) {
    const double term = s.value() * f.at(k);
    acc.add(term);
    if (k == 0) out.rhs_zero = term / (kPi * kPi);
    if (std::sqrt(static_cast<double>(k) / static_cast<double>(cn)) > vmax - 1.0) edge = std::max(edge, std::abs(f.at(k)));
  }
  for (double k : K) kmax = std::max(kmax, std::abs(k));
  out.rhs = acc.value() / (kPi * kPi);
  // Shells beyond v_max: |f| no larger than at the edge, decaying over a few units of V.
  out.rhs_tail = kmax * edge * kTwoPi * static_cast<double>(cn) * vmax * 4.0 / (kPi * kPi);
  return out;
}

}  // namespace

PoissonSides poisson_sides(GaussianInt c, GaussianInt m, GaussianInt n, FCache& cache) {
  if (c.is_zero()) throw std::domain_error("poisson: zero modulus");
  if (norm(c) > 400) throw CostExceeded("poisson: norm(c) > 400");
  return poisson_sides_ctx(ModulusContext(c), m, n, cache);
}

double poisson_qsum_residual(GaussianInt c, GaussianInt m, GaussianInt n, double T, const PoissonQuad& quad) {
  FCache cache(T, quad);
  return poisson_sides(c, m, n, cache).residual();
}

PoissonSplit q_poisson_split(const CoeffSeq& a, double T, double X, const PoissonQuad& quad) {
  if (!(T >= 1.0)) throw std::domain_error("q_poisson_split: T must be >= 1");
  const auto t = terms_of(a);
  const auto cs = all_moduli_up_to(X);
  check_cost(static_cast<double>(cs.size() * t.size() * t.size()) * kPi * quad.v_max * quad.v_max * X * X,
             "q_poisson_split");
  FCache cache(T, quad);
  const double pi4 = kPi * kPi * kPi * kPi;
  CompensatedSum<double> Q, Z, S;
  double tail = 0.0;
  for (const auto& c : cs) {
    const ModulusContext ctx(c);
    const double nc = static_cast<double>(norm(c));
    const double w = pi4 / (nc * nc);
    for (const auto& m : t)
      for (const auto& n : t) {
        if (m.n == n.n) continue;
        const auto s = poisson_sides_ctx(ctx, m.n, n.n, cache);
        const double aa = m.a * n.a * w;
        Q.add(aa * s.lhs.real());
        Z.add(aa * s.rhs_zero);
        S.add(aa * (s.rhs - s.rhs_zero));
        tail += std::abs(aa) * s.rhs_tail;
      }
  }
  return {Q.value(), Z.value(), S.value(), tail};
}

double zero_freq_Z(const CoeffSeq& a, double T, double X) {
  if (!(T >= 1.0)) throw std::domain_error("zero_freq_Z: T must be >= 1");
  const auto t = terms_of(a);
  const auto cs = all_moduli_up_to(X);
  check_cost(static_cast<double>(cs.size() * t.size() * t.size()), "zero_freq_Z");
  std::map<std::pair<std::int64_t, std::int64_t>, double> fcache;
  CompensatedSum<double> acc;
  for (const auto& c : cs) {
    const auto row = ramanujan_row(t, c);
    const std::int64_t cn = norm(c);
    const double nc = static_cast<double>(cn);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) {
        const std::int64_t dn = norm(t[i].n - t[j].n);
        if (dn == 0 || row[i] == 0.0 || row[j] == 0.0) continue;
        auto it = fcache.find({dn, cn});
        if (it == fcache.end())
          it = fcache.emplace(std::make_pair(dn, cn), f_kernel_radial(kPi * std::sqrt(dn / nc), 0.0, T)).first;
        acc.add(kPi * kPi * t[i].a * t[j].a * row[i] * row[j] * it->second / (nc * nc));
      }
  }
  return acc.value();
}

namespace {

// Nodes and weights for integrals over the closed disc of radius rho: Gauss
// panels in the radius (weight r included) and the trapezoid in the angle.
struct DiscRule {
  std::vector<cplx> z;
  std::vector<double> w;
};

DiscRule disc_rule(double rho, double max_phase) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const auto& x = Rule::abscissa();
  const auto& wt = Rule::weights();
  const int panels = 1 + static_cast<int>(max_phase / (4.0 * kPi));
  const int nt = 2 * static_cast<int>(std::ceil(max_phase)) + 16;
  std::vector<std::pair<double, double>> radial;
  const double h = rho / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double wi = 0.5 * h * wt[i];
      if (x[i] == 0.0) {
        radial.emplace_back(mid, wi);
        continue;
      }
      radial.emplace_back(mid - 0.5 * h * x[i], wi);
      radial.emplace_back(mid + 0.5 * h * x[i], wi);
    }
  }
  DiscRule out;
  for (const auto& [r, wr] : radial)
    for (int k = 0; k < nt; ++k) {
      out.z.push_back(std::polar(r, kTwoPi * k / nt));
      out.w.push_back(wr * r * kTwoPi / nt);
    }
  return out;
}

}  // namespace

DualSum dual_S(const CoeffSeq& a, double T, double X, const PoissonQuad& quad) {
  DualSum out;
  out.S = q_poisson_split(a, T, X, quad).S;
  const auto t = terms_of(a);
  const double rho = 1.0 / T;
  CompensatedSum<double> budget;
  for (const auto& c : all_moduli_up_to(X)) {
    const ModulusContext ctx(c);
    const double nc = static_cast<double>(norm(c));
    const cplx cc = to_complex(c);
    double nmax = 0.0;
    for (const auto& x : t) nmax = std::max(nmax, modulus(x.n));
    const DiscRule rule = disc_rule(rho, kTwoPi * nmax * rho / std::sqrt(nc));
    for (const auto& q : moduli_up_to(norm(c))) {
      std::vector<double> S(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) S[i] = t[i].a * ctx.kloosterman(t[i].n, q).value.real();
      CompensatedSum<double> integral;
      for (std::size_t k = 0; k < rule.z.size(); ++k) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) s += S[i] * e_of(to_complex(t[i].n) * rule.z[k] / cc);
        integral.add(rule.w[k] * std::norm(s));
      }
      budget.add(integral.value() / (nc * static_cast<double>(norm(q))));
    }
  }
  out.S0_budget = T * T * T * T * budget.value();
  return out;
}

// ---------------------------------------------------------------------------
// Eisenstein contribution

double eis_k(double r, double T) { return std::sqrt(kPi) * T / 2.0 * std::exp(-std::pow(T * r / 2.0, 2)); }

double eis_theta(double omega, double T) {
  const double w = omega - kPi * std::floor(omega / kPi + 0.5);
  const int pmax = static_cast<int>(std::ceil(4.0 * std::sqrt(40.0) / (T * kPi))) + 1;
  double s = 0.0;
  for (int p = -pmax; p <= pmax; ++p) s += std::exp(-std::pow(T * (w + kPi * p) / 4.0, 2));
  return std::sqrt(kPi) * T / 4.0 * s;
}

double eis_weight_residual(cplx z, double T) {
  if (z == 0.0) throw std::domain_error("eis_weight_residual: z = 0");
  const double L = std::log(std::abs(z)), A = std::arg(z);
  // sum_p exp(-16 p^2/T^2 + 4ipA) by direct summation.
  const int pmax = static_cast<int>(std::ceil(T * std::sqrt(40.0) / 4.0)) + 1;
  cplx ps = 0.0;
  for (int p = -pmax; p <= pmax; ++p) ps += std::exp(cplx(-16.0 * p * p / (T * T), 4.0 * p * A));
  // int exp(-4 kappa^2/T^2 + 2 i kappa L) d kappa by the trapezoid rule.
  const double kmax = T * std::sqrt(40.0) / 2.0;
  const double h = 0.25 * std::min(T / 2.0, kPi / (std::abs(L) + 1.0));
  const auto n = static_cast<int>(std::ceil(kmax / h));
  cplx ks = 0.0;
  for (int j = -n; j <= n; ++j) {
    const double k = j * h;
    ks += std::exp(cplx(-4.0 * k * k / (T * T), 2.0 * k * L));
  }
  ks *= h;
  return std::abs(ks * ps - eis_k(L, T) * eis_theta(2.0 * A, T));
}

EisensteinValue eisenstein_E(const CoeffSeq& a, double T, double kappa_step) {
  if (!(T >= 1.0) || T > 6.0) throw std::domain_error("eisenstein_E: needs 1 <= T <= 6");
  const auto t = terms_of(a);
  if (t.size() > 100) throw CostExceeded("eisenstein_E: more than 100 ideals");
  // tau_{i kappa, p}(n) chi_{2i kappa, 4p}(n) = sum over ideal divisors d of |d|^{4 i kappa} (d/|d|)^{8p}.
  struct Phase {
    double lg;
    double ag;
  };
  std::vector<std::vector<Phase>> ph(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (const auto& d : divisors(t[i].n)) {
      const cplx dz = to_complex(d.gen());
      ph[i].push_back({4.0 * std::log(std::abs(dz)), 8.0 * std::arg(dz)});
    }
  const double kmax = T * std::sqrt(40.0) / 2.0;
  const int pmax = static_cast<int>(std::ceil(T * std::sqrt(40.0) / 4.0));
  const auto nk = static_cast<int>(std::ceil(kmax / kappa_step));
  const double Y = T * T;
  std::vector<std::pair<int, int>> nodes;
  for (int p = -pmax; p <= pmax; ++p)
    for (int j = -nk; j <= nk; ++j) nodes.emplace_back(p, j);
  check_cost(static_cast<double>(nodes.size()) * (static_cast<double>(t.size()) * 8.0 + 400.0), "eisenstein_E");
  const auto vals = parallel_map<double>(nodes.size(), [&](std::size_t i) {
    const auto [p, j] = nodes[i];
    const double kappa = j * kappa_step;
    const double h = std::exp(-4.0 * kappa * kappa / (T * T) - 16.0 * p * p / (T * T));
    cplx s = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      cplx u = 0.0;
      for (const auto& f : ph[k]) u += std::exp(cplx(0.0, kappa * f.lg + p * f.ag));
      s += t[k].a * u;
    }
    const cplx iz = inverse_zeta_truncated(cplx(1.0, 2.0 * kappa), 2 * p, Y);
    return h * std::norm(iz) * std::norm(s);
  });
  EisensteinValue out;
  CompensatedSum<double> acc;
  for (double v : vals) acc.add(v);
  out.value = acc.value() * kappa_step / kPi;
  out.nodes = static_cast<std::int64_t>(nodes.size());
  for (double kappa : {0.5, 1.0, 2.0})
    for (int p : {0, 1}) {
      // Just right of the edge, where the smoothed series is defined.
      const cplx s(1.05, 2.0 * kappa);
      const cplx trunc = inverse_zeta_truncated(s, 2 * p, Y);
      const cplx ref = 1.0 / zeta_hecke_smooth(s, 2 * p).value;
      out.zeta_caveat = std::max(out.zeta_caveat, std::abs(trunc - ref) / std::abs(ref));
    }
  return out;
}

ZeroSplit e_zero_split(const CoeffSeq& a, double T, double eps, double sigma_c_max) {
  if (!(T >= 1.0)) throw std::domain_error("e_zero_split: T must be >= 1");
  const auto t = terms_of(a);
  const double R = std::exp(std::pow(T, eps));
  CompensatedSum<double> acc;
  for (const auto& c : ideals_up_to(R)) {
    const double A = ramanujan_pair_sum(t, c);
    const double nc = static_cast<double>(norm(c));
    acc.add(A * A / (nc * nc));
  }
  ZeroSplit out;
  out.E0 = eis_k(0.0, T) * eis_theta(0.0, T) / (4.0 * kPi) * acc.value();
  out.sigma_over_32 = sigma_bilinear(a, T, sigma_c_max).value / 32.0;
  return out;
}

// ---------------------------------------------------------------------------
// Large sieve ratios

LsKind parse_ls_kind(const std::string& s) {
  static const std::pair<const char*, LsKind> names[] = {
      {"classical", LsKind::classical}, {"hybrid", LsKind::hybrid},         {"cor1", LsKind::cor1},
      {"cor2", LsKind::cor2},           {"quadform", LsKind::quadform},     {"mean_value", LsKind::mean_value},
      {"ramanujan_ineq", LsKind::ramanujan_ineq}};
  for (const auto& [n, k] : names)
    if (s == n) return k;
  throw std::invalid_argument("unknown large sieve kind: " + s);
}

std::string to_string(LsKind k) {
  switch (k) {
    case LsKind::classical: return "classical";
    case LsKind::hybrid: return "hybrid";
    case LsKind::cor1: return "cor1";
    case LsKind::cor2: return "cor2";
    case LsKind::quadform: return "quadform";
    case LsKind::mean_value: return "mean_value";
    case LsKind::ramanujan_ineq: return "ramanujan_ineq";
  }
  return "?";
}

namespace {

using Coeffs = std::vector<std::pair<GaussianInt, cplx>>;

// Elements n with lo < |n| <= hi.
std::vector<GaussianInt> elements_in(double lo, double hi) {
  std::vector<GaussianInt> out;
  const auto r = static_cast<std::int64_t>(std::floor(hi));
  const double lo2 = lo * lo, hi2 = hi * hi;
  for (std::int64_t x = -r; x <= r; ++x)
    for (std::int64_t y = -r; y <= r; ++y) {
      const auto nn = static_cast<double>(x * x + y * y);
      if (nn > lo2 && nn <= hi2) out.emplace_back(x, y);
    }
  return out;
}

double support_lo(LsKind k, const LsParams& p) {
  (void)k;
  return p.N;
}

double support_hi(LsKind k, const LsParams& p) {
  const bool free_len = k == LsKind::classical || k == LsKind::hybrid;
  const double lambda = p.Lambda > 0.0 ? p.Lambda : p.N;
  return p.N + (free_len ? lambda : p.N);
}

// sum over units alpha of |sum_beta B(beta) e[alpha beta / c]|^2.
double reduced_dft_energy(const ModulusContext& ctx, const std::vector<cplx>& B) {
  const auto& rs = ctx.residues();
  double acc = 0.0;
  for (std::size_t a : ctx.units()) {
    cplx s = 0.0;
    for (std::size_t b = 0; b < rs.size(); ++b)
      if (B[b] != 0.0) s += B[b] * ctx.e_over(rs[a] * rs[b]);
    acc += std::norm(s);
  }
  return acc;
}

}  // namespace

namespace {

// LHS of the classical and disc kinds for several coefficient vectors on one support.
std::vector<double> ls_disc_lhs(LsKind kind, const LsParams& p, const std::vector<GaussianInt>& support,
                                const std::vector<std::vector<cplx>>& vals) {
  const double C = p.C, rho = p.rho, av = std::abs(p.v);
  const std::size_t nt = vals.size(), ns = support.size();
  double nmax = 0.0;
  for (const auto& n : support) nmax = std::max(nmax, modulus(n));
  const auto cs = moduli_up_to(static_cast<std::int64_t>(std::floor(C * C + 1e-9)));
  const bool disc = kind != LsKind::classical;
  const bool per_c = kind == LsKind::cor1 || kind == LsKind::cor2;
  if (disc && av == 0.0) throw std::domain_error("ls_sides: v must be nonzero");
  double est = 0.0;
  for (const auto& c : cs) {
    const double ph = disc ? kTwoPi * nmax * rho / (av * (per_c ? modulus(c) : 1.0)) : 0.0;
    const double nodes = disc ? (20.0 * (1 + ph / (4 * kPi))) * (2 * std::ceil(ph) + 16) : 1.0;
    est += nodes * (static_cast<double>(ns) + static_cast<double>(nt) * static_cast<double>(ns + norm(c) * norm(c)));
  }
  check_cost(est, "ls_sides " + to_string(kind), kCostCap * std::max<double>(1.0, static_cast<double>(nt)));
  DiscRule shared;
  if (kind == LsKind::hybrid) shared = disc_rule(rho, kTwoPi * nmax * rho / av);
  const auto parts = parallel_map<std::vector<double>>(cs.size(), [&](std::size_t ci) {
    const GaussianInt c = cs[ci];
    const ModulusContext ctx(c);
    const auto& rs = ctx.residues();
    std::vector<std::size_t> cls(ns);
    for (std::size_t i = 0; i < ns; ++i) cls[i] = rs.index_of(support[i]);
    std::vector<cplx> B(rs.size());
    std::vector<double> res(nt, 0.0);
    if (!disc) {
      for (std::size_t t = 0; t < nt; ++t) {
        std::fill(B.begin(), B.end(), cplx(0.0));
        for (std::size_t i = 0; i < ns; ++i) B[cls[i]] += vals[t][i];
        res[t] = reduced_dft_energy(ctx, B);
      }
      return res;
    }
    const DiscRule local = per_c ? disc_rule(rho, kTwoPi * nmax * rho / (av * modulus(c))) : DiscRule{};
    const DiscRule& rule = per_c ? local : shared;
    const cplx den = per_c ? to_complex(c) * p.v : p.v;
    std::vector<CompensatedSum<double>> acc(nt);
    std::vector<cplx> ph(ns);
    for (std::size_t k = 0; k < rule.z.size(); ++k) {
      for (std::size_t i = 0; i < ns; ++i) ph[i] = e_of(to_complex(support[i]) * rule.z[k] / den);
      for (std::size_t t = 0; t < nt; ++t) {
        std::fill(B.begin(), B.end(), cplx(0.0));
        for (std::size_t i = 0; i < ns; ++i) B[cls[i]] += vals[t][i] * ph[i];
        acc[t].add(rule.w[k] * reduced_dft_energy(ctx, B));
      }
    }
    for (std::size_t t = 0; t < nt; ++t) res[t] = acc[t].value();
    return res;
  });
  std::vector<double> out(nt, 0.0);
  for (std::size_t t = 0; t < nt; ++t) {
    CompensatedSum<double> acc;
    for (const auto& part : parts) acc.add(part[t]);
    out[t] = acc.value();
  }
  return out;
}

double ls_disc_rhs(LsKind kind, const LsParams& p, double nb) {
  const double C = p.C, N = p.N, rho = p.rho, av = std::abs(p.v);
  const double lambda = support_hi(kind, p) - support_lo(kind, p);
  const double C4 = C * C * C * C;
  switch (kind) {
    case LsKind::classical: return (C4 + lambda * lambda) * nb;
    case LsKind::hybrid: return (C4 * rho * rho + av * av) * nb;
    case LsKind::cor1: return rho * rho * (C4 + N * N) * nb;
    case LsKind::cor2: return (C4 * rho * rho + C * C * av * av) * nb;
    default: return 0.0;
  }
}

bool is_disc_kind(LsKind k) {
  return k == LsKind::classical || k == LsKind::hybrid || k == LsKind::cor1 || k == LsKind::cor2;
}

}  // namespace

LsSides ls_sides(LsKind kind, const LsParams& p, const Coeffs& b) {
  double nb = 0.0;
  for (const auto& [n, v] : b) nb += std::norm(v);
  LsSides out;
  const double C = p.C, N = p.N;
  switch (kind) {
    case LsKind::classical:
    case LsKind::hybrid:
    case LsKind::cor1:
    case LsKind::cor2: {
      std::vector<GaussianInt> support;
      std::vector<std::vector<cplx>> vals(1);
      for (const auto& [n, v] : b) {
        support.push_back(n);
        vals[0].push_back(v);
      }
      out.lhs = ls_disc_lhs(kind, p, support, vals)[0];
      out.rhs = ls_disc_rhs(kind, p, nb);
      return out;
    }
    case LsKind::quadform:
    case LsKind::mean_value: {
      const ModulusContext ctx(p.c);
      const auto& rs = ctx.residues();
      check_cost(static_cast<double>(b.size() + rs.size()) * static_cast<double>(rs.size()), "ls_sides");
      std::vector<cplx> B(rs.size()), Bc(rs.size());
      for (const auto& [n, v] : b) {
        B[rs.index_of(n)] += v;
        Bc[rs.index_of(n)] += std::conj(v);
      }
      const auto dft = [&](const std::vector<cplx>& X, std::size_t a) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < rs.size(); ++k)
          if (X[k] != 0.0) s += X[k] * ctx.e_over(rs[a] * rs[k]);
        return s;
      };
      const double nc = static_cast<double>(ctx.norm());
      if (kind == LsKind::mean_value) {
        double acc = 0.0;
        for (std::size_t a = 0; a < rs.size(); ++a) acc += std::norm(dft(B, a));
        out.lhs = acc;
        out.rhs = (nc + N * N) * nb;
        return out;
      }
      cplx acc = 0.0;
      for (std::size_t a : ctx.units()) acc += dft(B, a) * dft(Bc, static_cast<std::size_t>(ctx.inverse_index(a)));
      out.lhs = std::abs(acc);
      out.rhs = (nc + N * N) * nb;
      return out;
    }
    case LsKind::ramanujan_ineq: {
      const auto cs = moduli_up_to(static_cast<std::int64_t>(std::floor(C * C + 1e-9)));
      check_cost(static_cast<double>(cs.size() * b.size()) * 10.0, "ls_sides ramanujan");
      CompensatedSum<double> acc;
      for (const auto& c : cs) {
        double s = 0.0;
        for (const auto& [n, v] : b) s += std::abs(v) * std::abs(static_cast<double>(ramanujan_sum(n, c)));
        acc.add(s * s);
      }
      out.lhs = acc.value();
      out.rhs = C * C * N * N * nb;
      return out;
    }
  }
  return out;
}

Report ls_ratios(LsKind kind, const LsParams& p, int trials, std::uint64_t seed) {
  const double t0 = now_seconds();
  if (trials < 1) throw std::domain_error("ls_ratios: trials must be >= 1");
  if (!(p.C >= 1.0) || !(p.N >= 1.0) || !(p.rho > 0.0)) throw std::domain_error("ls_ratios: bad parameters");
  const double lo = support_lo(kind, p), hi = support_hi(kind, p);
  check_cost(kPi * (hi * hi - lo * lo), "ls_ratios support", static_cast<double>(kDefaultAnnulusCap));
  const auto support = elements_in(lo, hi);
  std::vector<double> ratios(static_cast<std::size_t>(trials));
  std::vector<Coeffs> all(static_cast<std::size_t>(trials));
  for (int k = 0; k < trials; ++k) {
    CounterRng rng(seed, static_cast<std::uint64_t>(k));
    Coeffs& b = all[static_cast<std::size_t>(k)];
    b.reserve(support.size());
    for (const auto& n : support) {
      const double re = rng.normal();
      const double im = rng.normal();
      b.emplace_back(n, cplx(re, im));
    }
  }
  if (is_disc_kind(kind)) {
    std::vector<std::vector<cplx>> vals(all.size());
    for (std::size_t k = 0; k < all.size(); ++k)
      for (const auto& [n, v] : all[k]) vals[k].push_back(v);
    const auto lhs = ls_disc_lhs(kind, p, support, vals);
    for (std::size_t k = 0; k < all.size(); ++k) {
      double nb = 0.0;
      for (const auto& v : vals[k]) nb += std::norm(v);
      const double rhs = ls_disc_rhs(kind, p, nb);
      ratios[k] = rhs > 0.0 ? lhs[k] / rhs : 0.0;
    }
  } else {
    for (std::size_t k = 0; k < all.size(); ++k) {
      const auto s = ls_sides(kind, p, all[k]);
      ratios[k] = s.rhs > 0.0 ? s.lhs / s.rhs : 0.0;
    }
  }
  const double worst = *std::max_element(ratios.begin(), ratios.end());
  Report r("ls-" + to_string(kind), worst, 1e3);
  r.params["kind"] = to_string(kind);
  r.params["C"] = p.C;
  r.params["N"] = p.N;
  r.params["Lambda"] = support_hi(kind, p) - support_lo(kind, p);
  r.params["rho"] = p.rho;
  r.params["v"] = to_string_complex(p.v);
  r.params["c"] = to_string(p.c);
  r.params["support"] = support.size();
  r.params["trials"] = trials;
  r.params["seed"] = seed;
  r.params["constant"] = worst;
  r.passed = std::isfinite(worst) && r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

// ---------------------------------------------------------------------------
// Sweeps

Report verify_poisson_qsum(double T, std::int64_t max_norm, int pairs, std::uint64_t seed) {
  const double t0 = now_seconds();
  const auto cs = moduli_up_to(max_norm);
  CounterRng rng(seed, 101);
  double worst = 0.0, worst_res = 0.0;
  std::string where;
  // Each pair meets a small modulus, a random one and the largest norm.
  std::vector<GaussianInt> largest;
  for (const auto& c : cs)
    if (norm(c) == norm(cs.back())) largest.push_back(c);
  for (int k = 0; k < pairs; ++k) {
    GaussianInt m, n;
    do {
      m = {rng.uniform_int(-4, 4), rng.uniform_int(-4, 4)};
      n = {rng.uniform_int(-4, 4), rng.uniform_int(-4, 4)};
    } while (m.is_zero() || n.is_zero() || m == n);
    std::vector<GaussianInt> mods;
    mods.push_back(cs[static_cast<std::size_t>(rng.uniform_int(0, std::min<std::int64_t>(11, cs.size() - 1)))]);
    mods.push_back(cs[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(cs.size()) - 1))]);
    mods.push_back(largest[static_cast<std::size_t>(k) % largest.size()]);
    for (const auto& c : mods) {
      const double res = poisson_qsum_residual(c, m, n, T);
      const double scaled = res / (1.0 + static_cast<double>(norm(m - n)));
      if (scaled > worst) {
        worst = scaled;
        worst_res = res;
        where = "c=" + to_string(c) + " m=" + to_string(m) + " n=" + to_string(n);
      }
    }
  }
  Report r("poisson-qsum", worst, 1e-5);
  r.params["T"] = T;
  r.params["max_norm"] = max_norm;
  r.params["pairs"] = pairs;
  r.params["seed"] = seed;
  r.params["worst_residual"] = worst_res;
  r.params["worst_case"] = where;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

Report verify_q_split(double T, double X, std::uint64_t seed) {
  const double t0 = now_seconds();
  const CoeffSeq a = coeff_first(1.5, 5, seed);
  const auto s = q_poisson_split(a, T, X);
  // Combined tolerance: the per-term budget 1e-5 (1 + |m-n|^2) weighted as in Q.
  double budget = 0.0;
  const auto t = terms_of(a);
  for (const auto& c : all_moduli_up_to(X)) {
    const double nc = static_cast<double>(norm(c));
    for (const auto& m : t)
      for (const auto& n : t)
        budget += 1e-5 * std::abs(m.a * n.a) * (1.0 + static_cast<double>(norm(m.n - n.n))) *
                  std::pow(kPi, 4) / (nc * nc);
  }
  Report r("q-equals-z-plus-s", std::abs(s.Q - (s.Z + s.S)), budget);
  r.params["T"] = T;
  r.params["X"] = X;
  r.params["ideals"] = t.size();
  r.params["Q"] = s.Q;
  r.params["Z"] = s.Z;
  r.params["S"] = s.S;
  r.params["dual_tail"] = s.tail;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

Report verify_q_forms(double T, std::int64_t max_norm, std::uint64_t seed) {
  const double t0 = now_seconds();
  const CoeffSeq a = coeff_first(1.5, 5, seed);
  const double k = q_main(a, T, max_norm, QForm::kloosterman);
  const double v = q_main(a, T, max_norm, QForm::v_sum);
  Report r("q-kloosterman-vs-vq", std::abs(k - v) / std::max(std::abs(k), 1e-300), 1e-8);
  r.params["T"] = T;
  r.params["max_norm"] = max_norm;
  r.params["kloosterman_form"] = k;
  r.params["v_form"] = v;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

Report verify_p_symmetrization(double T, double c_max, std::uint64_t seed) {
  const double t0 = now_seconds();
  const CoeffSeq a = coeff_first(1.0, 2, seed);
  const auto sp = SpectralParams::square(T);
  const double h = geometric_P(a, sp, c_max, PForm::kloosterman_H);
  const double i = geometric_P(a, sp, c_max, PForm::symmetrized_I);
  Report r("p-symmetrization", std::abs(h - i) / std::max(std::abs(h), 1e-300), 1e-5);
  r.params["T"] = T;
  r.params["c_max"] = c_max;
  r.params["H_form"] = h;
  r.params["I_form"] = i;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

Report verify_eis_weight(double T) {
  const double t0 = now_seconds();
  double worst = 0.0;
  for (double rad : {0.3, 0.9, 1.0, 1.2, 2.5, 7.0})
    for (int k = 0; k < 8; ++k) worst = std::max(worst, eis_weight_residual(std::polar(rad, 0.37 + k * kPi / 8.0), T));
  Report r("eisenstein-weight", worst, 1e-8);
  r.params["T"] = T;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

Report verify_e0_trend(double N, const std::vector<double>& Ts, std::uint64_t seed) {
  const double t0 = now_seconds();
  const CoeffSeq a = coeff_gen(N, CoeffDist::gaussian, seed);
  std::vector<double> gaps;
  nlohmann::ordered_json ratios = nlohmann::ordered_json::array();
  for (double T : Ts) {
    const double q = e_zero_split(a, T).ratio();
    ratios.push_back(q);
    gaps.push_back(std::abs(1.0 - q));
  }
  bool monotone = true;
  for (std::size_t i = 1; i < gaps.size(); ++i) monotone = monotone && gaps[i] <= gaps[i - 1] * (1.0 + 1e-12);
  Report r("e0-over-sigma32", gaps.back(), std::max(gaps.front(), 1e-300));
  r.params["N"] = N;
  r.params["T"] = Ts;
  r.params["ratios"] = ratios;
  r.params["monotone"] = monotone;
  r.passed = monotone;
  r.elapsed = now_seconds() - t0;
  return r;
}

Report verify_prop_z(double T, double X, double N, std::uint64_t seed) {
  const double t0 = now_seconds();
  const CoeffSeq a = coeff_gen(N, CoeffDist::gaussian, seed);
  const double Z = zero_freq_Z(a, T, X);
  const double sig = sigma_bilinear(a, T, 60.0).value;
  // Z runs over every c, four per ideal.
  const double main = 4.0 * kPi * kPi * kPi * sig;
  const double scale = (T * T * N * N / (X * X) + std::pow(T, 4)) * a.norm2();
  Report r("prop-z-constant", std::abs(Z - main) / scale, 1e3);
  r.params["T"] = T;
  r.params["X"] = X;
  r.params["N"] = N;
  r.params["Z"] = Z;
  r.params["four_pi3_sigma"] = main;
  r.passed = r.ratio <= 1.0;
  r.elapsed = now_seconds() - t0;
  return r;
}

}  // namespace gls
