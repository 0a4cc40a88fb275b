#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gls/bessel.hpp"
#include "gls/gaussian.hpp"
#include "gls/report.hpp"

namespace gls {

// Thrown when an operation's up-front term estimate exceeds the cost cap.
class CostExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kCostCap = 1e8;
// Throws CostExceeded if terms > cap.
void check_cost(double terms, const std::string& what, double cap = kCostCap);

// Real coefficients a_(n) supported on the annulus N < |n| <= 2N, keyed by ideal.
struct CoeffSeq {
  double N = 1.0;
  std::map<IdealRep, double> entries;

  double norm2() const;  // sum of a^2
  double norm1() const;  // sum of |a|
  std::size_t size() const { return entries.size(); }
  // Throws std::domain_error if a key lies outside the annulus.
  void validate() const;
  CoeffSeq scaled(double s) const;
  // Entrywise sum s a + t b over the union of supports (same N required).
  static CoeffSeq combine(const CoeffSeq& a, double s, const CoeffSeq& b, double t);
};

enum class CoeffDist { unit, gaussian, sparse };
CoeffDist parse_coeff_dist(const std::string& s);

// Deterministic sequence on every annulus ideal: unit gives +-1, gaussian gives
// N(0,1), sparse gives N(0,1) on about a fifth of the ideals and 0 elsewhere.
CoeffSeq coeff_gen(double N, CoeffDist dist, std::uint64_t seed, std::int64_t cap = kDefaultAnnulusCap);
// First `count` annulus ideals in (norm, re) order with gaussian values.
CoeffSeq coeff_first(double N, std::size_t count, std::uint64_t seed);

struct TruncatedValue {
  double value = 0.0;
  double tail = 0.0;  // bound on the omitted part
};

// Sigma(a) = T^2 sum over ideals (c), |c| <= c_max, of (sum_n a_n S(n,0;c))^2 / |c|^4.
TruncatedValue sigma_bilinear(const CoeffSeq& a, double T, double c_max);

// Per-modulus inner sum Re sum_{m,n} a_m a_n S(m,n;c) e[(m+n)/c] I(2pi(m+n)/c, 2pi(m-n)/c).
double phi_c(GaussianInt c, const CoeffSeq& a, const SpectralParams& sp, const QuadratureSpec& quad = {});

enum class PForm { kloosterman_H, symmetrized_I };
// P(a) over every nonzero c with |c| <= c_max: the H form sums
// |c|^{-2} a_m a_n S(m,n;c) H(2pi sqrt(mn)/c; sqrt(m/n)), the I form sums |c|^{-2} phi_c.
double geometric_P(const CoeffSeq& a, const SpectralParams& sp, double c_max, PForm form,
                   const QuadratureSpec& quad = {});

// Q(a) main term over every nonzero c with norm(c) <= max_norm, in the
// Kloosterman form 4 pi^4 Re sum |c|^-4 a a |m-n|^2 S e[(m+n)/c] h(pi(m-n)/c)
// or the V_q form pi^4 Re sum_{c,q} |cq|^-4 a a |m-n|^2 V_q(m,n;c) h(pi(m-n)/(cq))
// over every pair with norm(c q) <= max_norm.
enum class QForm { kloosterman, v_sum };
double q_main(const CoeffSeq& a, double T, std::int64_t max_norm, QForm form);

// Both sides of the Poisson step for the q-sum modulo c.
struct PoissonSides {
  std::complex<double> lhs;  // |m-n|^2 sum_{q != 0} V_q eta(|q|) |q|^-4 h(pi(m-n)/(cq))
  double rhs = 0.0;          // pi^-2 sum_q S(m,q;c) S(n,q;c) f(pi(m-n)/c; q/c)
  double rhs_zero = 0.0;     // the q = 0 term of rhs
  double rhs_tail = 0.0;     // bound on the truncated dual terms
  double residual() const { return std::abs(lhs - rhs); }
};

struct PoissonQuad {
  double v_max = 48.0;       // dual terms with |q|/|c| > v_max are dropped
  double direct_norms = 2500; // evaluate f directly when at most this many distinct |q|
};

// f(W; V) values cached by (norm(m-n), norm(c)) and norm(q).
class FCache {
 public:
  explicit FCache(double T, PoissonQuad quad = {}) : T_(T), quad_(quad) {}
  // f(pi sqrt(dn/cn); sqrt(qn/cn)) for every qn in the request list.
  const std::map<std::int64_t, double>& values(std::int64_t dn, std::int64_t cn, const std::vector<std::int64_t>& qn);
  double T() const { return T_; }
  const PoissonQuad& quad() const { return quad_; }

 private:
  double T_;
  PoissonQuad quad_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::map<std::int64_t, double>> cache_;
};

PoissonSides poisson_sides(GaussianInt c, GaussianInt m, GaussianInt n, FCache& cache);
double poisson_qsum_residual(GaussianInt c, GaussianInt m, GaussianInt n, double T, const PoissonQuad& quad = {});

// Q(a; X) from the eta-regularized V_q form and its Poisson split Z + S, both
// over every nonzero c with |c| <= X.
struct PoissonSplit {
  double Q = 0.0;
  double Z = 0.0;
  double S = 0.0;
  double tail = 0.0;
};
PoissonSplit q_poisson_split(const CoeffSeq& a, double T, double X, const PoissonQuad& quad = {});

// Z(a; X) = pi^2 sum_{|c|<=X} |c|^-4 a a S(m,0;c) S(n,0;c) f(pi(m-n)/c; 0).
double zero_freq_Z(const CoeffSeq& a, double T, double X);

struct DualSum {
  double S = 0.0;
  double S0_budget = 0.0;
};
// S(a; X) summed exactly over q != 0 and the disc bound
// T^4 sum_{|c|<=X} |c|^-2 sum_{0<|q|<=|c|} |q|^-2 int_{|u|<=1/T} |sum a S(n,q;c) e[nu/c]|^2 du.
DualSum dual_S(const CoeffSeq& a, double T, double X, const PoissonQuad& quad = {});

// Eisenstein contribution by (kappa, p) quadrature with 1/zeta(1+2i kappa, 2p)
// from the truncated Moebius series at Y = T^2.
struct EisensteinValue {
  double value = 0.0;
  double zeta_caveat = 0.0;  // max relative gap between truncated and smoothed 1/zeta at Re s = 1.05
  std::int64_t nodes = 0;
};
EisensteinValue eisenstein_E(const CoeffSeq& a, double T, double kappa_step = 0.05);

struct ZeroSplit {
  double E0 = 0.0;
  double sigma_over_32 = 0.0;
  double ratio() const { return E0 / sigma_over_32; }
};
// E0 = k(0) theta(0) / (4 pi) sum_{(c): log|c| <= T^eps} (sum a S(n,0;c))^2 / |c|^4.
ZeroSplit e_zero_split(const CoeffSeq& a, double T, double eps = 0.3, double sigma_c_max = 60.0);

// Weight functions of the Eisenstein expansion.
double eis_k(double r, double T);
double eis_theta(double omega, double T);
// |sum_p int h(2 kappa, 4p) chi_{2i kappa, 4p}(z) d kappa - k(log|z|) theta(2 arg z)|
double eis_weight_residual(std::complex<double> z, double T);

enum class LsKind { classical, hybrid, cor1, cor2, quadform, mean_value, ramanujan_ineq };
LsKind parse_ls_kind(const std::string& s);
std::string to_string(LsKind k);

struct LsParams {
  double C = 3.0;        // modulus bound |c| <= C
  double N = 8.0;        // support N < |n| <= N + Lambda
  double Lambda = 0.0;   // 0 selects N
  double rho = 1.0;      // disc radius
  std::complex<double> v{4.0, 0.0};
  GaussianInt c{3, 2};   // modulus for quadform and mean_value
};

// LHS / RHS of a single inequality for one coefficient vector.
struct LsSides {
  double lhs = 0.0;
  double rhs = 0.0;
};
LsSides ls_sides(LsKind kind, const LsParams& p, const std::vector<std::pair<GaussianInt, std::complex<double>>>& b);
// Max LHS/RHS over seeded gaussian trials; lhs = max ratio, budget 1e3.
Report ls_ratios(LsKind kind, const LsParams& p, int trials, std::uint64_t seed);

// Sweeps.
Report verify_poisson_qsum(double T, std::int64_t max_norm, int pairs, std::uint64_t seed);
Report verify_q_split(double T, double X, std::uint64_t seed);
Report verify_q_forms(double T, std::int64_t max_norm, std::uint64_t seed);
Report verify_p_symmetrization(double T, double c_max, std::uint64_t seed);
Report verify_eis_weight(double T);
Report verify_e0_trend(double N, const std::vector<double>& Ts, std::uint64_t seed);
Report verify_prop_z(double T, double X, double N, std::uint64_t seed);

}  // namespace gls
