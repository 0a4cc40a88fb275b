#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gls/gaussian.hpp"
#include "gls/report.hpp"

namespace gls {

struct ExpSumResult {
  std::complex<double> value;
  std::int64_t terms = 0;
};

// exp(2 pi i Re z)
std::complex<double> e_of(std::complex<double> z);

// Precomputed data for a fixed modulus c: residue system, unit inverses and a
// table of e[k/norm(c)]. Since Re(x/c) = Re(x conj(c))/norm(c), every phase
// e[x/c] is an exact table lookup.
class ModulusContext {
 public:
  explicit ModulusContext(GaussianInt c, std::int64_t cap = kDefaultResidueCap);

  GaussianInt modulus() const { return rs_.modulus(); }
  const ResidueSystem& residues() const { return rs_; }
  std::size_t size() const { return rs_.size(); }
  std::int64_t norm() const { return n_; }

  // Index of the inverse class, or -1 for non-units.
  std::int64_t inverse_index(std::size_t idx) const { return inv_[idx]; }
  bool is_unit(std::size_t idx) const { return inv_[idx] >= 0; }
  std::size_t unit_count() const { return units_.size(); }
  const std::vector<std::size_t>& units() const { return units_; }

  // Re(x conj(c)) mod norm(c): e[x/c] = phase_table()[phase_key(x)].
  std::int64_t phase_key(GaussianInt x) const;
  std::complex<double> phase(std::int64_t key) const { return table_[static_cast<std::size_t>(key)]; }
  std::complex<double> e_over(GaussianInt x) const { return phase(phase_key(x)); }

  ExpSumResult kloosterman(GaussianInt m, GaussianInt n) const;
  ExpSumResult v_sum(GaussianInt q, GaussianInt m, GaussianInt n) const;
  // V_alpha(m, n; c) for every residue class alpha, in residue index order.
  std::vector<std::complex<double>> v_all(GaussianInt m, GaussianInt n) const;

 private:
  ResidueSystem rs_;
  std::int64_t n_;
  std::vector<std::int64_t> inv_;
  std::vector<std::size_t> units_;
  std::vector<std::complex<double>> table_;
};

// S(m, n; c) = sum over alpha mod c, (alpha, c) = 1, of e[(alpha m + inv(alpha) n)/c].
ExpSumResult kloosterman(GaussianInt m, GaussianInt n, GaussianInt c);
// V_q(m, n; c) = sum over alpha with (alpha (q - alpha), c) = 1 of e[(inv(alpha) m + inv(q - alpha) n)/c].
ExpSumResult v_sum(GaussianInt q, GaussianInt m, GaussianInt n, GaussianInt c);
// S(n, 0; c) as an exact integer, via the divisor formula sum_{d | (n, c)} mu(c/d) N(d).
std::int64_t ramanujan_sum(GaussianInt n, GaussianInt c);

// |sum_alpha V_alpha e[alpha q / c] - S(m, q; c) S(n, q; c)|
double v_dft_residual(GaussianInt m, GaussianInt n, GaussianInt q, GaussianInt c);
// |S(m, n; c) e[(m + n)/c] - 1/4 sum_{c = d q} V_q(m, n; d)|, q over all associates of each ideal divisor.
double decomposition_residual(GaussianInt m, GaussianInt n, GaussianInt c);
// |S(m, n; c)| / (tau(c) |gcd(m, n, c)| |c|)
double weil_margin(GaussianInt m, GaussianInt n, GaussianInt c);

// Sweeps over every nonzero c with norm(c) <= max_norm and `trials` random
// (m, n, q) per modulus. The report ratio is max residual / (1e-9 norm(c)).
Report verify_v_dft(std::int64_t max_norm, int trials, std::uint64_t seed);
Report verify_decomposition(std::int64_t max_norm, int trials, std::uint64_t seed);
// Max Weil margin and max |S(n,0;c)| / norm(gcd(n,c)) over the sweep.
Report verify_weil(std::int64_t max_norm, int trials, std::uint64_t seed);
Report verify_ramanujan_bound(std::int64_t max_norm, int trials, std::uint64_t seed);

// All nonzero Gaussian integers with norm <= max_norm, ordered by (norm, re, im).
std::vector<GaussianInt> moduli_up_to(std::int64_t max_norm);

}  // namespace gls
