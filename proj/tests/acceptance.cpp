// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gls/bessel.hpp"
#include "gls/exp_sums.hpp"
#include "gls/fourier.hpp"
#include "gls/report.hpp"
#include "gls/sieve.hpp"

using namespace gls;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds, 0 for none
  std::function<std::vector<Report>()> run;
  std::function<bool(const std::vector<Report>&)> extra = nullptr;
};

std::vector<Report> large_sieve_and_eisenstein() {
  LsParams classical;
  classical.C = 5.0;
  classical.N = 100.0;
  std::vector<Report> out;
  out.push_back(ls_ratios(LsKind::classical, classical, 20, kSeed));
  for (LsKind k : {LsKind::hybrid, LsKind::cor1, LsKind::cor2}) out.push_back(ls_ratios(k, LsParams{}, 20, kSeed));
  out.push_back(verify_eis_weight(4));
  out.push_back(verify_e0_trend(10, {3, 4, 5, 6}, kSeed));
  return out;
}

// Same seed gives bit-identical ratios; finite and within budget.
bool large_sieve_reproducible(const std::vector<Report>& rs) {
  LsParams classical;
  classical.C = 5.0;
  classical.N = 100.0;
  if (ls_ratios(LsKind::classical, classical, 20, kSeed).lhs != rs[0].lhs) return false;
  const LsKind kinds[] = {LsKind::hybrid, LsKind::cor1, LsKind::cor2};
  for (int i = 0; i < 3; ++i) {
    if (ls_ratios(kinds[i], LsParams{}, 20, kSeed).lhs != rs[1 + i].lhs) return false;
    if (!std::isfinite(rs[1 + i].lhs)) return false;
  }
  return std::isfinite(rs[0].lhs);
}

}  // namespace

int main() {
  QuadratureSpec lemma_quad;
  lemma_quad.tol = 1e-6;
  const std::vector<Criterion> criteria = {
      {1, "V-DFT identity, norm(c) <= 400", 60, [] { return std::vector<Report>{verify_v_dft(400, 20, kSeed)}; }},
      {2, "decomposition identity, norm(c) <= 400", 60,
       [] { return std::vector<Report>{verify_decomposition(400, 20, kSeed)}; }},
      {3, "Weil and Ramanujan-sum bounds", 0,
       [] { return std::vector<Report>{verify_weil(400, 20, kSeed), verify_ramanujan_bound(400, 20, kSeed)}; }},
      {4, "Bessel line representation", 300, [] { return std::vector<Report>{verify_line_rep()}; }},
      {5, "circle formula", 0, [] { return std::vector<Report>{verify_circle_formula()}; }},
      {6, "three-way H agreement, 3x3x3 grid", 600, [] { return std::vector<Report>{verify_three_way(3)}; }},
      {7, "theta Poisson and Gaussian Fourier identities", 0,
       [] { return std::vector<Report>{verify_theta_poisson(), verify_gaussian_ft()}; }},
      {8, "I asymptotic constant at T = 8", 0,
       [&] { return std::vector<Report>{verify_lemma41(8, 16, 4, 4, lemma_quad)}; }},
      {9, "f-hat formula vs direct, decay margin", 0,
       [] { return std::vector<Report>{verify_fhat_agreement(4), verify_fhat_decay(4)}; }},
      {10, "Poisson q-sum identity and Q = Z + S", 0,
       [] {
         return std::vector<Report>{verify_poisson_qsum(4, 100, 10, kSeed), verify_q_split(4, std::sqrt(2.0), kSeed)};
       }},
      {11, "Q main term: Kloosterman vs V_q form", 0, [] { return std::vector<Report>{verify_q_forms(4, 50, kSeed)}; }},
      {12, "large-sieve constants, Eisenstein weight, E0 trend", 0, large_sieve_and_eisenstein,
       large_sieve_reproducible},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const double t0 = now_seconds();
    std::vector<Report> reports;
    std::string error;
    try {
      reports = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool ok = error.empty();
    for (const auto& r : reports) ok = ok && r.passed;
    if (ok && c.extra) ok = c.extra(reports);
    const double elapsed = now_seconds() - t0;
    if (c.time_limit > 0 && elapsed > c.time_limit) ok = false;
    failures += ok ? 0 : 1;
    std::printf("criterion %2d: %s  %s  (%.1f s)\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), elapsed);
    for (const auto& r : reports) {
      std::printf("    %-24s lhs=%.6g budget=%.3g ratio=%.4g %s\n", r.name.c_str(), r.lhs, r.rhs_budget, r.ratio,
                  r.passed ? "ok" : "over");
      std::printf("      params %s\n", r.params.dump().c_str());
    }
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
