#include "gls/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "gls/bessel.hpp"
#include "gls/exp_sums.hpp"
#include "gls/fourier.hpp"
#include "gls/sieve.hpp"

namespace gls {

namespace {

using Suite = std::function<std::vector<Report>(const SuiteOptions&)>;

std::vector<Report> large_sieve(const SuiteOptions& o) {
  const int trials = o.quick ? 5 : 20;
  LsParams classical;
  classical.C = o.quick ? 3.0 : 5.0;
  classical.N = o.quick ? 30.0 : 100.0;
  std::vector<Report> out;
  out.push_back(ls_ratios(LsKind::classical, classical, trials, o.seed));
  for (LsKind k : {LsKind::hybrid, LsKind::cor1, LsKind::cor2, LsKind::quadform, LsKind::mean_value,
                   LsKind::ramanujan_ineq})
    out.push_back(ls_ratios(k, LsParams{}, trials, o.seed));
  return out;
}

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> r = {
      {"v-dft", [](const SuiteOptions& o) { return std::vector<Report>{verify_v_dft(400, 20, o.seed)}; }},
      {"decomposition",
       [](const SuiteOptions& o) { return std::vector<Report>{verify_decomposition(400, 20, o.seed)}; }},
      {"weil",
       [](const SuiteOptions& o) {
         return std::vector<Report>{verify_weil(400, 20, o.seed), verify_ramanujan_bound(400, 20, o.seed)};
       }},
      {"circle", [](const SuiteOptions&) { return std::vector<Report>{verify_circle_formula()}; }},
      {"theta-poisson",
       [](const SuiteOptions&) { return std::vector<Report>{verify_theta_poisson(), verify_gaussian_ft()}; }},
      {"line-rep", [](const SuiteOptions&) { return std::vector<Report>{verify_line_rep()}; }},
      {"three-way", [](const SuiteOptions& o) { return std::vector<Report>{verify_three_way(o.quick ? 1 : 3)}; }},
      {"lemma41",
       [](const SuiteOptions& o) {
         QuadratureSpec q;
         q.tol = 1e-6;
         return std::vector<Report>{o.quick ? verify_lemma41(8, 16, 2, 2, q) : verify_lemma41(8, 16, 4, 4, q)};
       }},
      {"fhat",
       [](const SuiteOptions&) {
         return std::vector<Report>{verify_fhat_agreement(4), verify_fhat_decay(4), verify_f_bound(4),
                                    verify_fhat_uniform(4),  verify_fhat_log(4),   verify_self_duality()};
       }},
      {"poisson",
       [](const SuiteOptions& o) {
         return std::vector<Report>{verify_poisson_qsum(4, o.quick ? 20 : 100, o.quick ? 2 : 10, o.seed),
                                    verify_q_split(4, std::sqrt(2.0), o.seed)};
       }},
      {"q-forms", [](const SuiteOptions& o) { return std::vector<Report>{verify_q_forms(4, 50, o.seed)}; }},
      {"p-symmetrization",
       [](const SuiteOptions& o) { return std::vector<Report>{verify_p_symmetrization(3, 1.0, o.seed)}; }},
      {"large-sieve", large_sieve},
      {"eisenstein",
       [](const SuiteOptions& o) {
         return std::vector<Report>{verify_eis_weight(4), verify_e0_trend(10, {3, 4, 5, 6}, o.seed)};
       }},
      {"prop-z", [](const SuiteOptions& o) { return std::vector<Report>{verify_prop_z(4, 2, 3, o.seed)}; }},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<std::string> quick_suite_names() { return {"v-dft", "decomposition", "circle", "theta-poisson"}; }

std::vector<Report> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "all") {
    std::vector<Report> out;
    for (const auto& n : opt.quick ? quick_suite_names() : suite_names()) {
      auto part = run_suite(n, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(opt);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace gls
