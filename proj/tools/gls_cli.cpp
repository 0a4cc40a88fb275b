// gls: command-line front end for the library.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gls/bessel.hpp"
#include "gls/exp_sums.hpp"
#include "gls/fourier.hpp"
#include "gls/gaussian.hpp"
#include "gls/hecke.hpp"
#include "gls/parallel.hpp"
#include "gls/report.hpp"
#include "gls/sieve.hpp"
#include "gls/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;

enum class Format { pretty, json, csv };

struct Global {
  double tol = 1e-7;
  std::uint64_t seed = 7;
  unsigned threads = 0;
  bool json = false;
  std::string json_path;  // write output here instead of stdout
  bool csv = false;
  bool no_elapsed = false;
  std::string config;

  Format format() const { return csv ? Format::csv : (json ? Format::json : Format::pretty); }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

gls::GaussianInt gauss(const std::string& s, const char* flag) {
  try {
    return gls::parse_gaussian(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

cplx complex_arg(const std::string& s, const char* flag) {
  try {
    return gls::parse_complex(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void put_complex(json& j, const std::string& key, cplx z) {
  j[key] = z.real();
  j[key + "_im"] = z.imag();
}

std::string plain(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit_value(const json& j, Format f) {
  if (f == Format::json) {
    std::cout << j.dump() << '\n';
  } else if (f == Format::csv) {
    std::string head, row;
    for (const auto& [k, v] : j.items()) {
      head += (head.empty() ? "" : ",") + k;
      row += (row.empty() ? "" : ",") + plain(v);
    }
    std::cout << head << '\n' << row << '\n';
  } else {
    for (const auto& [k, v] : j.items()) std::cout << k << ": " << plain(v) << '\n';
  }
}

// Prints every report; returns the exit code.
int emit_reports(const std::vector<gls::Report>& rs, const Global& g) {
  const Format f = g.format();
  std::optional<std::size_t> failed;
  std::string last_header;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    gls::Report r = rs[i];
    if (!r.passed && !failed) failed = i;
    if (f == Format::json) {
      json j = gls::to_json(r);
      if (g.no_elapsed) j.erase("elapsed");
      std::cout << j.dump() << '\n';
    } else if (f == Format::csv) {
      if (g.no_elapsed) r.elapsed = 0.0;
      const std::string h = gls::csv_header(r);
      if (h != last_header) std::cout << h << '\n';
      last_header = h;
      std::cout << gls::csv_row(r) << '\n';
    } else {
      std::ostringstream os;
      os.precision(6);
      os << (r.passed ? "PASS " : "FAIL ") << r.name << "  lhs=" << r.lhs << "  budget=" << r.rhs_budget
         << "  ratio=" << r.ratio;
      if (!g.no_elapsed) os << "  (" << r.elapsed << " s)";
      std::cout << os.str() << '\n';
    }
  }
  if (failed) {
    std::cerr << "first failing report: " << gls::to_json(rs[*failed]).dump() << '\n';
    return 1;
  }
  return 0;
}

// Appends key=value lines from the config file as --key=value unless the flag
// was given on the command line.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file: " + path);
  std::set<std::string> given;
  for (const auto& a : args)
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto l = s.find_first_not_of(" \t\r");
      const auto r = s.find_last_not_of(" \t\r");
      return l == std::string::npos ? std::string() : s.substr(l, r - l + 1);
    };
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key.empty() || given.count(key)) continue;
    if (val == "true") {
      args.push_back("--" + key);
    } else if (val != "false") {
      args.push_back("--" + key + "=" + val);
    }
  }
  return args;
}

gls::LsKind ls_kind(const std::string& s) {
  try {
    return gls::parse_ls_kind(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  Global g;
  CLI::App app{
      "gls: Gaussian-integer exponential sums, Bessel kernels and large-sieve checks.\n"
      "Gaussian integer literals: [+-]digits[+-]digits i, e.g. 3-2i or -1+0i.\n"
      "Complex literals: a+bi with decimals, a plain real, or polar mod@arg."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", g.tol, "Quadrature tolerance")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for random instances")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker count (default: GSL_THREADS or 1)");
  auto* json_opt = app.add_option("--json", g.json_path, "JSON output, one object per line; optional output file")
                       ->expected(0, 1);
  app.add_flag("--csv", g.csv, "CSV output");
  app.add_flag("--no-elapsed", g.no_elapsed, "Omit timings from reports");
  app.add_option("--config", g.config, "File of key=value lines presetting flags");

  int code = 0;
  std::function<void()> action;

  // expsum
  auto* expsum = app.add_subcommand("expsum", "Kloosterman, V and Ramanujan sums");
  expsum->require_subcommand(1);
  std::string m_s = "1+0i", n_s = "1+0i", c_s = "1+1i", q_s = "0+0i";
  auto add_mnc = [&](CLI::App* s) {
    s->add_option("--m", m_s, "m")->capture_default_str();
    s->add_option("--n", n_s, "n")->capture_default_str();
    s->add_option("--c", c_s, "modulus c")->capture_default_str();
  };
  auto* kl = expsum->add_subcommand("kloosterman", "S(m,n;c)");
  add_mnc(kl);
  kl->callback([&] {
    action = [&] {
      const auto m = gauss(m_s, "--m"), n = gauss(n_s, "--n"), c = gauss(c_s, "--c");
      const auto r = gls::kloosterman(m, n, c);
      json j{{"op", "kloosterman"}, {"m", gls::to_string(m)}, {"n", gls::to_string(n)}, {"c", gls::to_string(c)}};
      put_complex(j, "value", r.value);
      j["terms"] = r.terms;
      emit_value(j, g.format());
    };
  });
  auto* vs = expsum->add_subcommand("v", "V_q(m,n;c)");
  add_mnc(vs);
  vs->add_option("--q", q_s, "q")->capture_default_str();
  vs->callback([&] {
    action = [&] {
      const auto m = gauss(m_s, "--m"), n = gauss(n_s, "--n"), c = gauss(c_s, "--c"), q = gauss(q_s, "--q");
      const auto r = gls::v_sum(q, m, n, c);
      json j{{"op", "v"}, {"q", gls::to_string(q)}, {"m", gls::to_string(m)}, {"n", gls::to_string(n)},
             {"c", gls::to_string(c)}};
      put_complex(j, "value", r.value);
      j["terms"] = r.terms;
      emit_value(j, g.format());
    };
  });
  auto* rs = expsum->add_subcommand("ramanujan", "S(n,0;c)");
  rs->add_option("--n", n_s, "n")->capture_default_str();
  rs->add_option("--c", c_s, "modulus c")->capture_default_str();
  rs->callback([&] {
    action = [&] {
      const auto n = gauss(n_s, "--n"), c = gauss(c_s, "--c");
      emit_value(json{{"op", "ramanujan"}, {"n", gls::to_string(n)}, {"c", gls::to_string(c)},
                      {"value", gls::ramanujan_sum(n, c)}},
                 g.format());
    };
  });
  auto* wl = expsum->add_subcommand("weil", "|S(m,n;c)| / (tau(c) |gcd(m,n,c)| |c|)");
  add_mnc(wl);
  wl->callback([&] {
    action = [&] {
      const auto m = gauss(m_s, "--m"), n = gauss(n_s, "--n"), c = gauss(c_s, "--c");
      emit_value(json{{"op", "weil"}, {"m", gls::to_string(m)}, {"n", gls::to_string(n)}, {"c", gls::to_string(c)},
                      {"margin", gls::weil_margin(m, n, c)}},
                 g.format());
    };
  });
  auto* vd = expsum->add_subcommand("v-dft", "Residual of the V-sum DFT identity");
  add_mnc(vd);
  vd->add_option("--q", q_s, "q")->capture_default_str();
  vd->callback([&] {
    action = [&] {
      const auto m = gauss(m_s, "--m"), n = gauss(n_s, "--n"), c = gauss(c_s, "--c"), q = gauss(q_s, "--q");
      emit_value(json{{"op", "v-dft"}, {"residual", gls::v_dft_residual(m, n, q, c)}}, g.format());
    };
  });
  auto* dc = expsum->add_subcommand("decomposition", "Residual of the divisor decomposition of S e[(m+n)/c]");
  add_mnc(dc);
  dc->callback([&] {
    action = [&] {
      const auto m = gauss(m_s, "--m"), n = gauss(n_s, "--n"), c = gauss(c_s, "--c");
      emit_value(json{{"op", "decomposition"}, {"residual", gls::decomposition_residual(m, n, c)}}, g.format());
    };
  });

  auto* ev = expsum->add_subcommand("verify", "Sweep: v-dft, decomposition, weil or ramanujan");
  std::string ev_name = "v-dft";
  std::int64_t max_norm = 400;
  int ev_trials = 20;
  ev->add_option("sweep", ev_name, "sweep name")->capture_default_str();
  ev->add_option("--max-norm", max_norm, "largest norm(c)")->capture_default_str();
  ev->add_option("--trials", ev_trials, "random (m, n, q) per modulus")->capture_default_str();
  ev->callback([&] {
    action = [&] {
      gls::Report r;
      if (ev_name == "v-dft") r = gls::verify_v_dft(max_norm, ev_trials, g.seed);
      else if (ev_name == "decomposition") r = gls::verify_decomposition(max_norm, ev_trials, g.seed);
      else if (ev_name == "weil") r = gls::verify_weil(max_norm, ev_trials, g.seed);
      else if (ev_name == "ramanujan") r = gls::verify_ramanujan_bound(max_norm, ev_trials, g.seed);
      else throw UsageError("expsum verify: expected v-dft, decomposition, weil or ramanujan");
      code = emit_reports({r}, g);
    };
  });

  // hecke
  auto* hecke = app.add_subcommand("hecke", "Hecke zeta functions and divisor sums");
  hecke->require_subcommand(1);
  std::string s_s = "2";
  int p_i = 0;
  double cutoff = 0.0, Y = 100.0, eps = gls::kDefaultTruncationEpsilon;
  auto* zt = hecke->add_subcommand("zeta", "zeta(s,p); smoothed lattice sum unless --cutoff is given");
  zt->add_option("--s", s_s, "s (Re s > 1)")->capture_default_str();
  zt->add_option("--p", p_i, "character index")->capture_default_str();
  zt->add_option("--cutoff", cutoff, "truncate the Dirichlet series at |n| <= cutoff");
  zt->callback([&] {
    action = [&] {
      const cplx s = complex_arg(s_s, "--s");
      const auto z = cutoff > 0.0 ? gls::zeta_hecke(s, p_i, cutoff) : gls::zeta_hecke_smooth(s, p_i);
      json j{{"op", "zeta"}, {"s", gls::to_string_complex(s)}, {"p", p_i}};
      put_complex(j, "value", z.value);
      j["tail_bound"] = z.tail_bound;
      j["terms"] = z.terms;
      emit_value(j, g.format());
    };
  });
  auto* ts = hecke->add_subcommand("tau-sigma", "tau_{s,p}(n) and sigma_{s,p}(n)");
  ts->add_option("--s", s_s, "s")->capture_default_str();
  ts->add_option("--p", p_i, "character index")->capture_default_str();
  ts->add_option("--n", n_s, "n")->capture_default_str();
  ts->callback([&] {
    action = [&] {
      const cplx s = complex_arg(s_s, "--s");
      const auto n = gauss(n_s, "--n");
      const auto r = gls::tau_sigma(s, p_i, n);
      json j{{"op", "tau-sigma"}, {"s", gls::to_string_complex(s)}, {"p", p_i}, {"n", gls::to_string(n)}};
      put_complex(j, "tau", r.tau);
      put_complex(j, "sigma", r.sigma);
      emit_value(j, g.format());
    };
  });
  auto* iz = hecke->add_subcommand("inverse-zeta", "Truncated Moebius series for 1/zeta(s,p)");
  iz->add_option("--s", s_s, "s")->capture_default_str();
  iz->add_option("--p", p_i, "character index")->capture_default_str();
  iz->add_option("--Y", Y, "truncation parameter")->capture_default_str();
  iz->add_option("--eps", eps, "truncation exponent")->capture_default_str();
  iz->callback([&] {
    action = [&] {
      const cplx s = complex_arg(s_s, "--s");
      json j{{"op", "inverse-zeta"}, {"s", gls::to_string_complex(s)}, {"p", p_i}, {"Y", Y}, {"eps", eps}};
      put_complex(j, "value", gls::inverse_zeta_truncated(s, p_i, Y, eps));
      emit_value(j, g.format());
    };
  });
  auto* rr = hecke->add_subcommand("ramanujan-residual", "Truncated Ramanujan expansion residual");
  rr->add_option("--s", s_s, "s")->capture_default_str();
  rr->add_option("--p", p_i, "character index")->capture_default_str();
  rr->add_option("--n", n_s, "n")->capture_default_str();
  rr->add_option("--Y", Y, "truncation parameter")->capture_default_str();
  rr->add_option("--eps", eps, "truncation exponent")->capture_default_str();
  rr->callback([&] {
    action = [&] {
      const cplx s = complex_arg(s_s, "--s");
      const auto n = gauss(n_s, "--n");
      emit_value(json{{"op", "ramanujan-residual"}, {"residual", gls::ramanujan_residual(s, p_i, n, Y, eps)}},
                 g.format());
    };
  });

  // bessel
  auto* bessel = app.add_subcommand("bessel", "Bessel kernels and the integrals H and I");
  bessel->require_subcommand(1);
  double kappa = 1.0, K = 2.0, P = 2.0, T = 2.0, x = 1.0, phi = 0.0, r_d = 0.0, om = 0.0;
  std::string z_s = "1", u_s = "1", v_s = "1", w_s = "1", method_s = "rep1", form_s = "first";
  auto* bj = bessel->add_subcommand("J", "Bold Bessel kernel J_{i kappa, p}(z)");
  bj->add_option("--kappa", kappa, "kappa")->capture_default_str();
  bj->add_option("--p", p_i, "p")->capture_default_str();
  bj->add_option("--z", z_s, "z")->capture_default_str();
  bj->callback([&] {
    action = [&] {
      const cplx z = complex_arg(z_s, "--z");
      json j{{"op", "J"}, {"kappa", kappa}, {"p", p_i}, {"z", gls::to_string_complex(z)}};
      put_complex(j, "value", gls::bold_J(kappa, p_i, z));
      emit_value(j, g.format());
    };
  });
  auto* bh = bessel->add_subcommand("H", "Bessel integral H(z;u)")->alias("eval");
  bh->add_option("--z", z_s, "z")->capture_default_str();
  bh->add_option("--u", u_s, "u")->capture_default_str();
  bh->add_option("--K", K, "K")->capture_default_str();
  bh->add_option("--P", P, "P")->capture_default_str();
  bh->add_option("--T", T, "T")->capture_default_str();
  bh->add_option("--method", method_s, "direct, rep1 or rep2")->capture_default_str();
  bh->callback([&] {
    action = [&] {
      const cplx z = complex_arg(z_s, "--z"), u = complex_arg(u_s, "--u");
      gls::HMethod m;
      if (method_s == "direct") m = gls::HMethod::direct;
      else if (method_s == "rep1") m = gls::HMethod::rep1;
      else if (method_s == "rep2") m = gls::HMethod::rep2;
      else throw UsageError("--method: expected direct, rep1 or rep2");
      gls::QuadratureSpec q;
      q.tol = g.tol;
      const auto r = gls::H_bessel(z, u, gls::SpectralParams{K, P, T}, q, m);
      json j{{"op", "H"}, {"method", method_s}, {"z", gls::to_string_complex(z)}, {"u", gls::to_string_complex(u)},
             {"K", K}, {"P", P}, {"T", T}};
      put_complex(j, "value", r.value);
      j["error"] = r.error;
      j["nodes"] = r.nodes;
      emit_value(j, g.format());
    };
  });
  auto* bi = bessel->add_subcommand("I", "Integral I(v,w) with K = P = T");
  bi->add_option("--v", v_s, "v")->capture_default_str();
  bi->add_option("--w", w_s, "w")->capture_default_str();
  bi->add_option("--T", T, "T")->capture_default_str();
  bi->add_option("--form", form_s, "first, second, natural or main")->capture_default_str();
  bi->callback([&] {
    action = [&] {
      const cplx v = complex_arg(v_s, "--v"), w = complex_arg(w_s, "--w");
      gls::IForm f;
      if (form_s == "first") f = gls::IForm::first;
      else if (form_s == "second") f = gls::IForm::second;
      else if (form_s == "natural") f = gls::IForm::natural;
      else if (form_s == "main") f = gls::IForm::main;
      else throw UsageError("--form: expected first, second, natural or main");
      gls::QuadratureSpec q;
      q.tol = g.tol;
      const auto r = gls::I_variant(v, w, gls::SpectralParams::square(T), q, f);
      json j{{"op", "I"}, {"form", form_s}, {"v", gls::to_string_complex(v)}, {"w", gls::to_string_complex(w)},
             {"T", T}};
      put_complex(j, "value", r.value);
      j["error"] = r.error;
      emit_value(j, g.format());
    };
  });
  auto* bw = bessel->add_subcommand("weights", "k, theta, f, f_natural and the cutoff at (r, omega)");
  bw->add_option("--r", r_d, "r")->capture_default_str();
  bw->add_option("--omega", om, "omega")->capture_default_str();
  bw->add_option("--K", K, "K")->capture_default_str();
  bw->add_option("--P", P, "P")->capture_default_str();
  bw->add_option("--T", T, "T")->capture_default_str();
  bw->callback([&] {
    action = [&] {
      const auto pt = gls::DualPoint::make(r_d, om);
      const auto w = gls::weights(pt, gls::SpectralParams{K, P, T});
      json j{{"op", "weights"}, {"r", pt.r}, {"omega", pt.omega}, {"k", w.k}, {"theta", w.theta}, {"f", w.f},
             {"f_natural", w.f_nat}, {"tau_cut", w.tau_cut}};
      put_complex(j, "trh", gls::trh(pt));
      put_complex(j, "trh_prime", gls::trh_prime(pt));
      emit_value(j, g.format());
    };
  });
  auto* bl = bessel->add_subcommand("line-rep", "Residual of the line integral representation");
  bl->add_option("--kappa", kappa, "kappa")->capture_default_str();
  bl->add_option("--p", p_i, "p")->capture_default_str();
  bl->add_option("--x", x, "x")->capture_default_str();
  bl->add_option("--phi", phi, "phi")->capture_default_str();
  bl->callback([&] {
    action = [&] {
      gls::QuadratureSpec q;
      q.tol = g.tol;
      emit_value(json{{"op", "line-rep"}, {"residual", gls::boldj_line_rep_residual(kappa, p_i, x, phi, q)}},
                 g.format());
    };
  });

  auto* bv = bessel->add_subcommand("verify", "Sweep: lemma3, line-rep, circle, theta, lemma41 or p-symmetrization");
  std::string bv_name = "lemma3", grid = "small";
  bv->add_option("sweep", bv_name, "sweep name")->capture_default_str();
  bv->add_option("--grid", grid, "small or full")->capture_default_str();
  bv->callback([&] {
    action = [&] {
      if (grid != "small" && grid != "full") throw UsageError("--grid: expected small or full");
      const bool full = grid == "full";
      gls::QuadratureSpec q;
      q.tol = g.tol;
      std::vector<gls::Report> rs;
      if (bv_name == "lemma3") rs = {gls::verify_three_way(full ? 3 : 1)};
      else if (bv_name == "line-rep") rs = {gls::verify_line_rep()};
      else if (bv_name == "circle") rs = {gls::verify_circle_formula()};
      else if (bv_name == "theta") rs = {gls::verify_theta_poisson(), gls::verify_gaussian_ft()};
      else if (bv_name == "lemma41") rs = {full ? gls::verify_lemma41(8, 16, 4, 4, q) : gls::verify_lemma41(8, 16, 2, 2, q)};
      else if (bv_name == "p-symmetrization") rs = {gls::verify_p_symmetrization(3, 1.0, g.seed)};
      else throw UsageError("bessel verify: unknown sweep " + bv_name);
      code = emit_reports(rs, g);
    };
  });

  // fker
  auto* fker = app.add_subcommand("fker", "Fourier kernels f and f^");
  fker->require_subcommand(1);
  double fT = 4.0;
  std::string fmethod = "formula";
  auto* ff = fker->add_subcommand("f", "f(w; v)");
  ff->add_option("--w", w_s, "w")->capture_default_str();
  ff->add_option("--v", v_s, "v")->capture_default_str();
  ff->add_option("--T", fT, "T")->capture_default_str();
  ff->callback([&] {
    action = [&] {
      const cplx w = complex_arg(w_s, "--w"), v = complex_arg(v_s, "--v");
      emit_value(json{{"op", "f"}, {"w", gls::to_string_complex(w)}, {"v", gls::to_string_complex(v)}, {"T", fT},
                      {"value", gls::f_kernel(w, v, fT)}},
                 g.format());
    };
  });
  auto* fh = fker->add_subcommand("fhat", "f^(u; v)");
  fh->add_option("--u", u_s, "u")->capture_default_str();
  fh->add_option("--v", v_s, "v")->capture_default_str();
  fh->add_option("--T", fT, "T")->capture_default_str();
  fh->add_option("--method", fmethod, "formula, direct or both")->capture_default_str();
  fh->callback([&] {
    action = [&] {
      const cplx u = complex_arg(u_s, "--u"), v = complex_arg(v_s, "--v");
      if (fmethod == "both") {
        const double a = gls::f_hat(u, v, fT, gls::FhatMethod::formula);
        const double b = gls::f_hat(u, v, fT, gls::FhatMethod::direct);
        emit_value(json{{"op", "fhat"}, {"method", "both"}, {"u", gls::to_string_complex(u)},
                        {"v", gls::to_string_complex(v)}, {"T", fT}, {"formula", a}, {"direct", b},
                        {"deviation", std::abs(a - b)}},
                   g.format());
        return;
      }
      gls::FhatMethod m;
      if (fmethod == "formula") m = gls::FhatMethod::formula;
      else if (fmethod == "direct") m = gls::FhatMethod::direct;
      else throw UsageError("--method: expected formula or direct");
      emit_value(json{{"op", "fhat"}, {"method", fmethod}, {"u", gls::to_string_complex(u)},
                      {"v", gls::to_string_complex(v)}, {"T", fT}, {"value", gls::f_hat(u, v, fT, m)}},
                 g.format());
    };
  });

  // sieve
  auto* sieve = app.add_subcommand("sieve", "Large-sieve ratios and the assembled quadratic forms");
  sieve->require_subcommand(1);
  std::string kind_s = "classical", dist_s = "gaussian", lv_s = "4", lc_s = "3+2i";
  gls::LsParams lp;
  int trials = 20;
  auto* sr = sieve->add_subcommand("ratio", "Max LHS/RHS of a large-sieve inequality over seeded trials");
  sr->add_option("--kind", kind_s,
                 "classical, hybrid, cor1, cor2, quadform, mean_value or ramanujan_ineq")
      ->capture_default_str();
  sr->add_option("--C", lp.C, "modulus bound")->capture_default_str();
  sr->add_option("--N", lp.N, "support starts above N")->capture_default_str();
  sr->add_option("--Lambda", lp.Lambda, "support length (0 selects N)")->capture_default_str();
  sr->add_option("--rho", lp.rho, "disc radius")->capture_default_str();
  sr->add_option("--v", lv_s, "complex scale v")->capture_default_str();
  sr->add_option("--c", lc_s, "modulus for quadform and mean_value")->capture_default_str();
  sr->add_option("--trials", trials, "trials")->capture_default_str();
  sr->callback([&] {
    action = [&] {
      const auto kind = ls_kind(kind_s);
      lp.v = complex_arg(lv_s, "--v");
      lp.c = gauss(lc_s, "--c");
      code = emit_reports({gls::ls_ratios(kind, lp, trials, g.seed)}, g);
    };
  });
  double sN = 1.5, sT = 4.0, sX = std::sqrt(2.0);
  std::string check = "none";
  auto* sa = sieve->add_subcommand("assemble", "Sigma, Q, Z and S for a generated coefficient sequence");
  sa->add_option("--N", sN, "support N < |n| <= 2N")->capture_default_str();
  sa->add_option("--T", sT, "T")->capture_default_str();
  sa->add_option("--X", sX, "modulus bound |c| <= X")->capture_default_str();
  sa->add_option("--dist", dist_s, "unit, gaussian or sparse")->capture_default_str();
  sa->add_option("--check", check, "none, poisson, forms or z")->capture_default_str();
  sa->callback([&] {
    action = [&] {
      gls::CoeffDist dist;
      try {
        dist = gls::parse_coeff_dist(dist_s);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      if (check == "poisson") {
        code = emit_reports({gls::verify_q_split(sT, sX, g.seed)}, g);
        return;
      }
      if (check == "forms") {
        code = emit_reports({gls::verify_q_forms(sT, static_cast<std::int64_t>(std::floor(sX * sX + 1e-9)), g.seed)}, g);
        return;
      }
      if (check == "z") {
        code = emit_reports({gls::verify_prop_z(sT, sX, sN, g.seed)}, g);
        return;
      }
      if (check != "none") throw UsageError("--check: expected none, poisson, forms or z");
      const auto a = gls::coeff_gen(sN, dist, g.seed);
      const auto sig = gls::sigma_bilinear(a, sT, 60.0);
      const auto split = gls::q_poisson_split(a, sT, sX);
      emit_value(json{{"op", "assemble"},
                      {"N", sN},
                      {"T", sT},
                      {"X", sX},
                      {"dist", dist_s},
                      {"ideals", a.size()},
                      {"norm2", a.norm2()},
                      {"sigma", sig.value},
                      {"sigma_tail", sig.tail},
                      {"Q", split.Q},
                      {"Z", split.Z},
                      {"S", split.S},
                      {"dual_tail", split.tail}},
                 g.format());
    };
  });
  std::vector<double> Ts{3, 4, 5, 6};
  double eN = 10.0;
  auto* se = sieve->add_subcommand("e0", "E0 against Sigma/32, one row per T");
  se->add_option("--N", eN, "support N < |n| <= 2N")->capture_default_str();
  se->add_option("--T", Ts, "T values")->capture_default_str();
  se->add_option("--dist", dist_s, "unit, gaussian or sparse")->capture_default_str();
  se->callback([&] {
    action = [&] {
      gls::CoeffDist dist;
      try {
        dist = gls::parse_coeff_dist(dist_s);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      const auto a = gls::coeff_gen(eN, dist, g.seed);
      const Format f = g.format();
      if (f == Format::csv) std::cout << "N,T,E0,sigma_over_32,ratio\n";
      for (double t : Ts) {
        const auto z = gls::e_zero_split(a, t);
        const json j{{"N", eN}, {"T", t}, {"E0", z.E0}, {"sigma_over_32", z.sigma_over_32}, {"ratio", z.ratio()}};
        if (f == Format::csv) {
          std::cout << plain(j["N"]) << ',' << plain(j["T"]) << ',' << plain(j["E0"]) << ','
                    << plain(j["sigma_over_32"]) << ',' << plain(j["ratio"]) << '\n';
        } else {
          emit_value(j, f);
        }
      }
    };
  });
  auto* sei = sieve->add_subcommand("eisenstein", "Eisenstein contribution by quadrature");
  sei->add_option("--N", sN, "support N < |n| <= 2N")->capture_default_str();
  sei->add_option("--T", sT, "T (at most 6)")->capture_default_str();
  sei->add_option("--dist", dist_s, "unit, gaussian or sparse")->capture_default_str();
  sei->callback([&] {
    action = [&] {
      gls::CoeffDist dist;
      try {
        dist = gls::parse_coeff_dist(dist_s);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      const auto a = gls::coeff_gen(sN, dist, g.seed);
      const auto e = gls::eisenstein_E(a, sT);
      emit_value(json{{"op", "eisenstein"}, {"N", sN}, {"T", sT}, {"value", e.value}, {"zeta_caveat", e.zeta_caveat},
                      {"nodes", e.nodes}},
                 g.format());
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  bool quick = false;
  verify->add_option("suite", suite, "suite name, all, or list")->capture_default_str();
  verify->add_flag("--quick", quick, "smaller instances; with all, only the exact-identity suites");
  verify->callback([&] {
    action = [&] {
      if (suite == "list") {
        for (const auto& n : gls::suite_names()) std::cout << n << '\n';
        return;
      }
      gls::SuiteOptions o;
      o.quick = quick;
      o.seed = g.seed;
      std::vector<gls::Report> rs;
      try {
        rs = gls::run_suite(suite, o);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      code = emit_reports(rs, g);
    };
  });

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = apply_config(args);
    // CLI11 consumes the vector from the back.
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  g.json = json_opt->count() > 0;
  std::ofstream json_file;
  struct RestoreCout {
    std::streambuf* buf = std::cout.rdbuf();
    ~RestoreCout() { std::cout.rdbuf(buf); }
  } restore_guard;
  if (!g.json_path.empty()) {
    json_file.open(g.json_path);
    if (!json_file) {
      std::cerr << "error: cannot write " << g.json_path << '\n';
      return 2;
    }
    std::cout.rdbuf(json_file.rdbuf());
  }

  unsigned threads = g.threads;
  if (threads == 0) threads = gls::workers_from_env();
  gls::set_workers(threads);

  try {
    if (action) action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const gls::CostExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return code;
}
