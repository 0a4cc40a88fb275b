#include "gls/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace gls {

Report::Report(std::string n, double l, double budget) : name(std::move(n)) { set(l, budget); }

void Report::set(double l, double budget) {
  if (!(budget > 0.0)) throw std::domain_error("report budget must be positive");
  lhs = l;
  rhs_budget = budget;
  ratio = l / budget;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["lhs"] = r.lhs;
  j["rhs_budget"] = r.rhs_budget;
  j["ratio"] = r.ratio;
  j["passed"] = r.passed;
  j["params"] = r.params;
  j["elapsed"] = r.elapsed;
  return j;
}

namespace {
std::string cell(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}
}  // namespace

std::string csv_header(const Report& r) {
  std::ostringstream os;
  os << "name";
  for (const auto& [k, v] : r.params.items()) os << ',' << k;
  os << ",lhs,rhs_budget,ratio,passed,elapsed";
  return os.str();
}

std::string csv_row(const Report& r) {
  std::ostringstream os;
  os.precision(17);
  os << r.name;
  for (const auto& [k, v] : r.params.items()) os << ',' << cell(v);
  os << ',' << r.lhs << ',' << r.rhs_budget << ',' << r.ratio << ',' << (r.passed ? 1 : 0) << ',' << r.elapsed;
  return os.str();
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace gls
