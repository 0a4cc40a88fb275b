#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gls {

// Outcome of a verification run: an identity residual against its budget,
// or an inequality left-hand side against its right-hand side.
struct Report {
  std::string name;
  double lhs = 0.0;
  double rhs_budget = 1.0;
  double ratio = 0.0;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  double elapsed = 0.0;
  bool passed = true;

  Report() = default;
  Report(std::string n, double l, double budget);
  void set(double l, double budget);
};

nlohmann::ordered_json to_json(const Report& r);
std::string csv_header(const Report& r);
std::string csv_row(const Report& r);

// Wall clock in seconds since an arbitrary epoch.
double now_seconds();

}  // namespace gls
