#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gls/report.hpp"

namespace gls {

struct SuiteOptions {
  bool quick = false;
  std::uint64_t seed = 7;
};

// Names accepted by run_suite, in execution order of "all".
std::vector<std::string> suite_names();
// Suites run by "all" with quick set.
std::vector<std::string> quick_suite_names();
// Runs one named suite or "all". Throws std::invalid_argument on an unknown name.
std::vector<Report> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace gls
