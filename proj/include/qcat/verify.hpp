#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcat {

struct Check {
  std::string name;
  bool pass = false;
};

struct SuiteParams {
  int p = 2;
  int order = 8;
  std::uint64_t seed = 20240611;
};

// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();
// Throws DomainError on an unknown name.  "all" runs every suite.
std::vector<Check> run_suite(const std::string& name, const SuiteParams& params);

}  // namespace qcat
