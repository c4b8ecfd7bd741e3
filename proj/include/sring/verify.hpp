#pragma once

#include <string>
#include <vector>

#include "sring/oracle.hpp"

namespace sring {

struct SuiteResult {
  std::string name;
  int max_n = 0;
  int checked = 0;
  std::vector<std::string> failures;
  // Noteworthy but not failing observations, e.g. non-separable instances.
  std::vector<std::string> info;

  bool passed() const noexcept { return failures.empty(); }
};

// axioms, pgroups, duality, phi-iso, oracle, coset-closure, reduction, projective, burnside
const std::vector<std::string>& suite_names();

// Runs the named suite over 1 <= n <= max_n. Throws InvalidInput for an unknown
// suite and LimitExceeded when max_n exceeds an oracle bound the suite needs.
SuiteResult run_suite(const std::string& name, int max_n, const OracleLimits& limits = {});

}  // namespace sring
