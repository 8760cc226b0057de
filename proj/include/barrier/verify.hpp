#ifndef BARRIER_VERIFY_HPP
#define BARRIER_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "barrier/core.hpp"

namespace barrier {

struct CheckResult {
  std::string name;    // stable identifier, kebab-case
  std::string anchor;  // which invariant the check pins down
  double value = 0.0;  // measured residual (or margin for lower bounds)
  double tolerance = 0.0;
  bool lower_bound = false;  // pass means value >= tolerance
  bool pass = false;
};

struct VerifyOptions {
  double coeff_fault = 0.0;  // additive fault injected into t, for self-tests
  std::map<std::string, double> tol_overrides;
};

// Suites: coeffs, eigen, green, measure, transforms, testspace, all.
// Throws std::invalid_argument on an unknown suite name.
std::vector<CheckResult> run_suite(const PhysicalConfig& cfg,
                                   const std::string& suite,
                                   const VerifyOptions& opts = {});

std::vector<std::string> suite_names();

}  // namespace barrier

#endif
