// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOLIE_VERIFICATION_HPP
#define MONOLIE_VERIFICATION_HPP

#include <string>
#include <vector>

namespace monolie {

/// One property check: pass iff residual <= tolerance.  `criterion` groups
/// checks under the numbered acceptance criteria (0 = module-level extra).
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int criterion = 0;
  std::string note;
};

struct SuiteResult {
  std::string module;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Module names accepted by verify_module, in report order.
const std::vector<std::string>& verify_module_names();

/// Runs one module's property suite.  Sampling is driven entirely by `seed`,
/// so reports are reproducible.  Throws std::invalid_argument on an unknown
/// module name.
SuiteResult verify_module(const std::string& module, unsigned seed);

/// All suites in fixed order.
std::vector<SuiteResult> verify_all(unsigned seed);

/// Deterministic text report: one line per check plus a summary line.
std::string format_report(const std::vector<SuiteResult>& results);

}  // namespace monolie

#endif  // MONOLIE_VERIFICATION_HPP
