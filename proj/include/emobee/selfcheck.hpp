// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace emobee {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Quick invariant checks over the model, dynamics, mean-field integrator and
/// kernels, run by `emobee validate`.
std::vector<CheckResult> run_self_checks();

}  // namespace emobee
