// Copyright 2026 The fermispec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fermispec {

struct CheckResult {
  std::string name;
  bool passed = false;
  /** Measured values, one line. */
  std::string detail;
  double seconds = 0.0;
};

/** Runs fn, timing it; exceptions become a failed result. */
CheckResult run_check(const std::string& name,
                      const std::function<bool(std::string&)>& fn);

// Numbered release checks. Each one carries its own tolerances and time
// budget; exceeding the budget fails the check.
CheckResult check_fft_transfer_matrices();      // 1
CheckResult check_base_gate_counts();           // 2
CheckResult check_interleave_27();              // 3
CheckResult check_decimation();                 // 4
CheckResult check_free_oracles();               // 5
CheckResult check_perturbative_scaling();       // 6
CheckResult check_ghost_bound();                // 7
CheckResult check_strong_coupling();            // 8
CheckResult check_trotter_comparison();         // 9

/** The nine numbered checks in order; the last is skipped unless include_slow. */
std::vector<CheckResult> acceptance_checks(bool include_slow = true);

/**
 * Further cross-checks between independent code paths: circuit pipeline
 * against the Gaussian and sector engines, Empty/Full symmetry, sum rule,
 * baseline against the kernel, broadening zeros.
 */
std::vector<CheckResult> oracle_checks();

}  // namespace fermispec
