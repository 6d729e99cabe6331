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


// Prints one PASS/FAIL line per numbered check. --quick skips check 9.

#include <cstdio>
#include <cstring>

#include "fermispec/verify.hpp"

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  int failed = 0;
  int number = 0;
  for (const auto& r : fermispec::acceptance_checks(!quick)) {
    ++number;
    std::printf("[%d] %s %s: %s (%.2f s)\n", number, r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  if (quick) std::printf("[9] SKIP trotter_comparison: --quick\n");
  std::printf("%d of %d checks failed\n", failed, number);
  return failed == 0 ? 0 : 1;
}
