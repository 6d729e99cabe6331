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

#include <string>
#include <vector>

#include "fermispec/spectral.hpp"

namespace fermispec {

/**
 * Error of A = A+ + A- against the exact windowed spectral function, as a
 * function of the number of Trotter steps, for the environment protocol at
 * each epsilon and for the dynamical-correlation baseline.
 */
struct TrotterCompareConfig {
  /** N, t, nu, V and the initial state; epsilon, fill and steps are swept. */
  ProtocolConfig base;
  std::vector<double> epsilons{0.1};
  std::vector<unsigned> steps{1, 2, 3, 4, 5, 6, 8, 10, 12, 16, 20, 25, 32, 40, 50};
  std::vector<double> omegas;
  /** Add continuous-time rows (steps = 0). */
  bool continuous = true;

  TrotterCompareConfig();
};

struct TrotterErrorRow {
  /** "environment" or "correlation". */
  std::string method;
  /** NaN for the baseline. */
  double epsilon;
  /** 0 is continuous time. */
  unsigned steps;
  /** Least-squares factor applied before measuring the error. */
  double scale;
  double mean_abs_error;
  double max_error;
  double min_sample;
  double max_sample;
  std::size_t negative_samples;
  /** Every occupation of both fills lies in [0, 1] (environment only). */
  bool occupations_in_unit_interval;
};

struct TrotterCompareResult {
  SpectralGrid reference;
  std::vector<TrotterErrorRow> rows;
};

/** argmin_s |s a - ref|^2; 0 when a vanishes. */
double least_squares_scale(const Eigen::MatrixXd& a, const Eigen::MatrixXd& ref);

TrotterCompareResult compare_trotter(const TrotterCompareConfig& cfg);

}  // namespace fermispec
