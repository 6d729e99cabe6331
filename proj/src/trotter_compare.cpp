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

#include "fermispec/trotter_compare.hpp"

#include <cmath>
#include <limits>

#include "fermispec/baseline.hpp"
#include "fermispec/protocol.hpp"

namespace fermispec {

namespace {

constexpr double kBound = 1e-12;

TrotterErrorRow score(const std::string& method, double eps, unsigned steps,
                      const Eigen::MatrixXd& a, const Eigen::MatrixXd& ref) {
  TrotterErrorRow r;
  r.method = method;
  r.epsilon = eps;
  r.steps = steps;
  r.scale = least_squares_scale(a, ref);
  const Eigen::ArrayXXd err = (r.scale * a - ref).array().abs();
  r.mean_abs_error = err.mean();
  r.max_error = err.maxCoeff();
  r.min_sample = a.minCoeff();
  r.max_sample = a.maxCoeff();
  r.negative_samples = static_cast<std::size_t>((a.array() < -kBound).count());
  r.occupations_in_unit_interval = true;
  return r;
}

bool in_unit_interval(const SpectralGrid& g) {
  return g.min() >= -kBound && g.max() <= 1.0 + kBound;
}

}  // namespace

TrotterCompareConfig::TrotterCompareConfig() {
  base.N = 9;
  base.V = 4.0;
  base.t = 5.0;
  base.nu = 1.0;
  omegas = default_omega_grid(base.nu);
}

double least_squares_scale(const Eigen::MatrixXd& a, const Eigen::MatrixXd& ref) {
  const double aa = a.squaredNorm();
  if (aa == 0.0) return 0.0;
  return (a.array() * ref.array()).sum() / aa;
}

TrotterCompareResult compare_trotter(const TrotterCompareConfig& cfg) {
  cfg.base.validate();
  if (cfg.omegas.empty()) throw ConfigError("omega_count: need at least one omega");
  TrotterCompareResult out;

  auto with = [&](EnvironmentFill fill, unsigned steps, double eps) {
    ProtocolConfig c = cfg.base;
    c.fill = fill;
    c.trotter_steps = steps;
    c.epsilon = eps;
    return c;
  };

  SpectralGrid plus = lehmann_reference(with(EnvironmentFill::Empty, 0, 0), cfg.omegas);
  SpectralGrid minus = lehmann_reference(with(EnvironmentFill::Full, 0, 0), cfg.omegas);
  out.reference = plus;
  out.reference.values += minus.values;
  out.reference.method = "lehmann-combined";
  const Eigen::MatrixXd& ref = out.reference.values;

  std::vector<unsigned> steps;
  if (cfg.continuous) steps.push_back(0);
  steps.insert(steps.end(), cfg.steps.begin(), cfg.steps.end());

  for (unsigned s : steps) {
    for (double eps : cfg.epsilons) {
      SpectralGrid e = nk_many_body(with(EnvironmentFill::Empty, s, eps), cfg.omegas);
      SpectralGrid f = nk_many_body(with(EnvironmentFill::Full, s, eps), cfg.omegas);
      TrotterErrorRow row =
          score("environment", eps, s, e.values + f.values, ref);
      row.occupations_in_unit_interval = in_unit_interval(e) && in_unit_interval(f);
      out.rows.push_back(row);
    }
    SpectralGrid bp = dynamical_correlation_baseline(
        with(EnvironmentFill::Empty, s, cfg.base.epsilon), cfg.omegas);
    SpectralGrid bm = dynamical_correlation_baseline(
        with(EnvironmentFill::Full, s, cfg.base.epsilon), cfg.omegas);
    out.rows.push_back(score("correlation",
                             std::numeric_limits<double>::quiet_NaN(), s,
                             bp.values + bm.values, ref));
  }
  return out;
}

}  // namespace fermispec
