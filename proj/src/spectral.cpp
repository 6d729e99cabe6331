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

#include "fermispec/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/minima.hpp>

#include "fermispec/fft_compiler.hpp"
#include "fermispec/mode_transform.hpp"
#include "fermispec/protocol.hpp"

namespace fermispec {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ConfigError(field + ": " + what);
}

double sinc2_window(double x2, double eps2, double t) {
  // sin^2(t sqrt(eps^2 + x^2) / 2) / (eps^2 + x^2)
  const double s = eps2 + x2;
  if (s < 1e-300) return t * t / 4.0;
  const double half = 0.5 * t * std::sqrt(s);
  if (half < 1e-6) return t * t / 4.0 * (1.0 - half * half / 3.0);
  const double sn = std::sin(half);
  return sn * sn / s;
}

void require_free(const ProtocolConfig& cfg, const char* who) {
  if (cfg.V != 0.0)
    throw std::invalid_argument(std::string(who) +
                                ": needs free fermions (V = 0)");
}

}  // namespace

std::string fill_name(EnvironmentFill f) {
  return f == EnvironmentFill::Empty ? "empty" : "full";
}

std::string initial_state_name(InitialState s) {
  return s == InitialState::GroundState ? "ground" : "occupations";
}

void ProtocolConfig::validate() const {
  require(N >= 2, "N", "must be at least 2");
  require(std::isfinite(epsilon), "epsilon", "must be finite");
  require(std::isfinite(omega), "omega", "must be finite");
  require(std::isfinite(t) && t >= 0.0, "t", "must be finite and >= 0");
  require(std::isfinite(nu), "nu", "must be finite");
  require(std::isfinite(V), "V", "must be finite");
  require(particles >= -1 && particles <= static_cast<int>(N), "particles",
          "must be -1 or between 0 and N");
  require(quadrature_points >= 3 && quadrature_points % 2 == 1,
          "quadrature_points", "must be odd and at least 3");
  if (initial == InitialState::Occupations) {
    require(rho.size() == N, "rho",
            "needs one occupation per momentum (" + std::to_string(N) + ")");
    for (double r : rho)
      require(std::isfinite(r) && r >= 0.0 && r <= 1.0, "rho",
              "occupations must lie in [0, 1]");
  }
}

std::vector<double> momentum_grid(unsigned n) {
  std::vector<double> k(n);
  for (unsigned m = 0; m < n; ++m) k[m] = 2.0 * kPi * m / n;
  return k;
}

std::vector<double> linspace(double lo, double hi, unsigned count) {
  std::vector<double> v(count);
  if (count == 1) {
    v[0] = lo;
    return v;
  }
  for (unsigned i = 0; i < count; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  return v;
}

std::vector<double> default_omega_grid(double nu, unsigned count) {
  const double span = 3.0 * std::max(std::abs(nu), 1.0);
  return linspace(-span, span, count);
}

std::size_t SpectralGrid::count_below(double threshold) const {
  return static_cast<std::size_t>((values.array() < threshold).count());
}

SpectralGrid make_grid(const ProtocolConfig& cfg,
                       const std::vector<double>& omegas,
                       const std::string& method) {
  SpectralGrid g;
  g.k = momentum_grid(cfg.N);
  g.omega = omegas;
  g.values = Eigen::MatrixXd::Zero(cfg.N, static_cast<Eigen::Index>(omegas.size()));
  g.method = method;
  g.config = cfg;
  return g;
}

Eigen::VectorXd momentum_occupations(const ProtocolConfig& cfg) {
  cfg.validate();
  if (cfg.initial == InitialState::Occupations)
    return Eigen::Map<const Eigen::VectorXd>(cfg.rho.data(), cfg.N);
  if (cfg.V == 0.0 && cfg.particles < 0) {
    Eigen::VectorXd rho = Eigen::VectorXd::Zero(cfg.N);
    for (unsigned m : negative_energy_momenta(cfg.N, cfg.nu)) rho(m) = 1.0;
    return rho;
  }
  return momentum_occupations(initial_system_state(cfg).state);
}

SpectralGrid nk_exact_free(const ProtocolConfig& cfg,
                           const std::vector<double>& omegas) {
  require_free(cfg, "nk_exact_free");
  Eigen::VectorXd rho = momentum_occupations(cfg);
  if (cfg.fill == EnvironmentFill::Full) rho = (1.0 - rho.array()).matrix();
  SpectralGrid g = make_grid(cfg, omegas, "exact-free");
  const double e2 = cfg.epsilon * cfg.epsilon;
  for (unsigned m = 0; m < cfg.N; ++m) {
    const double band = 2.0 * cfg.nu * std::cos(g.k[m]);
    for (std::size_t w = 0; w < omegas.size(); ++w) {
      const double x = omegas[w] - band;
      g.values(m, w) = e2 * sinc2_window(x * x, e2, cfg.t) * rho(m);
    }
  }
  return g;
}

SpectralGrid nk_gaussian(const ProtocolConfig& cfg,
                         const std::vector<double>& omegas) {
  require_free(cfg, "nk_gaussian");
  const Eigen::VectorXd rho = momentum_occupations(cfg);
  const unsigned n = cfg.N;
  const auto k = momentum_grid(n);

  // <c_i^dag c_j> = (1/N) sum_k rho_k exp(i k (j - i))
  GaussianState init{Eigen::MatrixXcd::Zero(2 * n, 2 * n)};
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (unsigned m = 0; m < n; ++m)
        s += rho(m) * std::polar(1.0, k[m] * ((static_cast<double>(j) - i)));
      init.corr(2 * i, 2 * j) = s / static_cast<double>(n);
    }
  if (cfg.fill == EnvironmentFill::Full)
    for (unsigned j = 0; j < n; ++j) init.corr(2 * j + 1, 2 * j + 1) = 1.0;

  Eigen::MatrixXcd fourier(n, n);
  for (unsigned m = 0; m < n; ++m)
    for (unsigned j = 0; j < n; ++j)
      fourier(m, j) = std::polar(1.0 / std::sqrt(double(n)),
                                 -k[m] * static_cast<double>(j));

  SpectralGrid g = make_grid(cfg, omegas, "gaussian");
  const long count = static_cast<long>(omegas.size());
#pragma omp parallel for schedule(dynamic)
  for (long w = 0; w < count; ++w) {
    QuadraticEvolution ev(
        hamiltonian_mode_matrix(n, cfg.nu, cfg.epsilon, omegas[w]));
    GaussianState out = evolve_gaussian(init, ev.transform(cfg.t));
    Eigen::MatrixXcd env(n, n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) env(i, j) = out.corr(2 * i + 1, 2 * j + 1);
    // <d^dag(k) d(k)> = sum_ij conj(F_ki) F_kj C_ij
    Eigen::MatrixXcd nk = fourier.conjugate() * env * fourier.transpose();
    for (unsigned m = 0; m < n; ++m) {
      double v = nk(m, m).real();
      g.values(m, w) = cfg.fill == EnvironmentFill::Empty ? v : 1.0 - v;
    }
  }
  return g;
}

double Kernel::operator()(double omega) const {
  return sinc2_window(omega * omega, 0.0, t);
}

double Kernel::window(double v) const {
  return std::abs(v) <= t ? (t - std::abs(v)) / 4.0 : 0.0;
}

DeltaSpectrum free_particle_spectrum(unsigned n, double nu,
                                     const Eigen::VectorXd& rho) {
  DeltaSpectrum a;
  a.k = momentum_grid(n);
  a.lines.resize(n);
  for (unsigned m = 0; m < n; ++m)
    if (rho(m) != 0.0)
      a.lines[m].push_back({2.0 * nu * std::cos(a.k[m]), rho(m)});
  return a;
}

DeltaSpectrum free_hole_spectrum(unsigned n, double nu,
                                 const Eigen::VectorXd& rho) {
  return free_particle_spectrum(n, nu, (1.0 - rho.array()).matrix());
}

SpectralGrid convolve_kernel(const DeltaSpectrum& a, const Kernel& kern,
                             const std::vector<double>& omegas) {
  const unsigned n = static_cast<unsigned>(a.k.size());
  SpectralGrid g;
  g.k = a.k;
  g.omega = omegas;
  g.values = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(omegas.size()));
  g.method = "kernel";
  g.config.N = n;
  g.config.t = kern.t;
  // (1/2pi) * 2pi weight * phi(omega - centre)
  for (unsigned m = 0; m < n; ++m)
    for (const auto& line : a.lines[m])
      for (std::size_t w = 0; w < omegas.size(); ++w)
        g.values(m, w) += line.weight * kern(omegas[w] - line.center);
  return g;
}

SpectralGrid convolve_kernel(const SpectralGrid& a, const Kernel& kern,
                             const std::vector<double>& omegas) {
  if (a.omega.size() < 2)
    throw std::invalid_argument("convolve_kernel: need at least two samples");
  SpectralGrid g = a;
  g.omega = omegas;
  g.values = Eigen::MatrixXd::Zero(a.values.rows(),
                                   static_cast<Eigen::Index>(omegas.size()));
  g.method = "kernel";
  g.config.t = kern.t;
  for (Eigen::Index m = 0; m < a.values.rows(); ++m)
    for (std::size_t w = 0; w < omegas.size(); ++w) {
      double s = 0.0;
      for (std::size_t i = 0; i + 1 < a.omega.size(); ++i) {
        const double h = a.omega[i + 1] - a.omega[i];
        s += 0.5 * h *
             (a.values(m, i) * kern(omegas[w] - a.omega[i]) +
              a.values(m, i + 1) * kern(omegas[w] - a.omega[i + 1]));
      }
      g.values(m, w) = s / (2.0 * kPi);
    }
  return g;
}

BroadeningGhosts broadening_and_ghosts(double epsilon, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("broadening_and_ghosts: t > 0");
  const double et = std::abs(epsilon) * t;
  // smallest n with (n - 1) pi <= et / 2 < n pi
  const unsigned n = static_cast<unsigned>(std::floor(et / (2.0 * kPi))) + 1;
  const double q = et / (2.0 * n * kPi);
  const double ratio = et / (2.0 * n * kPi + et);
  return {2.0 * n * kPi / t * std::sqrt(1.0 - q * q), ratio * ratio, n};
}

SpectralGrid strong_coupling_leading(const ProtocolConfig& cfg,
                                     const Eigen::VectorXd& rho_in,
                                     const std::vector<double>& omegas) {
  if (rho_in.size() != static_cast<Eigen::Index>(cfg.N))
    throw std::invalid_argument("strong_coupling_leading: rho size != N");
  Eigen::VectorXd rho = rho_in;
  if (cfg.fill == EnvironmentFill::Full) rho = (1.0 - rho.array()).matrix();
  SpectralGrid g = make_grid(cfg, omegas, "strong-coupling");
  const double e2 = cfg.epsilon * cfg.epsilon;
  for (std::size_t w = 0; w < omegas.size(); ++w) {
    const double o2 = omegas[w] * omegas[w];
    const double v = o2 + e2 == 0.0
                         ? 0.0
                         : std::pow(std::sin(0.5 * cfg.t * std::sqrt(o2 + e2)), 2) *
                               e2 / (o2 + e2);
    for (unsigned m = 0; m < cfg.N; ++m) g.values(m, w) = v * rho(m);
  }
  return g;
}

SecondaryPeak secondary_peak(double epsilon, double t) {
  const auto bg = broadening_and_ghosts(epsilon, t);
  const double e2 = epsilon * epsilon;
  auto f = [&](double x) { return sinc2_window(x * x, e2, t); };
  const double lo = bg.delta_omega;
  const double u1 = 2.0 * (bg.n + 1) * kPi / t;
  const double hi = std::sqrt(u1 * u1 - e2);
  auto r = boost::math::tools::brent_find_minima(
      [&](double x) { return -f(x); }, lo, hi,
      std::numeric_limits<double>::digits / 2);
  const double peak = f(0.0);
  return {r.first, peak > 0.0 ? -r.second / peak
                              : std::numeric_limits<double>::infinity()};
}

}  // namespace fermispec
