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

#include "fermispec/fft_compiler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fermispec {

namespace {

constexpr double kPi = std::numbers::pi;

class Builder {
 public:
  Builder(const FFTPlan& plan)
      : plan_(plan),
        out_(plan.num_modes),
        layout_(identity_layout(plan.num_modes)) {}

  Circuit finish() {
    out_.set_output_layout(layout_);
    return std::move(out_);
  }

  void fft(unsigned base, unsigned size) {
    const unsigned n = plan_.radix;
    if (size == n) {
      base_block(base);
      return;
    }
    const unsigned m = size / n;
    reorder(base, size, n);
    for (unsigned l = 0; l < n; ++l) fft(base + l * m, m);
    // exp(2 pi i b l / N) on mode l M + b, an Rz of the opposite angle
    for (unsigned l = 1; l < n; ++l)
      for (unsigned b = 1; b < m; ++b) {
        const unsigned e = (b * l) % size;
        out_.add(Gate::rz(-2.0 * kPi * e / size, layout_[base + l * m + b]));
      }
    reorder(base, size, m);
    for (unsigned b = 0; b < m; ++b) base_block(base + b * n);
    reorder(base, size, n);
  }

 private:
  void base_block(unsigned base) {
    const unsigned n = plan_.radix;
    std::vector<unsigned> map(n);
    for (unsigned i = 0; i < n; ++i) map[i] = layout_[base + i];
    out_.append(base_fft(n), map);
  }

  void reorder(unsigned base, unsigned size, unsigned radix) {
    auto perm = interleave_permutation(size, radix);
    if (size == radix) return;
    Circuit r = interleave_circuit(perm, plan_.interleave, plan_.depth_penalty);
    std::vector<unsigned> map(size);
    for (unsigned i = 0; i < size; ++i) map[i] = layout_[base + i];
    out_.append(r, map);
    std::vector<unsigned> next(size);
    for (unsigned pos = 0; pos < size; ++pos)
      next[pos] = map[r.output_layout()[pos]];
    for (unsigned pos = 0; pos < size; ++pos) layout_[base + pos] = next[pos];
  }

  FFTPlan plan_;
  Circuit out_;
  std::vector<unsigned> layout_;
};

}  // namespace

void validate_plan(const FFTPlan& plan) {
  if (plan.radix != 2 && plan.radix != 3)
    throw std::invalid_argument("unsupported radix " +
                                std::to_string(plan.radix) +
                                " (supported radices: 2, 3)");
  unsigned n = plan.num_modes;
  if (n < plan.radix)
    throw std::invalid_argument("mode count " + std::to_string(n) +
                                " is not a positive power of the radix");
  while (n % plan.radix == 0) n /= plan.radix;
  if (n != 1)
    throw std::invalid_argument("mode count " +
                                std::to_string(plan.num_modes) +
                                " is not a power of radix " +
                                std::to_string(plan.radix));
  if (plan.interleave == InterleaveStrategy::ImportedSequence &&
      !(plan.radix == 3 && (plan.num_modes == 9 || plan.num_modes == 27)) &&
      plan.num_modes != plan.radix)
    throw std::invalid_argument(
        "imported interleave covers only N=9 and N=27 with radix 3");
}

std::optional<unsigned> compilable_radix(unsigned num_modes) {
  for (unsigned r : {2u, 3u}) {
    try {
      validate_plan({num_modes, r, InterleaveStrategy::GraphDecimated});
      return r;
    } catch (const std::invalid_argument&) {
    }
  }
  return std::nullopt;
}

Circuit base_fft(unsigned n) {
  if (n == 2) {
    Circuit c(2);
    c.add(Gate::sdg(0));
    c.add(Gate::givens(-kPi / 4, 0, 1));
    c.add(Gate::s(0));
    c.add(Gate::z(1));
    return c;
  }
  if (n == 3) {
    const double beta = std::acos(1.0 / std::sqrt(3.0));
    Circuit c(3);
    c.add(Gate::sdg(1));
    c.add(Gate::givens(-kPi / 4, 1, 2));
    c.add(Gate::s(1));
    c.add(Gate::sdg(0));
    c.add(Gate::givens(-beta, 0, 1));
    c.add(Gate::s(0));
    c.add(Gate::givens(-kPi / 4, 1, 2));
    c.add(Gate::z(1));
    c.add(Gate::sdg(2));
    return c;
  }
  throw std::invalid_argument("unsupported radix " + std::to_string(n) +
                              " (supported radices: 2, 3)");
}

Circuit compile_fft(const FFTPlan& plan) {
  validate_plan(plan);
  Builder b(plan);
  b.fft(0, plan.num_modes);
  return b.finish();
}

std::vector<unsigned> negative_energy_momenta(unsigned num_modes, double nu) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < num_modes; ++m) {
    double e = 2.0 * nu * std::cos(2.0 * kPi * m / num_modes);
    // cos k = 0 happens for N divisible by 4; leave that level empty
    if (e < -1e-12) out.push_back(m);
  }
  return out;
}

Circuit ground_state_prep_circuit(unsigned num_modes,
                                  const std::vector<unsigned>& filled_momenta,
                                  InterleaveStrategy interleave) {
  auto radix = compilable_radix(num_modes);
  if (!radix)
    throw std::invalid_argument("no Fourier circuit for " +
                                std::to_string(num_modes) + " modes");
  FFTPlan plan{num_modes, *radix, interleave};
  Circuit inv = invert(compile_fft(plan));
  Circuit prep(num_modes);
  for (unsigned k : filled_momenta) {
    if (k >= num_modes)
      throw std::invalid_argument("momentum index out of range");
    prep.add(Gate::x(inv.input_layout()[k]));
  }
  prep.append(inv);
  prep.set_input_layout(inv.input_layout());
  prep.set_output_layout(inv.output_layout());
  return prep;
}

}  // namespace fermispec
