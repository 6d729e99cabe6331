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

#include <random>

#include "fermispec/circuit.hpp"

namespace fermispec::testing {

/** Random circuit over every gate kind; clifford_only drops Rz and Givens. */
inline Circuit random_circuit(unsigned n, unsigned gates, std::mt19937_64& rng,
                              bool clifford_only = false) {
  std::vector<GateKind> kinds{GateKind::CZ, GateKind::CX, GateKind::CY,
                              GateKind::SWAP, GateKind::FSWAP, GateKind::X,
                              GateKind::Z, GateKind::S, GateKind::Sdg};
  if (!clifford_only) {
    kinds.push_back(GateKind::Rz);
    kinds.push_back(GateKind::Givens);
  }
  std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1);
  std::uniform_int_distribution<unsigned> q(0, n - 1);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  Circuit c(n);
  while (c.size() < gates) {
    const GateKind k = kinds[pick(rng)];
    const unsigned a = q(rng);
    if (kind_arity(k) == 1) {
      c.add(k == GateKind::Rz ? Gate::rz(ang(rng), a) : [&] {
        switch (k) {
          case GateKind::X: return Gate::x(a);
          case GateKind::Z: return Gate::z(a);
          case GateKind::S: return Gate::s(a);
          default: return Gate::sdg(a);
        }
      }());
      continue;
    }
    if (n < 2) continue;
    unsigned b = q(rng);
    while (b == a) b = q(rng);
    switch (k) {
      case GateKind::CZ: c.add(Gate::cz(a, b)); break;
      case GateKind::CX: c.add(Gate::cx(a, b)); break;
      case GateKind::CY: c.add(Gate::cy(a, b)); break;
      case GateKind::SWAP: c.add(Gate::swap(a, b)); break;
      case GateKind::FSWAP: c.add(Gate::fswap(a, b)); break;
      default: c.add(Gate::givens(ang(rng), a, b)); break;
    }
  }
  return c;
}

}  // namespace fermispec::testing
