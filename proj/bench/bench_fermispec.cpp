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


#include <random>

#include <benchmark/benchmark.h>

#include "fermispec/cz_graph.hpp"
#include "fermispec/spectral.hpp"
#include "fermispec/statevector.hpp"

using namespace fermispec;

namespace {

StateVector random_state(unsigned n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<cplx> amp(std::size_t{1} << n);
  for (auto& a : amp) a = cplx(g(rng), g(rng));
  StateVector psi(n, std::move(amp));
  psi.normalize();
  return psi;
}

std::vector<Gate> layer(unsigned n) {
  std::vector<Gate> gates;
  for (unsigned q = 0; q + 1 < n; q += 2) gates.push_back(Gate::givens(0.3, q, q + 1));
  for (unsigned q = 1; q + 1 < n; q += 2) gates.push_back(Gate::fswap(q, q + 1));
  for (unsigned q = 0; q < n; ++q) gates.push_back(Gate::rz(0.2, q));
  return gates;
}

void BM_GateSerial(benchmark::State& st) {
  const unsigned n = static_cast<unsigned>(st.range(0));
  StateVector psi = random_state(n);
  const auto gates = layer(n);
  for (auto _ : st) {
    for (const Gate& g : gates) reference::apply_gate(psi, g);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(gates.size()));
}

void BM_GateKernel(benchmark::State& st) {
  const unsigned n = static_cast<unsigned>(st.range(0));
  StateVector psi = random_state(n);
  const auto gates = layer(n);
  for (auto _ : st) {
    for (const Gate& g : gates) apply_gate_inplace(psi, g);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(gates.size()));
}

void BM_Decimate(benchmark::State& st) {
  const unsigned n = static_cast<unsigned>(st.range(0));
  std::mt19937_64 rng(2);
  std::bernoulli_distribution edge(0.3);
  CZGraph g(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      if (edge(rng)) g.add_edge(i, j);
  for (auto _ : st) benchmark::DoNotOptimize(decimate(g));
}

void BM_Gaussian(benchmark::State& st) {
  ProtocolConfig c;
  c.N = static_cast<unsigned>(st.range(0));
  const std::vector<double> w = linspace(-3, 3, 26);
  for (auto _ : st) benchmark::DoNotOptimize(nk_gaussian(c, w).values.sum());
}

}  // namespace

BENCHMARK(BM_GateSerial)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_GateKernel)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_Decimate)->Arg(9)->Arg(27);
BENCHMARK(BM_Gaussian)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
