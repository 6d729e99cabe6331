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

#include "fermispec/interleave.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "fermispec/circuit_io.hpp"

namespace fermispec {

namespace {

bool is_inverse_of_3way(const InterleavePermutation& p) {
  return (p.N == 27 && p.n == 9) || (p.N == 9 && p.n == 3);
}

Circuit relabel(const Circuit& c, const std::vector<unsigned>& map) {
  Circuit out(c.num_qubits());
  out.append(c, map);
  return out;
}

}  // namespace

InterleavePermutation interleave_permutation(unsigned N, unsigned n) {
  if (n == 0 || N == 0 || N % n != 0)
    throw std::invalid_argument("interleave radix " + std::to_string(n) +
                                " does not divide " + std::to_string(N));
  InterleavePermutation p{N, n, std::vector<unsigned>(N)};
  const unsigned m = N / n;
  for (unsigned q = 0; q < m; ++q)
    for (unsigned l = 0; l < n; ++l) p.sigma[n * q + l] = l * m + q;
  return p;
}

std::string strategy_name(InterleaveStrategy s) {
  switch (s) {
    case InterleaveStrategy::LocalFswap: return "local-fswap";
    case InterleaveStrategy::CxLadder: return "cx-ladder";
    case InterleaveStrategy::GraphDecimated: return "graph-decimated";
    case InterleaveStrategy::ImportedSequence: return "imported";
  }
  return "?";
}

InterleaveStrategy parse_strategy(const std::string& s) {
  for (InterleaveStrategy k : all_strategies())
    if (strategy_name(k) == s) return k;
  throw std::invalid_argument(
      "unknown interleave strategy '" + s +
      "' (expected local-fswap, cx-ladder, graph-decimated or imported)");
}

std::vector<InterleaveStrategy> all_strategies() {
  return {InterleaveStrategy::LocalFswap, InterleaveStrategy::CxLadder,
          InterleaveStrategy::GraphDecimated,
          InterleaveStrategy::ImportedSequence};
}

CZGraph interleave_cz_graph(const InterleavePermutation& p) {
  CZGraph g(p.N);
  for (unsigned a = 0; a < p.N; ++a)
    for (unsigned b = a + 1; b < p.N; ++b)
      if (p.sigma[a] > p.sigma[b]) g.add_edge(p.sigma[a], p.sigma[b]);
  return g;
}

Circuit cx_ladder_interleave(unsigned N, unsigned n) {
  interleave_permutation(N, n);  // validates
  const unsigned m = N / n;
  Circuit c(N);
  if (n < 2 || m < 2) return c;
  auto pos = [n](unsigned q, unsigned l) { return n * q + l; };
  // The phase is sum over classes l' and q' >= 1 of x(q', l') Q_l'(q' - 1),
  // with Q_l'(s) the parity of every x(q, l), l > l', q <= s. Classes are
  // folded from the top: once class l' + 1 is processed, qubit (q, l' + 1)
  // carries Q_l'(q).
  std::vector<Gate> cxs;
  for (int lp = static_cast<int>(n) - 2; lp >= 0; --lp) {
    const unsigned l = static_cast<unsigned>(lp) + 1;
    const std::size_t emitted = cxs.size();
    for (unsigned q = 1; q + 1 < m; ++q)
      cxs.push_back(Gate::cx(pos(q - 1, l), pos(q, l)));
    if (l + 1 < n)
      for (unsigned q = 0; q + 1 < m; ++q)
        cxs.push_back(Gate::cx(pos(q, l + 1), pos(q, l)));
    for (std::size_t k = emitted; k < cxs.size(); ++k) c.add(cxs[k]);
    for (unsigned q = 1; q < m; ++q)
      c.add(Gate::cz(pos(q, static_cast<unsigned>(lp)), pos(q - 1, l)));
  }
  for (auto it = cxs.rbegin(); it != cxs.rend(); ++it) c.add(*it);
  return c;
}

Circuit imported_interleave_listing(unsigned N) {
  if (N != 9 && N != 27)
    throw std::invalid_argument("no shipped interleave listing for N=" +
                                std::to_string(N) + " (have 9 and 27)");
  static std::mutex mu;
  static std::map<unsigned, Circuit> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it == cache.end()) {
    Circuit c = read_circuit_file(
        data_file("interleave_3way_" + std::to_string(N) + ".txt"));
    if (c.num_qubits() != N)
      throw CircuitError("interleave listing has the wrong register size");
    it = cache.emplace(N, std::move(c)).first;
  }
  return it->second;
}

Circuit interleave_circuit(const InterleavePermutation& p,
                           InterleaveStrategy strategy, double depth_penalty) {
  const unsigned N = p.N;
  Circuit out(N);
  if (strategy == InterleaveStrategy::LocalFswap) {
    // odd-even transposition sort on the destination positions
    std::vector<unsigned> dest = p.sigma;
    for (unsigned round = 0; !std::is_sorted(dest.begin(), dest.end());
         ++round) {
      for (unsigned a = round % 2; a + 1 < N; a += 2) {
        if (dest[a] > dest[a + 1]) {
          std::swap(dest[a], dest[a + 1]);
          out.add(Gate::fswap(a, a + 1));
        }
      }
    }
    return out;
  }

  // software reordering: modes stay on their qubits
  const std::vector<unsigned> order = p.order();
  Circuit phase(N);
  switch (strategy) {
    case InterleaveStrategy::CxLadder:
      phase = cx_ladder_interleave(N, p.n);
      break;
    case InterleaveStrategy::GraphDecimated:
      // graph lives on destination labels, qubits are source positions
      phase = relabel(decimate(interleave_cz_graph(p), depth_penalty), order);
      break;
    case InterleaveStrategy::ImportedSequence:
      if (p.N == 27 && p.n == 3)
        phase = relabel(imported_interleave_listing(27), order);
      else if (is_inverse_of_3way(p))
        // the inverse reordering inverts the same mode pairs, so the listing
        // already speaks in its source labels
        phase = imported_interleave_listing(p.N);
      else
        throw std::invalid_argument(
            "imported interleave exists only for N=9 (n=3) and N=27 "
            "(n=3 or its inverse n=9), asked N=" +
            std::to_string(p.N) + " n=" + std::to_string(p.n));
      break;
    default:
      break;
  }
  out.append(phase);
  out.set_output_layout(order);
  return out;
}

Circuit materialize_layout(const Circuit& c) {
  Circuit out = c;
  std::vector<unsigned> cur = c.output_layout();
  const std::vector<unsigned>& want = c.input_layout();
  std::vector<unsigned> where(c.num_qubits());  // qubit -> position
  for (unsigned p = 0; p < cur.size(); ++p) where[cur[p]] = p;
  for (unsigned p = 0; p < cur.size(); ++p) {
    if (cur[p] == want[p]) continue;
    unsigned other = where[want[p]];
    out.add(Gate::swap(cur[p], cur[other]));
    std::swap(cur[p], cur[other]);
    where[cur[p]] = p;
    where[cur[other]] = other;
  }
  out.set_output_layout(want);
  return out;
}

}  // namespace fermispec
