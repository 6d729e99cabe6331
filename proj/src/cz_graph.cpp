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

#include "fermispec/cz_graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

#include "fermispec/tableau.hpp"

namespace fermispec {

namespace {

using u64 = std::uint64_t;
using Bits = std::vector<u64>;

inline bool test(const Bits& b, unsigned q) { return b[q / 64] >> (q % 64) & 1; }
inline void flip(Bits& b, unsigned q) { b[q / 64] ^= u64{1} << (q % 64); }

// (i,k) toggles of a CX-type step, as a bitset over k
Bits toggle_set(const CZGraph& g, const DecimationStep& s) {
  Bits set = g.neighbourhood(s.j);
  if (s.rule == DecimationRule::CxCyWrap) flip(set, s.j);
  if (test(set, s.i)) flip(set, s.i);
  return set;
}

void apply_toggles(CZGraph& g, unsigned i, const Bits& set) {
  for (std::size_t w = 0; w < set.size(); ++w) {
    u64 word = set[w];
    while (word) {
      unsigned k = static_cast<unsigned>(w * 64 + std::countr_zero(word));
      g.toggle_edge(i, k);
      word &= word - 1;
    }
  }
}

void check_step(const CZGraph& g, const DecimationStep& s) {
  if (s.i == s.j || s.i >= g.num_qubits() || s.j >= g.num_qubits())
    throw std::invalid_argument("decimation step needs two distinct qubits "
                                "inside the register");
}

}  // namespace

CZGraph::CZGraph(unsigned num_qubits)
    : n_(num_qubits), adj_(num_qubits, Bits((num_qubits + 63) / 64, 0)) {}

CZGraph::CZGraph(unsigned num_qubits,
                 const std::vector<std::pair<unsigned, unsigned>>& edges)
    : CZGraph(num_qubits) {
  for (auto [a, b] : edges) add_edge(a, b);
}

void CZGraph::check(unsigned i, unsigned j) const {
  if (i >= n_ || j >= n_)
    throw std::invalid_argument("edge (" + std::to_string(i) + "," +
                                std::to_string(j) + ") outside a " +
                                std::to_string(n_) + "-qubit graph");
  if (i == j)
    throw std::invalid_argument("self-loop at " + std::to_string(i));
}

bool CZGraph::has_edge(unsigned i, unsigned j) const {
  check(i, j);
  return test(adj_[i], j);
}

void CZGraph::add_edge(unsigned i, unsigned j) {
  if (!has_edge(i, j)) toggle_edge(i, j);
}

void CZGraph::toggle_edge(unsigned i, unsigned j) {
  check(i, j);
  flip(adj_[i], j);
  flip(adj_[j], i);
}

std::size_t CZGraph::degree(unsigned i) const {
  std::size_t d = 0;
  for (u64 w : adj_[i]) d += std::popcount(w);
  return d;
}

std::size_t CZGraph::num_edges() const {
  std::size_t s = 0;
  for (unsigned i = 0; i < n_; ++i) s += degree(i);
  return s / 2;
}

std::vector<std::pair<unsigned, unsigned>> CZGraph::edges() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = i + 1; j < n_; ++j)
      if (test(adj_[i], j)) out.emplace_back(i, j);
  return out;
}

Circuit CZGraph::circuit() const {
  Circuit c(n_);
  for (auto [a, b] : edges()) c.add(Gate::cz(a, b));
  return c;
}

CZGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<unsigned, unsigned>> edges;
  long declared = -1;
  unsigned max_index = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream d(line.substr(hash + 1));
      std::string key;
      long v;
      if (d >> key && key == "qubits" && d >> v) declared = v;
      line = line.substr(0, hash);
    }
    std::istringstream ls(line);
    long a, b;
    if (!(ls >> a)) continue;
    std::string extra;
    if (!(ls >> b) || (ls >> extra) || a < 0 || b < 0)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected two nonnegative indices");
    edges.emplace_back(static_cast<unsigned>(a), static_cast<unsigned>(b));
    max_index = std::max({max_index, static_cast<unsigned>(a),
                          static_cast<unsigned>(b)});
  }
  unsigned n = declared >= 0 ? static_cast<unsigned>(declared)
                             : (edges.empty() ? 0 : max_index + 1);
  CZGraph g(n);
  for (auto [a, b] : edges) {
    if (g.has_edge(a, b))
      throw std::invalid_argument("edge list repeats edge (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  ")");
    g.add_edge(a, b);
  }
  return g;
}

CZGraph read_edge_list_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open edge list " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_edge_list(ss.str());
}

std::string write_edge_list(const CZGraph& g) {
  std::ostringstream os;
  os << "# qubits " << g.num_qubits() << "\n";
  for (auto [a, b] : g.edges()) os << a << " " << b << "\n";
  return os.str();
}

std::string rule_name(DecimationRule r) {
  switch (r) {
    case DecimationRule::CzRemoval: return "CzRemoval";
    case DecimationRule::CxConjugation: return "CxConjugation";
    case DecimationRule::CxCyWrap: return "CxCyWrap";
  }
  return "?";
}

CZGraph apply_rule(const CZGraph& g, const DecimationStep& step) {
  check_step(g, step);
  CZGraph out = g;
  if (step.rule == DecimationRule::CzRemoval) {
    out.toggle_edge(step.i, step.j);
    return out;
  }
  apply_toggles(out, step.i, toggle_set(g, step));
  return out;
}

void DiagonalClifford::apply(const DecimationStep& step) {
  check_step(graph, step);
  const unsigned i = step.i, j = step.j;
  if (step.rule == DecimationRule::CzRemoval) {
    graph.toggle_edge(i, j);
    return;
  }
  // substitution x_j -> x_j + x_i, then for CxCyWrap a CZ(i,j)
  const bool ij_edge = graph.has_edge(i, j);
  const unsigned pj = s_power[j];
  CZGraph next = graph;
  Bits set = graph.neighbourhood(j);
  if (test(set, i)) flip(set, i);
  apply_toggles(next, i, set);
  if (ij_edge) s_power[i] = (s_power[i] + 2) % 4;
  s_power[i] = (s_power[i] + pj) % 4;
  if (pj % 2) next.toggle_edge(i, j);
  if (step.rule == DecimationRule::CxCyWrap) next.toggle_edge(i, j);
  graph = std::move(next);
}

Circuit DiagonalClifford::phase_circuit() const {
  Circuit c(graph.num_qubits());
  for (unsigned q = 0; q < s_power.size(); ++q) {
    switch (s_power[q] % 4) {
      case 1: c.add(Gate::s(q)); break;
      case 2: c.add(Gate::z(q)); break;
      case 3: c.add(Gate::sdg(q)); break;
      default: break;
    }
  }
  return c;
}

DecimationResult decimate_with_steps(const CZGraph& g, double depth_penalty) {
  const unsigned n = g.num_qubits();
  DiagonalClifford state(g);
  std::vector<DecimationStep> steps;
  Bits layer((n + 63) / 64, 0);

  using Key = std::tuple<double, int, unsigned, unsigned>;
  const Key none{std::numeric_limits<double>::infinity(), 0, 0, 0};

  while (state.graph.num_edges() > 0) {
    const CZGraph& cur = state.graph;
    auto opens_layer = [&](unsigned i, unsigned j) {
      return test(layer, i) || test(layer, j);
    };
    Key best = none;
#pragma omp parallel
    {
      Key local = none;
#pragma omp for schedule(static) nowait
      for (int ii = 0; ii < static_cast<int>(n); ++ii) {
        const unsigned i = static_cast<unsigned>(ii);
        const Bits& ni = cur.neighbourhood(i);
        for (unsigned j = 0; j < n; ++j) {
          if (i == j) continue;
          const double pen = opens_layer(i, j) ? depth_penalty : 0.0;
          if (i < j && test(ni, j)) {
            // removes one edge for one gate
            Key k{0.0 + pen, 0, i, j};
            local = std::min(local, k);
          }
          for (int r = 1; r <= 2; ++r) {
            DecimationStep s{static_cast<DecimationRule>(r), i, j};
            Bits set = toggle_set(cur, s);
            long size = 0, common = 0;
            for (std::size_t w = 0; w < set.size(); ++w) {
              size += std::popcount(set[w]);
              common += std::popcount(set[w] & ni[w]);
            }
            const long delta = size - 2 * common;
            if (delta + s.cost() > 0) continue;
            Key k{static_cast<double>(delta + s.cost()) + pen, r, i, j};
            local = std::min(local, k);
          }
        }
      }
#pragma omp critical
      best = std::min(best, local);
    }
    DecimationStep step{static_cast<DecimationRule>(std::get<1>(best)),
                        std::get<2>(best), std::get<3>(best)};
    if (opens_layer(step.i, step.j)) std::fill(layer.begin(), layer.end(), 0);
    flip(layer, step.i);
    if (!test(layer, step.j)) flip(layer, step.j);
    state.apply(step);
    steps.push_back(step);
  }

  // U_G = L_1 ... L_m D R_m ... R_1, so the circuit runs R_1 .. R_m, D,
  // L_m .. L_1.
  Circuit c(n);
  for (const DecimationStep& s : steps) {
    if (s.rule == DecimationRule::CxConjugation) c.add(Gate::cx(s.i, s.j));
    if (s.rule == DecimationRule::CxCyWrap) c.add(Gate::cy(s.i, s.j));
  }
  c.append(state.phase_circuit());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->rule == DecimationRule::CzRemoval)
      c.add(Gate::cz(it->i, it->j));
    else
      c.add(Gate::cx(it->i, it->j));
  }
  return {c, steps};
}

Circuit decimate(const CZGraph& g, double depth_penalty) {
  return decimate_with_steps(g, depth_penalty).circuit;
}

bool verify_equivalence(const Circuit& c, const CZGraph& g) {
  for (const Gate& gate : c.gates())
    if (!is_clifford_gate(gate))
      throw CircuitError("verify_equivalence: non-Clifford gate " +
                         gate.str());
  if (c.num_qubits() > g.num_qubits()) return false;
  Circuit padded(g.num_qubits());
  padded.append(c, identity_layout(c.num_qubits()));
  return tableau_of(padded) == tableau_of(g.circuit());
}

}  // namespace fermispec
