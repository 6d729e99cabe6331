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

#include "fermispec/circuit_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

namespace fermispec {

namespace {

struct ParsedGate {
  GateKind kind;
  std::vector<unsigned> qubits;
  double angle = 0.0;
};

const std::map<std::string, GateKind>& kinds_by_name() {
  static const std::map<std::string, GateKind> m = {
      {"CZ", GateKind::CZ},     {"CX", GateKind::CX},
      {"CY", GateKind::CY},     {"SWAP", GateKind::SWAP},
      {"FSWAP", GateKind::FSWAP}, {"X", GateKind::X},
      {"Z", GateKind::Z},       {"S", GateKind::S},
      {"Sdg", GateKind::Sdg},   {"Rz", GateKind::Rz},
      {"Givens", GateKind::Givens}};
  return m;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

unsigned parse_index(const std::string& s, std::size_t line) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || s[0] == '-')
    throw CircuitError("line " + std::to_string(line) +
                       ": bad qubit index '" + s + "'");
  return static_cast<unsigned>(v);
}

double parse_angle(const std::string& s, std::size_t line) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size())
    throw CircuitError("line " + std::to_string(line) + ": bad angle '" + s +
                       "'");
  return v;
}

std::vector<unsigned> parse_list(std::istringstream& is, std::size_t line) {
  std::vector<unsigned> out;
  std::string tok;
  while (is >> tok) out.push_back(parse_index(tok, line));
  return out;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  static const std::regex token(R"(([A-Za-z]+)\(([^()]*)\))");
  std::optional<unsigned> declared;
  std::vector<unsigned> in_layout, out_layout;
  // std::nullopt marks a barrier.
  std::vector<std::optional<ParsedGate>> items;
  unsigned max_index = 0;
  bool any_index = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty()) {
      if (!items.empty() && items.back().has_value())
        items.push_back(std::nullopt);
      continue;
    }
    if (line[0] == '#') {
      std::istringstream is(line.substr(1));
      std::string key;
      is >> key;
      if (key == "qubits") {
        auto v = parse_list(is, line_no);
        if (v.size() != 1)
          throw CircuitError("line " + std::to_string(line_no) +
                             ": qubits directive takes one value");
        declared = v[0];
      } else if (key == "input_layout") {
        in_layout = parse_list(is, line_no);
      } else if (key == "output_layout") {
        out_layout = parse_list(is, line_no);
      }
      continue;
    }
    std::smatch m;
    auto begin = line.cbegin();
    while (std::regex_search(begin, line.cend(), m, token)) {
      std::string gap = trim(std::string_view(line).substr(
          begin - line.cbegin(), m.position(0)));
      if (!gap.empty())
        throw CircuitError("line " + std::to_string(line_no) +
                           ": unexpected text '" + gap + "'");
      auto it = kinds_by_name().find(m[1].str());
      if (it == kinds_by_name().end())
        throw CircuitError("line " + std::to_string(line_no) +
                           ": unknown gate '" + m[1].str() + "'");
      ParsedGate pg;
      pg.kind = it->second;
      auto args = split_args(m[2].str());
      unsigned ar = kind_arity(pg.kind);
      std::size_t want = ar + (kind_has_angle(pg.kind) ? 1 : 0);
      if (args.size() != want)
        throw CircuitError("line " + std::to_string(line_no) + ": gate " +
                           m[1].str() + " expects " + std::to_string(want) +
                           " arguments");
      for (unsigned i = 0; i < ar; ++i) {
        pg.qubits.push_back(parse_index(args[i], line_no));
        max_index = std::max(max_index, pg.qubits.back());
        any_index = true;
      }
      if (kind_has_angle(pg.kind)) pg.angle = parse_angle(args[ar], line_no);
      items.push_back(pg);
      begin += m.position(0) + m.length(0);
    }
    std::string tail =
        trim(std::string_view(line).substr(begin - line.cbegin()));
    if (!tail.empty())
      throw CircuitError("line " + std::to_string(line_no) +
                         ": unexpected text '" + tail + "'");
  }
  while (!items.empty() && !items.back().has_value()) items.pop_back();

  unsigned n = declared ? *declared : (any_index ? max_index + 1 : 0);
  Circuit c(n);
  for (const auto& item : items) {
    if (!item) {
      c.add_barrier();
      continue;
    }
    Gate g;
    g.kind = item->kind;
    g.qubits = {item->qubits[0],
                item->qubits.size() > 1 ? item->qubits[1] : item->qubits[0]};
    g.angle = item->angle;
    c.add(g);
  }
  if (!in_layout.empty()) c.set_input_layout(in_layout);
  if (!out_layout.empty()) c.set_output_layout(out_layout);
  return c;
}

Circuit read_circuit_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw CircuitError("cannot open circuit file " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_circuit(ss.str());
}

std::string write_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "# qubits " << c.num_qubits() << "\n";
  if (!c.has_trivial_layouts()) {
    os << "# input_layout";
    for (unsigned q : c.input_layout()) os << " " << q;
    os << "\n# output_layout";
    for (unsigned q : c.output_layout()) os << " " << q;
    os << "\n";
  }
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::Barrier)
      os << "\n";
    else
      os << g.str() << "\n";
  }
  return os.str();
}

void write_circuit_file(const std::filesystem::path& path, const Circuit& c) {
  std::ofstream f(path);
  if (!f) throw CircuitError("cannot write circuit file " + path.string());
  f << write_circuit(c);
}

std::filesystem::path data_file(const std::string& name) {
  if (const char* dir = std::getenv("FERMISPEC_DATA_DIR"))
    return std::filesystem::path(dir) / name;
#ifdef FERMISPEC_DATA_DIR
  return std::filesystem::path(FERMISPEC_DATA_DIR) / name;
#else
  return std::filesystem::path("data") / name;
#endif
}

}  // namespace fermispec
