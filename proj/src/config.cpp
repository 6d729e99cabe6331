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

#include "fermispec/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace fermispec {

namespace {

namespace pt = boost::property_tree;

using KeySet = std::map<std::string, std::set<std::string>>;

const KeySet& protocol_keys() {
  static const KeySet keys = {
      {"protocol",
       {"N", "epsilon", "omega", "t", "nu", "V", "trotter_steps", "environment",
        "initial_state", "rho", "particles", "interleave", "shots", "seed",
        "quadrature_points"}},
      {"grid", {"omega_min", "omega_max", "omega_count", "omegas"}}};
  return keys;
}

pt::ptree read_tree(const std::string& text) {
  std::istringstream in(text);
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("config line " + std::to_string(e.line()) + ": " +
                      e.message());
  }
  return tree;
}

void check_keys(const pt::ptree& tree, const KeySet& allowed) {
  for (const auto& [section, body] : tree) {
    auto it = allowed.find(section);
    if (it == allowed.end()) {
      if (body.empty())
        throw ConfigError(section + ": keys must sit inside a section");
      throw ConfigError(section + ": unknown section");
    }
    for (const auto& [key, value] : body)
      if (!it->second.count(key))
        throw ConfigError(section + "." + key + ": unknown key");
  }
}

std::string trimmed(const pt::ptree& v) { return boost::trim_copy(v.data()); }

double to_double(const std::string& key, const std::string& s) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError(key + ": expected a number, got '" + s + "'");
}

long long to_integer(const std::string& key, const std::string& s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ConfigError(key + ": expected an integer, got '" + s + "'");
  return v;
}

unsigned long long to_unsigned(const std::string& key, const std::string& s) {
  long long v = to_integer(key, s);
  if (v < 0) throw ConfigError(key + ": must not be negative");
  return static_cast<unsigned long long>(v);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  boost::split(parts, s, boost::is_any_of(","));
  for (auto& p : parts) boost::trim(p);
  parts.erase(std::remove(parts.begin(), parts.end(), ""), parts.end());
  return parts;
}

std::vector<double> to_doubles(const std::string& key, const std::string& s) {
  std::vector<double> out;
  for (const auto& p : split_list(s)) out.push_back(to_double(key, p));
  return out;
}

void read_protocol(const pt::ptree& tree, ProtocolConfig& c) {
  auto sec = tree.get_child_optional("protocol");
  if (!sec) return;
  for (const auto& [key, node] : *sec) {
    const std::string name = "protocol." + key;
    const std::string v = trimmed(node);
    if (key == "N") c.N = static_cast<unsigned>(to_unsigned(name, v));
    else if (key == "epsilon") c.epsilon = to_double(name, v);
    else if (key == "omega") c.omega = to_double(name, v);
    else if (key == "t") c.t = to_double(name, v);
    else if (key == "nu") c.nu = to_double(name, v);
    else if (key == "V") c.V = to_double(name, v);
    else if (key == "trotter_steps")
      c.trotter_steps = static_cast<unsigned>(to_unsigned(name, v));
    else if (key == "environment") {
      if (v == "empty") c.fill = EnvironmentFill::Empty;
      else if (v == "full") c.fill = EnvironmentFill::Full;
      else throw ConfigError(name + ": expected empty or full, got '" + v + "'");
    } else if (key == "initial_state") {
      if (v == "ground") c.initial = InitialState::GroundState;
      else if (v == "occupations") c.initial = InitialState::Occupations;
      else
        throw ConfigError(name + ": expected ground or occupations, got '" +
                          v + "'");
    } else if (key == "rho") c.rho = to_doubles(name, v);
    else if (key == "particles")
      c.particles = static_cast<int>(to_integer(name, v));
    else if (key == "interleave") {
      try {
        c.interleave = parse_strategy(v);
      } catch (const std::exception& e) {
        throw ConfigError(name + ": " + e.what());
      }
    } else if (key == "shots") c.shots = to_unsigned(name, v);
    else if (key == "seed") c.seed = to_unsigned(name, v);
    else if (key == "quadrature_points")
      c.quadrature_points = static_cast<unsigned>(to_unsigned(name, v));
  }
  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("protocol.") + e.what());
  }
}

std::vector<double> read_grid(const pt::ptree& tree, double nu) {
  auto sec = tree.get_child_optional("grid");
  if (!sec) return default_omega_grid(nu);
  if (auto list = sec->get_optional<std::string>("omegas")) {
    if (sec->size() != 1)
      throw ConfigError("grid.omegas: cannot be combined with omega_min/max/count");
    auto w = to_doubles("grid.omegas", *list);
    if (w.empty()) throw ConfigError("grid.omegas: empty list");
    return w;
  }
  const double span = 3.0 * std::max(std::abs(nu), 1.0);
  double lo = -span, hi = span;
  unsigned count = 26;
  for (const auto& [key, node] : *sec) {
    const std::string name = "grid." + key;
    if (key == "omega_min") lo = to_double(name, trimmed(node));
    else if (key == "omega_max") hi = to_double(name, trimmed(node));
    else if (key == "omega_count")
      count = static_cast<unsigned>(to_unsigned(name, trimmed(node)));
  }
  if (count == 0) throw ConfigError("grid.omega_count: must be positive");
  if (!(hi >= lo)) throw ConfigError("grid.omega_max: must not be below omega_min");
  return linspace(lo, hi, count);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

const std::vector<std::string>& simulate_methods() {
  static const std::vector<std::string> m = {
      "exact", "gaussian", "many-body", "circuit", "strong-coupling",
      "kernel", "correlation"};
  return m;
}

SimulateConfig parse_simulate_config(const std::string& text) {
  pt::ptree tree = read_tree(text);
  KeySet keys = protocol_keys();
  keys["output"] = {"methods"};
  check_keys(tree, keys);
  SimulateConfig c;
  read_protocol(tree, c.protocol);
  c.omegas = read_grid(tree, c.protocol.nu);
  if (auto m = tree.get_optional<std::string>("output.methods")) {
    c.methods = split_list(*m);
    if (c.methods.empty()) throw ConfigError("output.methods: empty list");
    for (const auto& name : c.methods)
      if (std::find(simulate_methods().begin(), simulate_methods().end(),
                    name) == simulate_methods().end())
        throw ConfigError("output.methods: unknown method '" + name + "'");
  }
  return c;
}

SimulateConfig load_simulate_config(const std::filesystem::path& path) {
  return parse_simulate_config(slurp(path));
}

TrotterCompareConfig parse_compare_config(const std::string& text) {
  pt::ptree tree = read_tree(text);
  KeySet keys = protocol_keys();
  keys["compare"] = {"epsilons", "steps", "continuous"};
  check_keys(tree, keys);
  TrotterCompareConfig c;
  read_protocol(tree, c.base);
  c.omegas = read_grid(tree, c.base.nu);
  if (auto sec = tree.get_child_optional("compare")) {
    for (const auto& [key, node] : *sec) {
      const std::string name = "compare." + key;
      const std::string v = trimmed(node);
      if (key == "epsilons") {
        c.epsilons = to_doubles(name, v);
        if (c.epsilons.empty()) throw ConfigError(name + ": empty list");
      } else if (key == "steps") {
        c.steps.clear();
        for (const auto& p : split_list(v)) {
          auto s = to_unsigned(name, p);
          if (s == 0) throw ConfigError(name + ": step counts must be positive");
          c.steps.push_back(static_cast<unsigned>(s));
        }
      } else if (key == "continuous") {
        if (v == "true" || v == "1") c.continuous = true;
        else if (v == "false" || v == "0") c.continuous = false;
        else throw ConfigError(name + ": expected true or false, got '" + v + "'");
      }
    }
  }
  return c;
}

TrotterCompareConfig load_compare_config(const std::filesystem::path& path) {
  return parse_compare_config(slurp(path));
}

}  // namespace fermispec
