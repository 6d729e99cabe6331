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

#include <filesystem>
#include <string>
#include <string_view>

#include "fermispec/circuit.hpp"

namespace fermispec {

/**
 * Line-oriented circuit text format.
 *
 *   # qubits 9
 *   # input_layout 0 3 6 1 4 7 2 5 8
 *   CX(6,3)CZ(7,2)
 *
 *   Rz(4,0.785398)
 *
 * Several gate tokens may share a line. A blank line is a barrier. Angles
 * follow the qubit indices. Lines starting with '#' are comments except the
 * qubits and layout directives. Without a qubits directive the register is
 * sized by the largest index seen.
 */
Circuit parse_circuit(std::string_view text);
Circuit read_circuit_file(const std::filesystem::path& path);

/** One gate per line; barriers become blank lines. */
std::string write_circuit(const Circuit& c);
void write_circuit_file(const std::filesystem::path& path, const Circuit& c);

/**
 * Location of a shipped data file. FERMISPEC_DATA_DIR in the environment
 * overrides the directory fixed at build time.
 */
std::filesystem::path data_file(const std::string& name);

}  // namespace fermispec
