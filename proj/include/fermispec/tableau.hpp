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

#include <cstdint>
#include <string>
#include <vector>

#include "fermispec/circuit.hpp"

namespace fermispec {

/** i^r X^x Z^z with bit-packed x and z. */
struct PauliString {
  unsigned n = 0;
  std::vector<std::uint64_t> x, z;
  unsigned r = 0;  // mod 4

  PauliString() = default;
  explicit PauliString(unsigned num_qubits);

  bool get_x(unsigned q) const { return x[q / 64] >> (q % 64) & 1; }
  bool get_z(unsigned q) const { return z[q / 64] >> (q % 64) & 1; }
  void set_x(unsigned q, bool v);
  void set_z(unsigned q, bool v);

  /** this <- this * other */
  void mul_right(const PauliString& other);
  std::string str() const;
};

bool operator==(const PauliString& a, const PauliString& b);

/**
 * Clifford unitary U stored as the conjugated generators U X_q U^dag
 * (rows 0..n-1) and U Z_q U^dag (rows n..2n-1). Signs are kept, so two
 * tableaux agree exactly when the unitaries agree up to global phase.
 */
class StabilizerTableau {
 public:
  explicit StabilizerTableau(unsigned num_qubits = 0);

  unsigned num_qubits() const { return n_; }
  const PauliString& x_image(unsigned q) const { return rows_[q]; }
  const PauliString& z_image(unsigned q) const { return rows_[n_ + q]; }

  /** U <- G U. Throws for non-Clifford gates. */
  void apply(const Gate& g);
  void apply(const Circuit& c);

  /** Symplectic form check over all row pairs. */
  bool is_symplectic() const;

  friend bool operator==(const StabilizerTableau& a,
                         const StabilizerTableau& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  unsigned n_;
  std::vector<PauliString> rows_;
};

bool is_clifford_gate(const Gate& g);

/** Tableau of the gate list; layouts are ignored. */
StabilizerTableau tableau_of(const Circuit& c);

}  // namespace fermispec
