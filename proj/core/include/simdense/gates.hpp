// Copyright 2026 The simdense Authors
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

#include <string>
#include <string_view>
#include <vector>

#include "simdense/qlinalg.hpp"

namespace simdense {

/// Two classical bits carried by one Pauli encoding.
struct EncodedBits {
  bool x = false;
  bool y = false;

  /// 2x + y, the position of the matching family member.
  int index() const { return (x ? 2 : 0) + (y ? 1 : 0); }
  static EncodedBits from_index(int index) { return {(index & 2) != 0, (index & 1) != 0}; }
  /// "xy" as two characters.
  std::string str() const { return std::string{x ? '1' : '0', y ? '1' : '0'}; }

  friend bool operator==(const EncodedBits&, const EncodedBits&) = default;
};

/// All four bit pairs in index order 00, 01, 10, 11.
std::vector<EncodedBits> all_bit_pairs();

Unitary identity(int n_qubits);
Unitary pauli_x();
Unitary pauli_z();
Unitary hadamard();
/// Control is the first qubit.
Unitary cnot();

/// I, Z, X, ZX for 00, 01, 10, 11.
Unitary pauli_encoder(EncodedBits bits);

/// Entry (k, j) = omega^{jk} / sqrt(2^n) with omega = exp(2 pi i / 2^n).
/// Phases that are multiples of pi/2 are stored exactly.
Unitary qft(int n_qubits);

/// (H tensor I) * CNOT on two qubits, the first qubit being the control.
Unitary lock_operator();

Unitary adjoint(const Unitary& u);
/// Entrywise complex conjugate.
Unitary conjugate(const Unitary& u);

/// Looks up a gate by name: id<n>, x, z, h, cnot, ulock, qft<n>, qftdg<n>,
/// u00, u01, u10, u11. Throws InvariantError on an unknown name.
Unitary gate_by_name(std::string_view name);

/// Names accepted by gate_by_name, with <n> written literally.
std::vector<std::string> gate_names();

}  // namespace simdense
