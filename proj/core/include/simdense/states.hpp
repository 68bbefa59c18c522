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

#include <array>
#include <string>
#include <string_view>

#include "simdense/gates.hpp"
#include "simdense/qlinalg.hpp"

namespace simdense {

/// Entanglement channel shared between the sender and each receiver.
enum class Channel { kBell, kGhz, kW };

std::string to_string(Channel channel);
/// Accepts "bell", "ghz", "w".
Channel parse_channel(std::string_view name);

/// Qubits per channel copy: 2 for Bell pairs, 3 for GHZ and W states.
int qubits_per_copy(Channel channel);

/// |phi(xy)> = (|0x> + (-1)^y |1 x'>) / sqrt(2).
StateVector phi(EncodedBits bits, Labels labels = {"q0", "q1"});
/// |GHZ(xy)> = (|0xx> + (-1)^y |1 x'x'>) / sqrt(2).
StateVector ghz(EncodedBits bits, Labels labels = {"q0", "q1", "q2"});
/// |W(xy)> = (|x10> + |x01> + (-1)^y sqrt(2) |x'00>) / 2.
StateVector w(EncodedBits bits, Labels labels = {"q0", "q1", "q2"});

/// Four orthonormal states indexed by (x, y), spanning a 4-dimensional
/// subspace of a 4- or 8-dimensional ambient space.
struct BasisFamily {
  Channel channel;
  std::array<StateVector, 4> members;  // index 2x + y

  int ambient_qubits() const { return members[0].n_qubits(); }
  std::size_t ambient_dim() const { return members[0].dim(); }
  static constexpr int subspace_dim = 4;

  const StateVector& member(EncodedBits bits) const { return members[static_cast<std::size_t>(bits.index())]; }
  /// Projector onto the span of the members.
  CMatrix span_projector() const;
};

BasisFamily basis_family(Channel channel);

/// Family member for `channel`, e.g. phi / ghz / w.
StateVector family_member(Channel channel, EncodedBits bits, Labels labels);

/// Labels of the receiver copies: {A1,B}/{A2,C} for Bell pairs and
/// {A1,B1,B2}/{A2,C1,C2} for GHZ and W.
Labels bob_labels(Channel channel);
Labels charlie_labels(Channel channel);

/// Two channel copies in (00) form: Bob's copy followed by Charlie's copy.
StateVector initial_state(Channel channel);

}  // namespace simdense
