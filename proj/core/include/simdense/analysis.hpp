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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simdense/protocols.hpp"

namespace simdense {

/// Evidence that a receiver can learn something about one input.
struct BitEvidence {
  std::string bit;          // b1, b2, c1, c2, or "payload"
  double overlap = 0.0;     // tr(rho(0) rho(1)) of the conditional views
  double trace_distance = 0.0;
};

struct SubsystemReport {
  std::string holder;
  Labels subsystem;
  /// max_pairwise_diff < kClosedFormTol.
  bool independent_of_encoding = false;
  double max_pairwise_diff = 0.0;
  /// Unset when there is no closed form to compare with.
  std::optional<bool> matches_closed_form;
  std::optional<double> closed_form_diff;
  bool maximally_mixed = false;
  /// Bits identified with certainty (orthogonal conditional supports).
  std::vector<BitEvidence> recoverable_bits;
  /// Bits whose conditional views differ but overlap.
  std::vector<BitEvidence> leaky_bits;
};

struct LockingReport {
  std::string protocol;  // bell, ghz, w
  std::string task;      // dense_coding, teleportation
  std::string lock_used;
  std::vector<SubsystemReport> per_subsystem;
  /// Every encoding (payload) is recovered exactly after the unlock.
  bool decode_correct = false;
  /// Views are encoding independent and decoding is correct.
  bool valid_lock = false;
  /// Every assertion the verifier makes holds.
  bool passed = false;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::string> notes;

  const SubsystemReport& subsystem(std::string_view holder) const;
  std::optional<double> metric(std::string_view name) const;
};

enum class LockTask { kDenseCoding, kTeleportation };

std::string to_string(LockTask task);
/// Accepts "dense_coding" and "teleportation".
LockTask parse_task(std::string_view name);

/// Receiver view after the QFT lock, in closed form: I/4 for Bell pairs,
/// (|000><000| + |011><011| + |100><100| + |111><111|) / 4 for GHZ, and the
/// ten-term matrix for W. Same for both receivers.
DensityMatrix closed_form_receiver_view(Channel channel);

/// Bob's view on (A1, B) under U(LOCK) for b1 = 0 or 1.
DensityMatrix closed_form_ulock_view(bool b1);

/// All 16 encodings under the QFT lock: encoding independence of both
/// receiver views, agreement with closed_form_receiver_view and decoding.
LockingReport verify_theorem(Channel channel);

/// Bell channel under U(LOCK): Bob's view depends only on b1, matches the
/// two closed forms, the two views have orthogonal supports and a support
/// measurement recovers b1; Charlie's view is analyzed the same way.
LockingReport verify_counterexample();

/// Number of samples per preparation used by verify_counterexample.
inline constexpr int kCounterexampleSamples = 64;

/// Substitutes `u` as the lock. Dense coding sweeps the 16 encodings;
/// teleportation sweeps all pairs of the six single-qubit stabilizer states
/// and inspects each receiver's view after the classical messages, given
/// its own Bell outcome. Teleportation requires the Bell channel.
LockingReport classify_locking_unitary(const Unitary& u, LockTask task, Channel channel);

/// The six single-qubit stabilizer states |0>, |1>, |+>, |->, |+i>, |-i>.
std::vector<StateVector> stabilizer_probes();

/// Every (bob_bits, charlie_bits) pair in the order b1 b2 c1 c2 = 0000..1111.
std::vector<std::pair<EncodedBits, EncodedBits>> all_encodings();

}  // namespace simdense
