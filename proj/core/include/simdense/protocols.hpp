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
#include <vector>

#include "simdense/gates.hpp"
#include "simdense/measurement.hpp"
#include "simdense/qlinalg.hpp"
#include "simdense/states.hpp"

namespace simdense {

namespace steps {
inline constexpr std::string_view kInitial = "step0_initial";
// dense coding
inline constexpr std::string_view kEncode = "step1_encode";
inline constexpr std::string_view kLockSend = "step2_lock_send";
inline constexpr std::string_view kUnlock = "step3_unlock";
inline constexpr std::string_view kMeasure = "step4_measure";
// teleportation
inline constexpr std::string_view kLock = "step1_lock";
inline constexpr std::string_view kBsm = "step2_bsm";
inline constexpr std::string_view kClassicalSend = "step3_classical_send";
inline constexpr std::string_view kTeleportUnlock = "step4_unlock";
inline constexpr std::string_view kCorrect = "step5_correct";
}  // namespace steps

/// Named two-qubit locking operators.
enum class LockKind { kQft, kUlock };

std::string to_string(LockKind lock);
/// Accepts "qft" and "ulock".
LockKind parse_lock(std::string_view name);
Unitary lock_unitary(LockKind lock);

struct DenseCodingInput {
  Channel channel = Channel::kBell;
  EncodedBits bob_bits;
  EncodedBits charlie_bits;
  LockKind lock = LockKind::kQft;
};

enum class TeleportScheme { kUlock2, kQftN };

std::string to_string(TeleportScheme scheme);
/// Accepts "ulock" / "ulock2" and "qft" / "qftN".
TeleportScheme parse_scheme(std::string_view name);

inline constexpr int kMaxTeleportReceivers = 6;

struct TeleportInput {
  TeleportScheme scheme = TeleportScheme::kQftN;
  /// Single-qubit payloads, one per receiver.
  std::vector<StateVector> payloads;
  int n_receivers = 0;
};

struct Snapshot {
  std::string step;
  StateVector state;
};

/// Reduced state of one party's qubits at one stage.
struct Intercept {
  std::string stage;
  std::string holder;
  DensityMatrix rho;
};

struct DecodedBits {
  std::string receiver;
  EncodedBits bits;
  double probability = 0.0;  // conditional probability of this outcome
};

/// Teleportation step-3 message: Bell outcome (x_i, y_i) for one receiver.
struct ClassicalMessage {
  std::string receiver;
  EncodedBits bits;
};

struct RecoveredState {
  std::string receiver;
  DensityMatrix state;  // single qubit
  double fidelity = 0.0;  // <payload|state|payload>
};

struct ProtocolTranscript {
  std::string protocol;  // dense_coding, teleport_ulock2, teleport_qft
  std::string channel;
  std::string lock;
  std::vector<Snapshot> steps;
  std::vector<Intercept> intercepts;
  std::vector<DecodedBits> decoded;
  std::vector<ClassicalMessage> messages;
  std::vector<RecoveredState> recovered;
  /// Teleportation only: receiver register after the Bell measurements and
  /// after the unlock.
  std::optional<StateVector> receiver_pre_unlock;
  std::optional<StateVector> receiver_post_unlock;
  /// Probability of the measurement record in this transcript.
  double branch_probability = 1.0;
  RngSeed seed;

  /// Throws InvariantError for an unknown step name.
  const Snapshot& step(std::string_view name) const;
  bool has_step(std::string_view name) const;
};

// ---------------------------------------------------------------------------
// Dense coding
// ---------------------------------------------------------------------------

/// Encode, lock with `input.lock` on (A1, A2), unlock with its adjoint, then
/// measure each receiver's qubits in the channel's family. The register is
/// reordered to (A1, A2, Bob..., Charlie...) before the lock.
ProtocolTranscript run_dense_coding(const DenseCodingInput& input, RngSeed seed);

/// Same engine with an arbitrary two-qubit lock.
ProtocolTranscript run_dense_coding(Channel channel, EncodedBits bob_bits, EncodedBits charlie_bits,
                                    const Unitary& lock, std::string lock_name, RngSeed seed);

struct DenseCodingBranch {
  EncodedBits bob;
  EncodedBits charlie;
  double probability = 0.0;
};

/// Every joint step-4 outcome with probability above kClosedFormTol.
std::vector<DenseCodingBranch> dense_coding_branches(const DenseCodingInput& input);
std::vector<DenseCodingBranch> dense_coding_branches(Channel channel, EncodedBits bob_bits, EncodedBits charlie_bits,
                                                     const Unitary& lock);

/// Partial trace of a recorded snapshot.
DensityMatrix intercept_reduced(const ProtocolTranscript& transcript, std::string_view stage, const Labels& subsystem);

// ---------------------------------------------------------------------------
// Teleportation
// ---------------------------------------------------------------------------

/// Qubit names of a teleportation register.
struct TeleportLayout {
  Labels payload;    // T_i
  Labels sender;     // A_i
  Labels receiver;   // B, C for two receivers with U(LOCK); B_i otherwise
  std::vector<std::string> receiver_names;
  /// T_1..T_N, then A_1 B_1 ... A_N B_N.
  Labels register_order() const;
};

TeleportLayout teleport_layout(TeleportScheme scheme, int n_receivers);

/// Validates the input: payloads are one-qubit states, one per receiver;
/// ulock2 needs exactly two receivers and qftN 1..6.
void validate(const TeleportInput& input);

/// Lock with U(LOCK) on (A1, A2), Bell-measure (A_i, T_i), send the
/// outcomes, unlock with U(LOCK) on (B, C), correct with U(x_i y_i).
ProtocolTranscript run_teleportation_ulock(const TeleportInput& input, RngSeed seed);

/// Lock with the N-qubit QFT on A_1..A_N, Bell-measure, send, unlock with
/// QFT^dagger on B_1..B_N, correct.
ProtocolTranscript run_teleportation_qft(const TeleportInput& input, RngSeed seed);

/// Dispatches on input.scheme.
ProtocolTranscript run_teleportation(const TeleportInput& input, RngSeed seed);

/// One run with the Bell outcomes fixed to `outcomes` (one per receiver).
/// Throws ProtocolViolation if that record has zero probability.
ProtocolTranscript run_teleportation_branch(const TeleportInput& input, const std::vector<EncodedBits>& outcomes,
                                            bool keep_snapshots = true);

/// Every Bell-outcome record with nonzero probability, in lexicographic
/// order of (x_1 y_1, ..., x_N y_N).
std::vector<ProtocolTranscript> teleportation_branches(const TeleportInput& input, bool keep_snapshots = false);

/// General engine: `lock` acts on the sender register, `unlock` on the
/// receiver register. Exactly one of `rng` / `forced` must be set.
ProtocolTranscript run_teleportation_with(const TeleportInput& input, const Unitary& lock, const Unitary& unlock,
                                          std::string lock_name, Rng* rng, const std::vector<EncodedBits>* forced,
                                          bool keep_snapshots = true);

/// Receiver-side inverse of a sender lock. The Bell pairs transfer the lock
/// to the receivers as its transpose, so the inverse is conj(lock).
Unitary teleport_unlock_for(const Unitary& lock);

}  // namespace simdense
