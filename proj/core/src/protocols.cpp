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

#include "simdense/protocols.hpp"

#include <algorithm>

namespace simdense {

std::string to_string(LockKind lock) { return lock == LockKind::kQft ? "qft" : "ulock"; }

LockKind parse_lock(std::string_view name) {
  if (name == "qft") return LockKind::kQft;
  if (name == "ulock") return LockKind::kUlock;
  throw InvariantError("unknown lock '" + std::string(name) + "' (expected qft or ulock)");
}

Unitary lock_unitary(LockKind lock) { return lock == LockKind::kQft ? qft(2) : lock_operator(); }

std::string to_string(TeleportScheme scheme) { return scheme == TeleportScheme::kUlock2 ? "ulock2" : "qftN"; }

TeleportScheme parse_scheme(std::string_view name) {
  if (name == "ulock" || name == "ulock2") return TeleportScheme::kUlock2;
  if (name == "qft" || name == "qftN") return TeleportScheme::kQftN;
  throw InvariantError("unknown teleportation scheme '" + std::string(name) + "' (expected ulock or qft)");
}

const Snapshot& ProtocolTranscript::step(std::string_view name) const {
  for (const auto& s : steps)
    if (s.step == name) return s;
  throw InvariantError("transcript has no step '" + std::string(name) + "'");
}

bool ProtocolTranscript::has_step(std::string_view name) const {
  return std::any_of(steps.begin(), steps.end(), [&](const Snapshot& s) { return s.step == name; });
}

DensityMatrix intercept_reduced(const ProtocolTranscript& transcript, std::string_view stage, const Labels& subsystem) {
  return partial_trace(transcript.step(stage).state, subsystem);
}

// ---------------------------------------------------------------------------
// Dense coding

namespace {

/// Steps 0-3 of dense coding. The last snapshot is the unlocked state.
ProtocolTranscript dense_coding_prefix(Channel channel, EncodedBits bob_bits, EncodedBits charlie_bits,
                                       const Unitary& lock, std::string lock_name) {
  if (lock.dim() != 4) throw DimensionError("dense coding lock must act on two qubits");
  const Labels bob = bob_labels(channel);
  const Labels charlie = charlie_labels(channel);
  const std::string a1 = bob.front();
  const std::string a2 = charlie.front();

  ProtocolTranscript t;
  t.protocol = "dense_coding";
  t.channel = to_string(channel);
  t.lock = std::move(lock_name);

  StateVector state = initial_state(channel);
  t.steps.push_back({std::string(steps::kInitial), state});

  state = apply(state, pauli_encoder(bob_bits), {a1});
  state = apply(state, pauli_encoder(charlie_bits), {a2});
  t.steps.push_back({std::string(steps::kEncode), state});

  // (A1, A2, Bob's qubits, Charlie's qubits)
  Labels order{a1, a2};
  for (std::size_t i = 1; i < bob.size(); ++i) order.push_back(bob[i]);
  for (std::size_t i = 1; i < charlie.size(); ++i) order.push_back(charlie[i]);
  state = permute(state, order);
  state = apply(state, lock, {a1, a2});
  t.steps.push_back({std::string(steps::kLockSend), state});
  t.intercepts.push_back({std::string(steps::kLockSend), "Bob", partial_trace(state, bob)});
  t.intercepts.push_back({std::string(steps::kLockSend), "Charlie", partial_trace(state, charlie)});

  state = apply(state, adjoint(lock), {a1, a2});
  t.steps.push_back({std::string(steps::kUnlock), state});
  return t;
}

}  // namespace

ProtocolTranscript run_dense_coding(Channel channel, EncodedBits bob_bits, EncodedBits charlie_bits,
                                    const Unitary& lock, std::string lock_name, RngSeed seed) {
  ProtocolTranscript t = dense_coding_prefix(channel, bob_bits, charlie_bits, lock, std::move(lock_name));
  t.seed = seed;
  const BasisFamily family = basis_family(channel);
  const Labels bob = bob_labels(channel);
  const Labels charlie = charlie_labels(channel);

  Rng rng(seed);
  const MeasurementOutcome first = measure_in_family(t.steps.back().state, family, bob, rng);
  const MeasurementOutcome second = measure_in_family(first.post_state, family, charlie, rng);
  t.decoded.push_back({"Bob", first.bits, first.probability});
  t.decoded.push_back({"Charlie", second.bits, second.probability});
  t.branch_probability = first.probability * second.probability;
  t.steps.push_back({std::string(steps::kMeasure), second.post_state});
  return t;
}

ProtocolTranscript run_dense_coding(const DenseCodingInput& input, RngSeed seed) {
  return run_dense_coding(input.channel, input.bob_bits, input.charlie_bits, lock_unitary(input.lock),
                          to_string(input.lock), seed);
}

std::vector<DenseCodingBranch> dense_coding_branches(Channel channel, EncodedBits bob_bits, EncodedBits charlie_bits,
                                                     const Unitary& lock) {
  const ProtocolTranscript t = dense_coding_prefix(channel, bob_bits, charlie_bits, lock, "custom");
  const BasisFamily family = basis_family(channel);
  const Labels bob = bob_labels(channel);
  const Labels charlie = charlie_labels(channel);
  std::vector<DenseCodingBranch> out;
  for (const auto& first : enumerate_branches(t.steps.back().state, family, bob)) {
    for (const auto& second : enumerate_branches(first.post_state, family, charlie)) {
      const double p = first.probability * second.probability;
      if (p > kClosedFormTol) out.push_back({first.bits, second.bits, p});
    }
  }
  return out;
}

std::vector<DenseCodingBranch> dense_coding_branches(const DenseCodingInput& input) {
  return dense_coding_branches(input.channel, input.bob_bits, input.charlie_bits, lock_unitary(input.lock));
}

// ---------------------------------------------------------------------------
// Teleportation

Labels TeleportLayout::register_order() const {
  Labels out = payload;
  for (std::size_t i = 0; i < sender.size(); ++i) {
    out.push_back(sender[i]);
    out.push_back(receiver[i]);
  }
  return out;
}

TeleportLayout teleport_layout(TeleportScheme scheme, int n_receivers) {
  TeleportLayout layout;
  if (scheme == TeleportScheme::kUlock2) {
    if (n_receivers != 2) throw InvariantError("the U(LOCK) teleportation scheme has exactly two receivers");
    layout.payload = {"T1", "T2"};
    layout.sender = {"A1", "A2"};
    layout.receiver = {"B", "C"};
    layout.receiver_names = {"Bob", "Charlie"};
    return layout;
  }
  if (n_receivers < 1 || n_receivers > kMaxTeleportReceivers) {
    throw InvariantError("QFT teleportation supports 1.." + std::to_string(kMaxTeleportReceivers) + " receivers, got " +
                         std::to_string(n_receivers));
  }
  for (int i = 1; i <= n_receivers; ++i) {
    const std::string idx = std::to_string(i);
    layout.payload.push_back("T" + idx);
    layout.sender.push_back("A" + idx);
    layout.receiver.push_back("B" + idx);
    layout.receiver_names.push_back("Bob" + idx);
  }
  return layout;
}

void validate(const TeleportInput& input) {
  if (static_cast<int>(input.payloads.size()) != input.n_receivers) {
    throw InvariantError("expected " + std::to_string(input.n_receivers) + " payloads, got " +
                         std::to_string(input.payloads.size()));
  }
  for (const auto& p : input.payloads) {
    if (p.n_qubits() != 1) throw DimensionError("teleportation payloads must be single-qubit states");
  }
  teleport_layout(input.scheme, input.n_receivers);
}

Unitary teleport_unlock_for(const Unitary& lock) { return conjugate(lock); }

namespace {

/// Receiver register state: contract the sender and payload qubits with the
/// measured Bell states.
StateVector receiver_state(const StateVector& state, const TeleportLayout& layout,
                           const std::vector<EncodedBits>& outcomes) {
  Labels targets;
  CVector bra = CVector::Ones(1);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    targets.push_back(layout.sender[i]);
    targets.push_back(layout.payload[i]);
    bra = kron(bra, phi(outcomes[i]).amplitudes());
  }
  const CVector rest = contract_bra(state, targets, bra);
  return StateVector::normalized(complement(state.labels(), targets), rest);
}

}  // namespace

ProtocolTranscript run_teleportation_with(const TeleportInput& input, const Unitary& lock, const Unitary& unlock,
                                          std::string lock_name, Rng* rng, const std::vector<EncodedBits>* forced,
                                          bool keep_snapshots) {
  validate(input);
  if ((rng == nullptr) == (forced == nullptr)) {
    throw InvariantError("teleportation needs either an rng or a forced outcome record");
  }
  const int n = input.n_receivers;
  if (lock.dim() != (std::size_t{1} << n) || unlock.dim() != lock.dim()) {
    throw DimensionError("teleportation lock must act on the " + std::to_string(n) + " sender qubits");
  }
  if (forced != nullptr && static_cast<int>(forced->size()) != n) {
    throw InvariantError("forced outcome record needs one entry per receiver");
  }
  const TeleportLayout layout = teleport_layout(input.scheme, n);

  ProtocolTranscript t;
  t.protocol = input.scheme == TeleportScheme::kUlock2 ? "teleport_ulock2" : "teleport_qft";
  t.channel = "bell";
  t.lock = std::move(lock_name);
  auto record = [&](std::string_view step, const StateVector& s) {
    if (keep_snapshots) t.steps.push_back({std::string(step), s});
  };

  // T_1..T_N then the Bell pairs (A_i, B_i).
  StateVector state = input.payloads[0].relabeled({layout.payload[0]});
  for (int i = 1; i < n; ++i) state = tensor(state, input.payloads[static_cast<std::size_t>(i)].relabeled({layout.payload[static_cast<std::size_t>(i)]}));
  for (int i = 0; i < n; ++i) state = tensor(state, phi({}, {layout.sender[static_cast<std::size_t>(i)], layout.receiver[static_cast<std::size_t>(i)]}));
  record(steps::kInitial, state);

  state = apply(state, lock, layout.sender);
  record(steps::kLock, state);
  for (std::size_t i = 0; i < layout.receiver.size(); ++i) {
    t.intercepts.push_back({std::string(steps::kLock), layout.receiver_names[i], partial_trace(state, {layout.receiver[i]})});
  }

  const BasisFamily bell = basis_family(Channel::kBell);
  std::vector<EncodedBits> outcomes;
  for (int i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const Labels targets{layout.sender[idx], layout.payload[idx]};
    MeasurementOutcome outcome = [&] {
      if (rng != nullptr) return measure_in_family(state, bell, targets, *rng);
      auto selected = select_branch(state, bell, targets, (*forced)[idx]);
      if (!selected) {
        throw ProtocolViolation("Bell outcome " + (*forced)[idx].str() + " on " + targets[0] + targets[1] +
                                " has zero probability");
      }
      return *selected;
    }();
    t.branch_probability *= outcome.probability;
    outcomes.push_back(outcome.bits);
    state = outcome.post_state;
  }
  record(steps::kBsm, state);
  for (std::size_t i = 0; i < layout.receiver.size(); ++i) {
    t.intercepts.push_back({std::string(steps::kBsm), layout.receiver_names[i], partial_trace(state, {layout.receiver[i]})});
  }
  t.receiver_pre_unlock = receiver_state(state, layout, outcomes);

  for (std::size_t i = 0; i < outcomes.size(); ++i) t.messages.push_back({layout.receiver_names[i], outcomes[i]});
  record(steps::kClassicalSend, state);

  state = apply(state, unlock, layout.receiver);
  record(steps::kTeleportUnlock, state);
  t.receiver_post_unlock = receiver_state(state, layout, outcomes);

  for (std::size_t i = 0; i < outcomes.size(); ++i) state = apply(state, pauli_encoder(outcomes[i]), {layout.receiver[i]});
  record(steps::kCorrect, state);

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    DensityMatrix rho = partial_trace(state, {layout.receiver[i]});
    const StateVector payload = input.payloads[i].relabeled({layout.receiver[i]});
    const double f = fidelity(payload, rho);
    t.recovered.push_back({layout.receiver_names[i], std::move(rho), f});
  }
  return t;
}

ProtocolTranscript run_teleportation_ulock(const TeleportInput& input, RngSeed seed) {
  if (input.scheme != TeleportScheme::kUlock2) throw InvariantError("input is not a U(LOCK) teleportation");
  const Unitary lock = lock_operator();
  Rng rng(seed);
  ProtocolTranscript t = run_teleportation_with(input, lock, teleport_unlock_for(lock), "ulock", &rng, nullptr);
  t.seed = seed;
  return t;
}

ProtocolTranscript run_teleportation_qft(const TeleportInput& input, RngSeed seed) {
  if (input.scheme != TeleportScheme::kQftN) throw InvariantError("input is not a QFT teleportation");
  validate(input);
  const Unitary lock = qft(input.n_receivers);
  Rng rng(seed);
  ProtocolTranscript t = run_teleportation_with(input, lock, teleport_unlock_for(lock), "qft", &rng, nullptr);
  t.seed = seed;
  return t;
}

ProtocolTranscript run_teleportation(const TeleportInput& input, RngSeed seed) {
  return input.scheme == TeleportScheme::kUlock2 ? run_teleportation_ulock(input, seed)
                                                 : run_teleportation_qft(input, seed);
}

namespace {

std::pair<Unitary, std::string> scheme_lock(const TeleportInput& input) {
  validate(input);
  if (input.scheme == TeleportScheme::kUlock2) return {lock_operator(), "ulock"};
  return {qft(input.n_receivers), "qft"};
}

}  // namespace

ProtocolTranscript run_teleportation_branch(const TeleportInput& input, const std::vector<EncodedBits>& outcomes,
                                            bool keep_snapshots) {
  auto [lock, name] = scheme_lock(input);
  return run_teleportation_with(input, lock, teleport_unlock_for(lock), name, nullptr, &outcomes, keep_snapshots);
}

std::vector<ProtocolTranscript> teleportation_branches(const TeleportInput& input, bool keep_snapshots) {
  auto [lock, name] = scheme_lock(input);
  const Unitary unlock = teleport_unlock_for(lock);
  const int n = input.n_receivers;
  std::vector<ProtocolTranscript> out;
  const std::size_t records = std::size_t{1} << (2 * n);
  for (std::size_t r = 0; r < records; ++r) {
    std::vector<EncodedBits> outcomes;
    for (int i = 0; i < n; ++i) {
      const auto shift = static_cast<std::size_t>(2 * (n - 1 - i));
      outcomes.push_back(EncodedBits::from_index(static_cast<int>((r >> shift) & 3U)));
    }
    try {
      out.push_back(run_teleportation_with(input, lock, unlock, name, nullptr, &outcomes, keep_snapshots));
    } catch (const ProtocolViolation&) {
      // zero-probability record
    }
  }
  return out;
}

}  // namespace simdense
