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

#include "simdense/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace simdense {

const SubsystemReport& LockingReport::subsystem(std::string_view holder) const {
  for (const auto& s : per_subsystem)
    if (s.holder == holder) return s;
  throw InvariantError("report has no subsystem held by '" + std::string(holder) + "'");
}

std::optional<double> LockingReport::metric(std::string_view name) const {
  for (const auto& [k, v] : metrics)
    if (k == name) return v;
  return std::nullopt;
}

std::string to_string(LockTask task) { return task == LockTask::kDenseCoding ? "dense_coding" : "teleportation"; }

LockTask parse_task(std::string_view name) {
  if (name == "dense_coding") return LockTask::kDenseCoding;
  if (name == "teleportation") return LockTask::kTeleportation;
  throw InvariantError("unknown task '" + std::string(name) + "' (expected dense_coding or teleportation)");
}

std::vector<std::pair<EncodedBits, EncodedBits>> all_encodings() {
  std::vector<std::pair<EncodedBits, EncodedBits>> out;
  for (int e = 0; e < 16; ++e) out.emplace_back(EncodedBits::from_index(e >> 2), EncodedBits::from_index(e & 3));
  return out;
}

std::vector<StateVector> stabilizer_probes() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  auto make = [](Complex a, Complex b) {
    CVector v(2);
    v << a, b;
    return StateVector({"q"}, v);
  };
  return {make(1, 0), make(0, 1), make(s, s), make(s, -s), make(s, s * i), make(s, -s * i)};
}

// ---------------------------------------------------------------------------
// Closed forms

DensityMatrix closed_form_receiver_view(Channel channel) {
  switch (channel) {
    case Channel::kBell:
      return DensityMatrix({"A1", "B"}, CMatrix::Identity(4, 4) / 4.0);
    case Channel::kGhz: {
      CMatrix m = CMatrix::Zero(8, 8);
      for (int k : {0b000, 0b011, 0b100, 0b111}) m(k, k) = 0.25;
      return DensityMatrix({"A1", "B1", "B2"}, m);
    }
    case Channel::kW: {
      CMatrix m = CMatrix::Zero(8, 8);
      m(0b000, 0b000) = 2;
      m(0b001, 0b001) = 1;
      m(0b001, 0b010) = 1;
      m(0b010, 0b001) = 1;
      m(0b010, 0b010) = 1;
      m(0b100, 0b100) = 2;
      m(0b101, 0b101) = 1;
      m(0b101, 0b110) = 1;
      m(0b110, 0b101) = 1;
      m(0b110, 0b110) = 1;
      return DensityMatrix({"A1", "B1", "B2"}, m / 8.0);
    }
  }
  throw InvariantError("unknown channel");
}

DensityMatrix closed_form_ulock_view(bool b1) {
  const double s = b1 ? -1.0 : 1.0;
  CMatrix m(4, 4);
  m << 1, 0, s, 0,
       0, 1, 0, -s,
       s, 0, 1, 0,
       0, -s, 0, 1;
  return DensityMatrix({"A1", "B"}, m / 4.0);
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<const char*, 4> kBitNames{"b1", "b2", "c1", "c2"};

bool encoding_bit(int encoding, int bit) { return ((encoding >> (3 - bit)) & 1) != 0; }

double max_pairwise(const std::vector<CMatrix>& views) {
  double out = 0.0;
  for (std::size_t i = 0; i < views.size(); ++i)
    for (std::size_t j = i + 1; j < views.size(); ++j) out = std::max(out, max_abs_diff(views[i], views[j]));
  return out;
}

DensityMatrix average(const Labels& labels, const std::vector<CMatrix>& views) {
  CMatrix sum = CMatrix::Zero(views.front().rows(), views.front().cols());
  for (const auto& v : views) sum += v;
  return DensityMatrix(labels, sum / static_cast<double>(views.size()));
}

/// For each of the four encoded bits, compares the receiver's view averaged
/// over encodings with that bit 0 against bit 1.
void classify_bits(const Labels& labels, const std::vector<CMatrix>& views, SubsystemReport& report) {
  for (int bit = 0; bit < 4; ++bit) {
    std::vector<CMatrix> zero, one;
    for (int e = 0; e < 16; ++e) (encoding_bit(e, bit) ? one : zero).push_back(views[static_cast<std::size_t>(e)]);
    const DensityMatrix rho0 = average(labels, zero);
    const DensityMatrix rho1 = average(labels, one);
    BitEvidence ev{kBitNames[static_cast<std::size_t>(bit)], trace_product(rho0, rho1), trace_distance(rho0, rho1)};
    if (ev.overlap <= kClosedFormTol) {
      report.recoverable_bits.push_back(ev);
    } else if (ev.trace_distance > kClosedFormTol) {
      report.leaky_bits.push_back(ev);
    }
  }
}

struct DenseSweep {
  std::vector<ProtocolTranscript> runs;  // 16 encodings
  bool decode_correct = true;
  double worst_decode_probability = 1.0;
};

DenseSweep sweep_dense_coding(Channel channel, const Unitary& lock, const std::string& lock_name) {
  DenseSweep sweep;
  for (const auto& [bob, charlie] : all_encodings()) {
    sweep.runs.push_back(run_dense_coding(channel, bob, charlie, lock, lock_name, RngSeed{0}));
    double p_correct = 0.0;
    for (const auto& branch : dense_coding_branches(channel, bob, charlie, lock)) {
      if (branch.bob == bob && branch.charlie == charlie) p_correct += branch.probability;
    }
    sweep.worst_decode_probability = std::min(sweep.worst_decode_probability, p_correct);
    if (std::abs(p_correct - 1.0) > kClosedFormTol) sweep.decode_correct = false;
  }
  return sweep;
}

SubsystemReport subsystem_report(const DenseSweep& sweep, const std::string& holder, const Labels& labels) {
  std::vector<CMatrix> views;
  for (const auto& run : sweep.runs) views.push_back(intercept_reduced(run, steps::kLockSend, labels).entries());
  SubsystemReport r;
  r.holder = holder;
  r.subsystem = labels;
  r.max_pairwise_diff = max_pairwise(views);
  r.independent_of_encoding = r.max_pairwise_diff < kClosedFormTol;
  const auto d = views.front().rows();
  double mixed_diff = 0.0;
  for (const auto& v : views) mixed_diff = std::max(mixed_diff, max_abs_diff(v, CMatrix::Identity(d, d) / static_cast<double>(d)));
  r.maximally_mixed = mixed_diff < kClosedFormTol;
  classify_bits(labels, views, r);
  return r;
}

void compare_closed_form(const DenseSweep& sweep, const DensityMatrix& closed, SubsystemReport& r) {
  double diff = 0.0;
  for (const auto& run : sweep.runs) {
    diff = std::max(diff, max_abs_diff(intercept_reduced(run, steps::kLockSend, r.subsystem).entries(), closed.entries()));
  }
  r.closed_form_diff = diff;
  r.matches_closed_form = diff < kClosedFormTol;
}

std::string bit_list(const std::vector<BitEvidence>& bits) {
  std::string out;
  for (const auto& b : bits) out += (out.empty() ? "" : ",") + b.bit;
  return out.empty() ? "none" : out;
}

}  // namespace

LockingReport verify_theorem(Channel channel) {
  const DenseSweep sweep = sweep_dense_coding(channel, qft(2), "qft");
  LockingReport report;
  report.protocol = to_string(channel);
  report.task = to_string(LockTask::kDenseCoding);
  report.lock_used = "qft";
  report.decode_correct = sweep.decode_correct;

  const DensityMatrix closed = closed_form_receiver_view(channel);
  SubsystemReport bob = subsystem_report(sweep, "Bob", bob_labels(channel));
  SubsystemReport charlie = subsystem_report(sweep, "Charlie", charlie_labels(channel));
  compare_closed_form(sweep, closed, bob);
  // Charlie's closed form is the same matrix on (A2, C...).
  compare_closed_form(sweep, DensityMatrix(charlie_labels(channel), closed.entries()), charlie);

  report.valid_lock = bob.independent_of_encoding && charlie.independent_of_encoding && sweep.decode_correct;
  report.passed = report.valid_lock && *bob.matches_closed_form && *charlie.matches_closed_form;
  report.metrics.emplace_back("max_pairwise_diff", std::max(bob.max_pairwise_diff, charlie.max_pairwise_diff));
  report.metrics.emplace_back("max_closed_form_diff", std::max(*bob.closed_form_diff, *charlie.closed_form_diff));
  report.metrics.emplace_back("min_decode_probability", sweep.worst_decode_probability);
  report.notes.push_back(std::string("receiver views are ") + (bob.maximally_mixed ? "" : "not ") +
                         "maximally mixed");
  report.per_subsystem.push_back(std::move(bob));
  report.per_subsystem.push_back(std::move(charlie));
  return report;
}

LockingReport verify_counterexample() {
  const Channel channel = Channel::kBell;
  const DenseSweep sweep = sweep_dense_coding(channel, lock_operator(), "ulock");
  LockingReport report;
  report.protocol = to_string(channel);
  report.task = to_string(LockTask::kDenseCoding);
  report.lock_used = "ulock";
  report.decode_correct = sweep.decode_correct;

  const Labels bob_qubits = bob_labels(channel);
  SubsystemReport bob = subsystem_report(sweep, "Bob", bob_qubits);
  SubsystemReport charlie = subsystem_report(sweep, "Charlie", charlie_labels(channel));

  // Bob's view against the two closed forms, and its invariance in b2 c1 c2.
  std::array<std::vector<CMatrix>, 2> by_b1;
  double closed_diff = 0.0;
  for (int e = 0; e < 16; ++e) {
    const bool b1 = encoding_bit(e, 0);
    const CMatrix view = intercept_reduced(sweep.runs[static_cast<std::size_t>(e)], steps::kLockSend, bob_qubits).entries();
    closed_diff = std::max(closed_diff, max_abs_diff(view, closed_form_ulock_view(b1).entries()));
    by_b1[b1 ? 1 : 0].push_back(view);
  }
  const double within_b1 = std::max(max_pairwise(by_b1[0]), max_pairwise(by_b1[1]));
  bob.closed_form_diff = closed_diff;
  bob.matches_closed_form = closed_diff < kClosedFormTol;

  const DensityMatrix rho0(bob_qubits, by_b1[0].front());
  const DensityMatrix rho1(bob_qubits, by_b1[1].front());
  const SupportDistinguisher dist = support_distinguisher(rho0, rho1);

  // Two-outcome support measurement on every preparation: exact success
  // probability and seeded samples (P clicks => guess b1 = 0).
  Rng rng(RngSeed{20100101});
  double min_success = 1.0;
  int correct = 0;
  int total = 0;
  for (int e = 0; e < 16; ++e) {
    const bool b1 = encoding_bit(e, 0);
    const StateVector& state = sweep.runs[static_cast<std::size_t>(e)].step(steps::kLockSend).state;
    const double p_click = projector_probability(state, dist.projector, bob_qubits);
    min_success = std::min(min_success, b1 ? 1.0 - p_click : p_click);
    for (int s = 0; s < kCounterexampleSamples; ++s) {
      const bool guess_b1 = !measure_projector(state, dist.projector, bob_qubits, rng);
      correct += guess_b1 == b1 ? 1 : 0;
      ++total;
    }
  }
  const double accuracy = static_cast<double>(correct) / static_cast<double>(total);
  const bool b1_recoverable = std::any_of(bob.recoverable_bits.begin(), bob.recoverable_bits.end(),
                                          [](const BitEvidence& b) { return b.bit == "b1"; });

  report.metrics.emplace_back("bob_within_b1_max_diff", within_b1);
  report.metrics.emplace_back("bob_closed_form_diff", closed_diff);
  report.metrics.emplace_back("support_overlap", dist.overlap);
  report.metrics.emplace_back("support_projector_rank", dist.projector.trace().real());
  report.metrics.emplace_back("b1_min_success_probability", min_success);
  report.metrics.emplace_back("b1_identification_accuracy", accuracy);
  report.metrics.emplace_back("b1_identification_samples", static_cast<double>(total));
  report.notes.push_back("Bob recovers with certainty: " + bit_list(bob.recoverable_bits));
  report.notes.push_back("Charlie recovers with certainty: " + bit_list(charlie.recoverable_bits));

  report.valid_lock = bob.independent_of_encoding && charlie.independent_of_encoding && sweep.decode_correct;
  report.passed = within_b1 < kClosedFormTol && *bob.matches_closed_form && dist.overlap <= kAlgebraTol &&
                  dist.distinguishable && accuracy == 1.0 && b1_recoverable;
  report.per_subsystem.push_back(std::move(bob));
  report.per_subsystem.push_back(std::move(charlie));
  return report;
}

namespace {

LockingReport classify_dense(const Unitary& u, Channel channel) {
  const DenseSweep sweep = sweep_dense_coding(channel, u, "custom");
  LockingReport report;
  report.protocol = to_string(channel);
  report.task = to_string(LockTask::kDenseCoding);
  report.lock_used = "custom";
  report.decode_correct = sweep.decode_correct;
  SubsystemReport bob = subsystem_report(sweep, "Bob", bob_labels(channel));
  SubsystemReport charlie = subsystem_report(sweep, "Charlie", charlie_labels(channel));
  report.valid_lock = bob.independent_of_encoding && charlie.independent_of_encoding && sweep.decode_correct;
  report.passed = report.valid_lock;
  report.metrics.emplace_back("max_pairwise_diff", std::max(bob.max_pairwise_diff, charlie.max_pairwise_diff));
  report.metrics.emplace_back("min_decode_probability", sweep.worst_decode_probability);
  report.notes.push_back("Bob recovers with certainty: " + bit_list(bob.recoverable_bits) +
                         "; partial information on: " + bit_list(bob.leaky_bits));
  report.notes.push_back("Charlie recovers with certainty: " + bit_list(charlie.recoverable_bits) +
                         "; partial information on: " + bit_list(charlie.leaky_bits));
  report.per_subsystem.push_back(std::move(bob));
  report.per_subsystem.push_back(std::move(charlie));
  return report;
}

LockingReport classify_teleportation(const Unitary& u) {
  const Unitary unlock = teleport_unlock_for(u);
  const std::vector<StateVector> probes = stabilizer_probes();
  const TeleportLayout layout = teleport_layout(TeleportScheme::kUlock2, 2);

  // views[receiver][own outcome] holds one matrix per probe pair.
  std::array<std::array<std::vector<CMatrix>, 4>, 2> views;
  double min_fidelity = 1.0;
  std::size_t branches_per_probe = 0;
  for (const auto& p1 : probes) {
    for (const auto& p2 : probes) {
      TeleportInput input{TeleportScheme::kUlock2, {p1, p2}, 2};
      std::array<std::array<CMatrix, 4>, 2> acc;
      std::array<std::array<double, 4>, 2> weight{};
      for (auto& row : acc)
        for (auto& m : row) m = CMatrix::Zero(2, 2);
      std::size_t branches = 0;
      for (int r = 0; r < 16; ++r) {
        const std::vector<EncodedBits> record{EncodedBits::from_index(r >> 2), EncodedBits::from_index(r & 3)};
        ProtocolTranscript t = [&]() -> ProtocolTranscript {
          try {
            return run_teleportation_with(input, u, unlock, "custom", nullptr, &record, false);
          } catch (const ProtocolViolation&) {
            return {};
          }
        }();
        if (t.recovered.empty()) continue;
        ++branches;
        for (const auto& rec : t.recovered) min_fidelity = std::min(min_fidelity, rec.fidelity);
        for (const auto& ic : t.intercepts) {
          if (ic.stage != steps::kBsm) continue;
          const std::size_t who = ic.holder == layout.receiver_names[0] ? 0 : 1;
          const auto own = static_cast<std::size_t>(record[who].index());
          acc[who][own] += t.branch_probability * ic.rho.entries();
          weight[who][own] += t.branch_probability;
        }
      }
      branches_per_probe = std::max(branches_per_probe, branches);
      for (std::size_t who = 0; who < 2; ++who)
        for (std::size_t own = 0; own < 4; ++own)
          if (weight[who][own] > kClosedFormTol) views[who][own].push_back(acc[who][own] / weight[who][own]);
    }
  }

  LockingReport report;
  report.protocol = "bell";
  report.task = to_string(LockTask::kTeleportation);
  report.lock_used = "custom";
  report.decode_correct = std::abs(min_fidelity - 1.0) <= kClosedFormTol;
  bool all_independent = true;
  for (std::size_t who = 0; who < 2; ++who) {
    SubsystemReport r;
    r.holder = layout.receiver_names[who];
    r.subsystem = {layout.receiver[who]};
    BitEvidence worst{"payload", 1.0, 0.0};
    bool mixed = true;
    for (const auto& per_outcome : views[who]) {
      if (per_outcome.empty()) continue;
      r.max_pairwise_diff = std::max(r.max_pairwise_diff, max_pairwise(per_outcome));
      for (std::size_t i = 0; i < per_outcome.size(); ++i) {
        mixed = mixed && max_abs_diff(per_outcome[i], CMatrix::Identity(2, 2) / 2.0) < kClosedFormTol;
        for (std::size_t j = i + 1; j < per_outcome.size(); ++j) {
          const DensityMatrix a(r.subsystem, per_outcome[i]);
          const DensityMatrix b(r.subsystem, per_outcome[j]);
          const double td = trace_distance(a, b);
          if (td > worst.trace_distance) worst = {"payload", trace_product(a, b), td};
        }
      }
    }
    r.independent_of_encoding = r.max_pairwise_diff < kClosedFormTol;
    r.maximally_mixed = mixed;
    if (!r.independent_of_encoding) r.leaky_bits.push_back(worst);
    all_independent = all_independent && r.independent_of_encoding;
    report.per_subsystem.push_back(std::move(r));
  }
  report.valid_lock = all_independent && report.decode_correct;
  report.passed = report.valid_lock;
  report.metrics.emplace_back("min_fidelity", min_fidelity);
  report.metrics.emplace_back("probe_pairs", static_cast<double>(probes.size() * probes.size()));
  report.metrics.emplace_back("branches_per_probe", static_cast<double>(branches_per_probe));
  report.notes.push_back("payload probes: the six single-qubit stabilizer states in each slot, all pairs");
  report.notes.push_back("receiver view: own qubit after the classical messages, given its own Bell outcome");
  return report;
}

}  // namespace

LockingReport classify_locking_unitary(const Unitary& u, LockTask task, Channel channel) {
  if (u.dim() != 4) throw DimensionError("a locking operator acts on the two sender qubits (4x4)");
  if (task == LockTask::kDenseCoding) return classify_dense(u, channel);
  if (channel != Channel::kBell) throw InvariantError("teleportation is defined over Bell pairs only");
  return classify_teleportation(u);
}

}  // namespace simdense
