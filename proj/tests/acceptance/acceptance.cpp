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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "simdense/analysis.hpp"
#include "simdense/measurement.hpp"
#include "simdense/protocols.hpp"
#include "support.hpp"

using namespace simdense;
namespace oracle = simdense::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

constexpr Channel kChannels[] = {Channel::kBell, Channel::kGhz, Channel::kW};

std::vector<std::pair<EncodedBits, EncodedBits>> encodings() {
  std::vector<std::pair<EncodedBits, EncodedBits>> out;
  for (const auto b : all_bit_pairs())
    for (const auto c : all_bit_pairs()) out.emplace_back(b, c);
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

/// Receiver views under the QFT lock for all encodings against a typed matrix.
Outcome views_match(Channel channel, const CMatrix& want) {
  Outcome o;
  double worst = 0.0;
  for (const auto& [b, c] : encodings()) {
    const ProtocolTranscript t = run_dense_coding({channel, b, c, LockKind::kQft}, RngSeed{0});
    const StateVector& s = t.step(steps::kLockSend).state;
    for (const Labels& holder : {bob_labels(channel), charlie_labels(channel)}) {
      const CMatrix rho = oracle::brute_partial_trace(s.labels(), s.amplitudes(), holder);
      worst = std::max(worst, max_abs_diff(rho, want));
      worst = std::max(worst, max_abs_diff(intercept_reduced(t, steps::kLockSend, holder).entries(), want));
    }
  }
  o.require(worst < kClosedFormTol, "max deviation " + fmt(worst));
  o.detail = o.pass ? "16 encodings x 2 receivers, max deviation " + fmt(worst) : o.detail;
  return o;
}

Outcome criterion_dense_coding() {
  Outcome o;
  int sampled_ok = 0;
  const auto all = encodings();
  for (const Channel ch : kChannels) {
    for (const auto& [b, c] : encodings()) {
      const auto branches = dense_coding_branches({ch, b, c, LockKind::kQft});
      o.require(branches.size() == 1 && branches[0].bob == b && branches[0].charlie == c &&
                    std::abs(branches[0].probability - 1.0) < kClosedFormTol,
                to_string(ch) + " enumeration failed at " + b.str() + c.str());
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto& [b, c] = all[seed % 16];
      const ProtocolTranscript t = run_dense_coding({ch, b, c, LockKind::kQft}, RngSeed{1000 + seed});
      const bool ok = t.decoded.size() == 2 && t.decoded[0].bits == b && t.decoded[1].bits == c;
      sampled_ok += ok ? 1 : 0;
      o.require(ok, to_string(ch) + " sampled run failed at seed " + std::to_string(1000 + seed));
    }
  }
  if (o.pass) o.detail = "3 channels x 16 encodings with p = 1; sampled " + std::to_string(sampled_ok) + "/300";
  return o;
}

Outcome criterion_counterexample() {
  Outcome o;
  double worst = 0.0;
  int correct = 0;
  int trials = 0;
  const auto d = support_distinguisher(DensityMatrix({"A1", "B"}, oracle::ulock_view(false)),
                                       DensityMatrix({"A1", "B"}, oracle::ulock_view(true)));
  const Labels ab{"A1", "B"};
  Rng rng(RngSeed{77});
  for (const auto& [b, c] : encodings()) {
    const ProtocolTranscript t = run_dense_coding({Channel::kBell, b, c, LockKind::kUlock}, RngSeed{0});
    const StateVector& s = t.step(steps::kLockSend).state;
    worst = std::max(worst, max_abs_diff(oracle::brute_partial_trace(s.labels(), s.amplitudes(), ab),
                                         oracle::ulock_view(b.x)));
    // Outcome "in the support of rho(0)" means b1 = 0.
    for (int k = 0; k < 64; ++k, ++trials) correct += (measure_projector(s, d.projector, ab, rng) == !b.x) ? 1 : 0;
  }
  const double overlap = std::abs((oracle::ulock_view(false) * oracle::ulock_view(true)).trace());
  o.require(worst < kClosedFormTol, "view deviates by " + fmt(worst));
  o.require(overlap <= kAlgebraTol, "tr(rho0 rho1) = " + fmt(overlap));
  o.require(correct == trials, "b1 identified " + std::to_string(correct) + "/" + std::to_string(trials));
  const LockingReport r = verify_counterexample();
  o.require(r.passed, "verify_counterexample did not pass");
  if (o.pass) {
    o.detail = "view deviation " + fmt(worst) + ", tr(rho0 rho1) = " + fmt(overlap) + ", b1 identified " +
               std::to_string(correct) + "/" + std::to_string(trials);
  }
  return o;
}

CVector rotated_payloads(const TeleportInput& in, const std::vector<ClassicalMessage>& messages) {
  CVector out = CVector::Ones(1);
  for (std::size_t i = 0; i < messages.size(); ++i) {
    out = kron(out, CVector(pauli_encoder(messages[i].bits).entries() * in.payloads[i].amplitudes()));
  }
  return out;
}

Outcome criterion_teleport_ulock() {
  Outcome o;
  oracle::Gen gen(606);
  double worst = 0.0;
  int branches = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const TeleportInput in{TeleportScheme::kUlock2, {gen.qubit(), gen.qubit()}, 2};
    for (const auto& t : teleportation_branches(in)) {
      ++branches;
      for (const auto& r : t.recovered) worst = std::max(worst, std::abs(1.0 - r.fidelity));
      const StateVector want(t.receiver_post_unlock->labels(), rotated_payloads(in, t.messages));
      o.require(equal_up_to_global_phase(*t.receiver_post_unlock, want, kClosedFormTol),
                "unlocked receiver state differs from the rotated payloads");
    }
  }
  o.require(branches == 160, "expected 160 branches, got " + std::to_string(branches));
  o.require(worst < kClosedFormTol, "fidelity deficit " + fmt(worst));
  if (o.pass) o.detail = "10 payload pairs x 16 branches, max fidelity deficit " + fmt(worst);
  return o;
}

Outcome criterion_teleport_qft() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  oracle::Gen gen(707);
  double worst = 0.0;
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    TeleportInput in{TeleportScheme::kQftN, {}, n};
    for (int i = 0; i < n; ++i) in.payloads.push_back(gen.qubit());
    std::vector<ProtocolTranscript> runs;
    if (n <= 2) {
      runs = teleportation_branches(in);
    } else {
      for (std::uint64_t seed = 0; seed < 50; ++seed) runs.push_back(run_teleportation(in, RngSeed{seed}));
    }
    for (const auto& t : runs) {
      ++checked;
      for (const auto& r : t.recovered) worst = std::max(worst, std::abs(1.0 - r.fidelity));
      if (n == 2) {
        const CVector want = qft(2).entries() * rotated_payloads(in, t.messages);
        o.require(equal_up_to_global_phase(*t.receiver_pre_unlock, StateVector(t.receiver_pre_unlock->labels(), want),
                                           kClosedFormTol),
                  "N = 2 pre-unlock state is not QFT of the rotated payloads");
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(worst < kClosedFormTol, "fidelity deficit " + fmt(worst));
  o.require(seconds < 10.0, "took " + std::to_string(seconds) + " s");
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%d branches over N = 1..4, max fidelity deficit %s, %.2f s", checked,
                  fmt(worst).c_str(), seconds);
    o.detail = buf;
  }
  return o;
}

Outcome criterion_algebra() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const auto d = static_cast<Eigen::Index>(qft(n).dim());
    o.require(max_abs_diff(qft(n).entries().adjoint() * qft(n).entries(), CMatrix::Identity(d, d)) < kAlgebraTol,
              "qft(" + std::to_string(n) + ") not unitary");
  }
  const Complex i(0.0, 1.0);
  CMatrix literal(4, 4);
  literal << 1, 1, 1, 1, 1, i, -1, -i, 1, -1, 1, -1, 1, -i, -1, i;
  o.require(max_abs_diff(qft(2).entries(), literal / 2.0) == 0.0, "two-qubit QFT is not bit-exact");
  const CMatrix composed = kron(hadamard().entries(), CMatrix::Identity(2, 2)) * cnot().entries();
  o.require(max_abs_diff(lock_operator().entries(), composed) < kAlgebraTol, "lock operator differs from H CNOT");
  for (const Channel c : kChannels) {
    const BasisFamily f = basis_family(c);
    CMatrix gram(4, 4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) gram(a, b) = f.members[std::size_t(a)].amplitudes().dot(f.members[std::size_t(b)].amplitudes());
    o.require(max_abs_diff(gram, CMatrix::Identity(4, 4)) < kAlgebraTol, to_string(c) + " family not orthonormal");
  }
  if (o.pass) o.detail = "QFT n = 1..6 unitary, two-qubit QFT exact, lock = H CNOT, 3 families orthonormal";
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> runs{
      {"run", "--protocol", "bell", "--bits", "1001", "--seed", "42", "--format", "json", "--snapshots"},
      {"run", "--protocol", "ghz", "--bits", "0111", "--seed", "42", "--format", "json"},
      {"run", "--protocol", "w", "--bits", "1100", "--seed", "42", "--format", "json", "--lock", "ulock"},
      {"run", "--teleport", "ulock", "--seed", "42", "--format", "json", "--snapshots"},
      {"run", "--teleport", "qft", "--n", "4", "--seed", "42", "--format", "json"},
      {"verify", "theorem", "--protocol", "w", "--format", "json"},
      {"verify", "counterexample", "--format", "json"}};
  for (const auto& args : runs) {
    std::ostringstream a, b, ea, eb;
    cli::run_cli(args, a, ea);
    cli::run_cli(args, b, eb);
    o.require(!a.str().empty() && a.str() == b.str(), "output differs for '" + args[0] + " " + args[1] + "'");
  }
  if (o.pass) o.detail = std::to_string(runs.size()) + " commands repeated with byte-identical JSON";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Bell receiver views are I/4 under the QFT lock", [] { return views_match(Channel::kBell, oracle::bell_view()); }},
      {"2 GHZ receiver views match the four-term closed form", [] { return views_match(Channel::kGhz, oracle::ghz_view()); }},
      {"3 W receiver views match the ten-term closed form", [] { return views_match(Channel::kW, oracle::w_view()); }},
      {"4 dense coding decodes every encoding on every channel", criterion_dense_coding},
      {"5 U(LOCK) leaks b1 to Bob", criterion_counterexample},
      {"6 U(LOCK) teleportation is exact for two receivers", criterion_teleport_ulock},
      {"7 QFT teleportation is exact for N = 1..4", criterion_teleport_qft},
      {"8 algebraic identities", criterion_algebra},
      {"9 identical seeds give identical JSON", criterion_determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
