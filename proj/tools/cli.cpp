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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <CLI11.hpp>

#include "simdense/analysis.hpp"
#include "simdense/gates.hpp"
#include "simdense/io.hpp"
#include "simdense/protocols.hpp"
#include "simdense/states.hpp"

namespace simdense::cli {

namespace {

using io::json;

// ---------------------------------------------------------------------------
// Table rendering

std::string fmt_real(double v) {
  if (std::abs(v) < 5e-5) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string fmt_complex(Complex z) {
  const std::string re = fmt_real(z.real());
  if (std::abs(z.imag()) < 5e-5) return re;
  char buf[48];
  if (std::abs(z.real()) < 5e-5) {
    std::snprintf(buf, sizeof(buf), "%.4fi", z.imag());
  } else {
    std::snprintf(buf, sizeof(buf), "%s%+.4fi", re.c_str(), z.imag());
  }
  return buf;
}

std::string join_labels(const Labels& labels) {
  std::string out;
  for (const auto& l : labels) out += l;
  return out;
}

void print_matrix(std::ostream& out, const CMatrix& m, const std::string& indent) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      cells.push_back(fmt_complex(m(r, c)));
      width = std::max(width, cells.back().size());
    }
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const std::string& cell = cells[k++];
      out << (c ? " " : "") << std::string(width - cell.size(), ' ') << cell;
    }
    out << "]\n";
  }
}

std::string bits_str(EncodedBits b) { return std::string("(") + (b.x ? "1" : "0") + "," + (b.y ? "1" : "0") + ")"; }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void print_report_table(std::ostream& out, const LockingReport& r) {
  out << "protocol: " << r.protocol << "  task: " << r.task << "  lock: " << r.lock_used << "\n";
  out << "subsystem    holder    independent  max_pairwise_diff  closed_form  maximally_mixed  recoverable  leaky\n";
  for (const auto& s : r.per_subsystem) {
    std::string recoverable, leaky;
    for (const auto& b : s.recoverable_bits) recoverable += (recoverable.empty() ? "" : ",") + b.bit;
    for (const auto& b : s.leaky_bits) leaky += (leaky.empty() ? "" : ",") + b.bit;
    char line[256];
    std::snprintf(line, sizeof(line), "%-12s %-9s %-12s %-18.3e %-12s %-16s %-12s %s\n", join_labels(s.subsystem).c_str(),
                  s.holder.c_str(), s.independent_of_encoding ? "yes" : "no", s.max_pairwise_diff,
                  s.matches_closed_form ? (*s.matches_closed_form ? "matched" : "MISMATCH") : "n/a",
                  s.maximally_mixed ? "yes" : "no", recoverable.empty() ? "-" : recoverable.c_str(),
                  leaky.empty() ? "-" : leaky.c_str());
    out << line;
  }
  for (const auto& [k, v] : r.metrics) out << "  " << k << " = " << v << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  out << "decode_correct: " << (r.decode_correct ? "yes" : "no") << "  valid_lock: " << (r.valid_lock ? "yes" : "no")
      << "\n";
}

// ---------------------------------------------------------------------------
// Argument helpers

std::pair<EncodedBits, EncodedBits> parse_bits(const std::string& bits) {
  if (bits.size() != 4 || bits.find_first_not_of("01") != std::string::npos) {
    throw UsageError{"--bits must be four characters over {0,1} (b1b2c1c2), got '" + bits + "'"};
  }
  return {{bits[0] == '1', bits[1] == '1'}, {bits[2] == '1', bits[3] == '1'}};
}

Channel channel_or_usage(const std::string& name) {
  try {
    return parse_channel(name);
  } catch (const InvariantError& e) {
    throw UsageError{e.what()};
  }
}

// ---------------------------------------------------------------------------
// run

int run_dense(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const Channel channel = channel_or_usage(*config.channel);
  const auto [bob, charlie] = parse_bits(config.bits);
  LockKind lock{};
  try {
    lock = parse_lock(config.lock);
  } catch (const InvariantError& e) {
    throw UsageError{e.what()};
  }
  const ProtocolTranscript t = run_dense_coding({channel, bob, charlie, lock}, RngSeed{config.seed});

  std::optional<LockingReport> lock_check;
  if (lock != LockKind::kQft) {
    lock_check = classify_locking_unitary(lock_unitary(lock), LockTask::kDenseCoding, channel);
  }

  const bool correct = t.decoded.size() == 2 && t.decoded[0].bits == bob && t.decoded[1].bits == charlie;
  if (config.format == OutputFormat::kJson) {
    json j = io::to_json(t, config.snapshots);
    j["encoded"] = {{"bob", {bob.x ? 1 : 0, bob.y ? 1 : 0}}, {"charlie", {charlie.x ? 1 : 0, charlie.y ? 1 : 0}}};
    j["decoded_correct"] = correct;
    if (lock_check) j["lock_check"] = io::to_json(*lock_check);
    print_json(out, j);
  } else {
    out << "dense coding over " << t.channel << " channel, lock " << t.lock << ", seed " << config.seed << "\n";
    out << "encoded:  Bob " << bits_str(bob) << "  Charlie " << bits_str(charlie) << "\n";
    for (const auto& d : t.decoded) {
      out << "decoded:  " << d.receiver << " " << bits_str(d.bits) << "  p=" << fmt_real(d.probability) << "\n";
    }
    for (const auto& i : t.intercepts) {
      out << "intercept " << i.stage << " " << i.holder << " on " << join_labels(i.rho.labels()) << ":\n";
      print_matrix(out, i.rho.entries(), "  ");
    }
  }
  if (lock_check && !lock_check->valid_lock) {
    std::string leaks;
    for (const auto& s : lock_check->per_subsystem)
      for (const auto& b : s.recoverable_bits) leaks += (leaks.empty() ? "" : ", ") + b.bit;
    err << "warning: lock '" << config.lock << "' is invalid for dense coding; recoverable before unlock: "
        << (leaks.empty() ? "partial information" : leaks) << "\n";
  }
  return correct ? kExitOk : kExitFailed;
}

std::vector<StateVector> default_payloads(int n) {
  const double s = 1.0 / std::sqrt(2.0);
  CVector plus(2);
  plus << s, s;
  return std::vector<StateVector>(static_cast<std::size_t>(n), StateVector({"q"}, plus));
}

int run_teleport(const CliConfig& config, std::ostream& out, std::ostream& err) {
  TeleportScheme scheme{};
  try {
    scheme = parse_scheme(*config.teleport);
  } catch (const InvariantError& e) {
    throw UsageError{e.what()};
  }
  const int n = scheme == TeleportScheme::kUlock2 ? 2 : config.n_receivers;
  if (scheme == TeleportScheme::kUlock2 && config.n_receivers != 2) {
    throw UsageError{"the ulock teleportation scheme has exactly two receivers"};
  }
  if (n < 1 || n > kMaxTeleportReceivers) throw UsageError{"--n must be in 1..6"};

  std::vector<StateVector> payloads = default_payloads(n);
  if (config.states_file) {
    std::vector<std::string> warnings;
    payloads = io::payloads_from_json(io::read_json_file(*config.states_file), warnings);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    if (static_cast<int>(payloads.size()) != n) {
      throw UsageError{"--states lists " + std::to_string(payloads.size()) + " payloads for " + std::to_string(n) +
                       " receivers"};
    }
  }
  const TeleportInput input{scheme, payloads, n};
  const ProtocolTranscript t = run_teleportation(input, RngSeed{config.seed});

  bool ok = true;
  for (const auto& r : t.recovered) ok = ok && std::abs(r.fidelity - 1.0) <= kClosedFormTol;
  if (config.format == OutputFormat::kJson) {
    json j = io::to_json(t, config.snapshots);
    j["all_fidelities_one"] = ok;
    print_json(out, j);
  } else {
    out << "teleportation, lock " << t.lock << ", " << n << " receiver(s), seed " << config.seed << "\n";
    for (const auto& m : t.messages) out << "bell outcome: " << m.receiver << " " << bits_str(m.bits) << "\n";
    out << "branch probability: " << t.branch_probability << "\n";
    for (const auto& r : t.recovered) {
      char line[128];
      std::snprintf(line, sizeof(line), "recovered: %-8s fidelity %.10f\n", r.receiver.c_str(), r.fidelity);
      out << line;
    }
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
  CliConfig config;
  CLI::App app{"Simultaneous dense coding and teleportation simulator", "simdense"};
  app.require_subcommand(1);

  std::string format = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };

  CLI::App* run = app.add_subcommand("run", "Run a protocol");
  run->add_option("--protocol", config.channel, "Dense coding channel: bell, ghz, w");
  run->add_option("--bits", config.bits, "Encoded bits b1b2c1c2")->default_val("0000");
  run->add_option("--lock", config.lock, "Locking operator: qft or ulock")->default_val("qft");
  run->add_option("--teleport", config.teleport, "Teleportation scheme: qft or ulock");
  run->add_option("--n", config.n_receivers, "Teleportation receivers (qft: 1..6)")->default_val(2);
  run->add_option("--states", config.states_file, "JSON payload list for teleportation");
  run->add_option("--seed", config.seed, "RNG seed")->default_val(0);
  run->add_flag("--snapshots", config.snapshots, "Include state snapshots in JSON output");
  add_format(run);

  CLI::App* verify = app.add_subcommand("verify", "Verify locking claims");
  verify->require_subcommand(1);
  CLI::App* theorem = verify->add_subcommand("theorem", "Receiver views under the QFT lock");
  theorem->add_option("--protocol", config.channel, "Channel: bell, ghz, w")->required();
  add_format(theorem);
  CLI::App* counter = verify->add_subcommand("counterexample", "U(LOCK) leaks in dense coding");
  add_format(counter);
  CLI::App* lock = verify->add_subcommand("lock", "Classify a two-qubit locking unitary");
  lock->add_option("--matrix", config.matrix_file, "JSON matrix file");
  lock->add_option("--gate", config.gate, "Named gate instead of a matrix file");
  lock->add_option("--task", config.task, "dense_coding or teleportation")->default_val("dense_coding");
  lock->add_option("--protocol", config.channel, "Channel: bell, ghz, w (default bell)");
  add_format(lock);

  CLI::App* dump_gate = app.add_subcommand("dump-gate", "Print a gate matrix");
  dump_gate->add_option("name", config.gate, "Gate name (id<n>, x, z, h, cnot, ulock, qft<n>, qftdg<n>, u00..u11)")
      ->required();
  add_format(dump_gate);

  CLI::App* dump_state = app.add_subcommand("dump-state", "Print a family member or initial state");
  dump_state->add_option("--family", config.family, "bell, ghz or w");
  std::string member_bits = "00";
  dump_state->add_option("--bits", member_bits, "Member label xy");
  dump_state->add_option("--initial", config.initial, "Initial two-copy state of a channel");
  add_format(dump_state);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError{std::string(e.what()) + "\n" + app.help()};
  }

  config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kTable;
  if (run->parsed()) {
    config.subcommand = "run";
    if (config.channel.has_value() == config.teleport.has_value()) {
      throw UsageError{"run needs exactly one of --protocol or --teleport"};
    }
  } else if (verify->parsed()) {
    config.subcommand = "verify";
    if (theorem->parsed()) config.verify_target = "theorem";
    if (counter->parsed()) config.verify_target = "counterexample";
    if (lock->parsed()) {
      config.verify_target = "lock";
      if (config.matrix_file.has_value() == config.gate.has_value()) {
        throw UsageError{"verify lock needs exactly one of --matrix or --gate"};
      }
    }
  } else if (dump_gate->parsed()) {
    config.subcommand = "dump-gate";
  } else if (dump_state->parsed()) {
    config.subcommand = "dump-state";
    config.bits = member_bits;
    if (config.family.has_value() == config.initial.has_value()) {
      throw UsageError{"dump-state needs exactly one of --family or --initial"};
    }
  }
  return config;
}

int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.teleport) return run_teleport(config, out, err);
  return run_dense(config, out, err);
}

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  LockingReport report;
  if (config.verify_target == "theorem") {
    report = verify_theorem(channel_or_usage(*config.channel));
  } else if (config.verify_target == "counterexample") {
    report = verify_counterexample();
  } else if (config.verify_target == "lock") {
    LockTask task{};
    try {
      task = parse_task(config.task);
    } catch (const InvariantError& e) {
      throw UsageError{e.what()};
    }
    const Channel channel = config.channel ? channel_or_usage(*config.channel) : Channel::kBell;
    std::optional<Unitary> u;
    try {
      u = config.gate ? gate_by_name(*config.gate) : io::unitary_from_json(io::read_json_file(*config.matrix_file));
    } catch (const Error& e) {
      throw UsageError{e.what()};
    }
    if (u->dim() != 4) throw UsageError{"a locking operator must be 4x4"};
    if (task == LockTask::kTeleportation && channel != Channel::kBell) {
      throw UsageError{"teleportation is defined over bell pairs only"};
    }
    report = classify_locking_unitary(*u, task, channel);
    report.lock_used = config.gate ? *config.gate : *config.matrix_file;
  } else {
    throw UsageError{"unknown verify target"};
  }

  if (config.format == OutputFormat::kJson) {
    print_json(out, io::to_json(report));
  } else {
    print_report_table(out, report);
    out << (report.passed ? "PASS" : "FAIL") << "\n";
  }
  return report.passed ? kExitOk : kExitFailed;
}

int cmd_dump_gate(const CliConfig& config, std::ostream& out, std::ostream& /*err*/) {
  Unitary u = [&] {
    try {
      return gate_by_name(*config.gate);
    } catch (const Error& e) {
      throw UsageError{e.what()};
    }
  }();
  if (config.format == OutputFormat::kJson) {
    print_json(out, io::to_json(u));
  } else {
    out << *config.gate << " (" << u.dim() << "x" << u.dim() << ")\n";
    print_matrix(out, u.entries(), "  ");
  }
  return kExitOk;
}

int cmd_dump_state(const CliConfig& config, std::ostream& out, std::ostream& /*err*/) {
  std::optional<StateVector> state;
  if (config.initial) {
    state = initial_state(channel_or_usage(*config.initial));
  } else {
    const Channel channel = channel_or_usage(*config.family);
    if (config.bits.size() != 2 || config.bits.find_first_not_of("01") != std::string::npos) {
      throw UsageError{"--bits for dump-state must be two characters over {0,1}"};
    }
    const EncodedBits bits{config.bits[0] == '1', config.bits[1] == '1'};
    state = family_member(channel, bits, channel == Channel::kBell ? Labels{"q0", "q1"} : Labels{"q0", "q1", "q2"});
  }
  if (config.format == OutputFormat::kJson) {
    print_json(out, io::to_json(*state));
  } else {
    out << "labels: " << join_labels(state->labels()) << "\n";
    for (std::size_t i = 0; i < state->dim(); ++i) {
      if (std::abs((*state)[i]) < 5e-5) continue;
      std::string ket;
      for (int b = state->n_qubits() - 1; b >= 0; --b) ket += ((i >> b) & 1U) ? '1' : '0';
      out << "  |" << ket << ">  " << fmt_complex((*state)[i]) << "\n";
    }
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const CliConfig config = parse_args(args);
    if (config.subcommand == "run") return cmd_run(config, out, err);
    if (config.subcommand == "verify") return cmd_verify(config, out, err);
    if (config.subcommand == "dump-gate") return cmd_dump_gate(config, out, err);
    if (config.subcommand == "dump-state") return cmd_dump_state(config, out, err);
    throw UsageError{"unknown subcommand"};
  } catch (const UsageError& e) {
    err << e.message << "\n";
    return kExitUsage;
  } catch (const ProtocolViolation& e) {
    err << "protocol violation: " << e.what() << "\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace simdense::cli
