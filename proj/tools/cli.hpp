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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace simdense::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { kTable, kJson };

struct CliConfig {
  std::string subcommand;  // run, verify, dump-gate, dump-state
  std::string verify_target;  // theorem, counterexample, lock
  std::optional<std::string> channel;
  std::string bits = "0000";  // b1 b2 c1 c2
  std::string lock = "qft";
  std::optional<std::string> teleport;  // qft or ulock
  int n_receivers = 2;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kTable;
  bool snapshots = false;
  std::optional<std::string> states_file;
  std::optional<std::string> matrix_file;
  std::optional<std::string> gate;
  std::string task = "dense_coding";
  std::optional<std::string> family;
  std::optional<std::string> initial;
};

/// Thrown for malformed arguments; maps to exit code 2.
struct UsageError {
  std::string message;
};

/// Parses argv-style arguments (without the program name). Throws UsageError.
CliConfig parse_args(const std::vector<std::string>& args);

int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_dump_gate(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_dump_state(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses and dispatches; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simdense::cli
