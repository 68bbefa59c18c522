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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "simdense/errors.hpp"
#include "simdense/gates.hpp"
#include "simdense/io.hpp"
#include "simdense/states.hpp"
#include "support.hpp"

using namespace simdense;
using simdense::io::json;

#ifndef SIMDENSE_GOLDEN_DIR
#error "SIMDENSE_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

std::string golden(const std::string& name) { return std::string(SIMDENSE_GOLDEN_DIR) + "/" + name; }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("matrix JSON round trip") {
  simdense::testing::Gen gen(61);
  const StateVector s = gen.state({"x", "y"});
  const StateVector back = io::state_from_json(io::to_json(s));
  CHECK(back.labels() == s.labels());
  CHECK(max_abs_diff(back.amplitudes(), s.amplitudes()) == 0.0);
  const Unitary u = gen.unitary(2);
  CHECK(max_abs_diff(io::unitary_from_json(io::to_json(u)).entries(), u.entries()) == 0.0);
  const json j = io::to_json(DensityMatrix::from_pure(s));
  CHECK(j["shape"] == json::array({4, 4}));
}

TEST_CASE("golden gate and state files") {
  CHECK(max_abs_diff(io::unitary_from_json(io::read_json_file(golden("qft2.json"))).entries(), qft(2).entries()) <
        kAlgebraTol);
  const StateVector w11 = io::state_from_json(io::read_json_file(golden("w11.json")));
  CHECK(max_abs_diff(w11.amplitudes(), w({true, true}).amplitudes()) < kAlgebraTol);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(io::matrix_from_json(json{{"shape", {2, 2}}}), InvariantError);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"shape", {1, 2}}, {"re", {{1, 0}}}, {"im", {{0}}}}), InvariantError);
  CHECK_THROWS_AS(io::state_from_json(io::to_json(qft(1))), InvariantError);
  CHECK_THROWS_AS(io::read_json_file(golden("missing.json")), Error);
  std::vector<std::string> warnings;
  CHECK_THROWS_AS(io::payloads_from_json(json{{"re", 1}}, warnings), InvariantError);
  CHECK_THROWS_AS(io::payloads_from_json(json::array({json::array({1})}), warnings), InvariantError);
}

TEST_CASE("payload files are normalized with a warning") {
  std::vector<std::string> warnings;
  const auto ok = io::payloads_from_json(io::read_json_file(golden("payloads.json")), warnings);
  CHECK(ok.size() == 2);
  CHECK(warnings.empty());
  CHECK(ok[1][1] == Complex(0.0, 0.8));
  const auto fixed = io::payloads_from_json(io::read_json_file(golden("payloads_unnormalized.json")), warnings);
  CHECK(warnings.size() == 1);
  CHECK(fixed[0][0].real() == doctest::Approx(0.6));
}

TEST_CASE("cli: dense coding runs exit zero") {
  for (const std::string p : {"bell", "ghz", "w"}) {
    const CliResult r = invoke({"run", "--protocol", p, "--bits", "1011", "--seed", "9"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("Bob (1,0)") != std::string::npos);
    CHECK(r.out.find("-0.0000") == std::string::npos);
  }
}

TEST_CASE("cli: U(LOCK) dense coding warns about leaked bits") {
  const CliResult r = invoke({"run", "--protocol", "bell", "--lock", "ulock"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.err.find("b1") != std::string::npos);
  CHECK(r.err.find("c2") != std::string::npos);
}

TEST_CASE("cli: teleportation runs") {
  CHECK(invoke({"run", "--teleport", "qft", "--n", "3", "--seed", "2"}).code == cli::kExitOk);
  CHECK(invoke({"run", "--teleport", "ulock"}).code == cli::kExitOk);
  const CliResult with_file = invoke({"run", "--teleport", "qft", "--states", golden("payloads.json"), "--format", "json"});
  CHECK(with_file.code == cli::kExitOk);
  const json j = json::parse(with_file.out);
  CHECK(j["all_fidelities_one"] == true);
  const CliResult renorm = invoke({"run", "--teleport", "qft", "--n", "1", "--states", golden("payloads_unnormalized.json")});
  CHECK(renorm.code == cli::kExitOk);
  CHECK(renorm.err.find("renormalized") != std::string::npos);
}

TEST_CASE("cli: verify subcommands") {
  CHECK(invoke({"verify", "theorem", "--protocol", "bell"}).code == cli::kExitOk);
  const CliResult ghz = invoke({"verify", "theorem", "--protocol", "ghz"});
  CHECK(ghz.code == cli::kExitOk);
  CHECK(ghz.out.find("matched") != std::string::npos);
  CHECK(ghz.out.find("PASS") != std::string::npos);
  CHECK(invoke({"verify", "counterexample"}).code == cli::kExitOk);
  const CliResult id = invoke({"verify", "lock", "--matrix", golden("id4.json"), "--task", "dense_coding"});
  CHECK(id.code == cli::kExitFailed);
  CHECK(id.out.find("FAIL") != std::string::npos);
  CHECK(invoke({"verify", "lock", "--gate", "qft2", "--task", "teleportation"}).code == cli::kExitOk);
  CHECK(invoke({"verify", "lock", "--matrix", golden("qft2.json"), "--format", "json"}).code == cli::kExitOk);
}

TEST_CASE("cli: dump verbs emit loadable JSON") {
  const CliResult g = invoke({"dump-gate", "qft2", "--format", "json"});
  REQUIRE(g.code == cli::kExitOk);
  CHECK(max_abs_diff(io::unitary_from_json(json::parse(g.out)).entries(), qft(2).entries()) == 0.0);
  const CliResult s = invoke({"dump-state", "--family", "ghz", "--bits", "10", "--format", "json"});
  REQUIRE(s.code == cli::kExitOk);
  CHECK(max_abs_diff(io::state_from_json(json::parse(s.out)).amplitudes(), ghz({true, false}).amplitudes()) == 0.0);
  CHECK(invoke({"dump-state", "--initial", "w"}).code == cli::kExitOk);
  CHECK(invoke({"dump-gate", "u11"}).out.find("-1.0000") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"run"}).code == cli::kExitUsage);
  CHECK(invoke({"run", "--protocol", "bell", "--teleport", "qft"}).code == cli::kExitUsage);
  CHECK(invoke({"run", "--protocol", "bell", "--bits", "012"}).code == cli::kExitUsage);
  CHECK(invoke({"run", "--protocol", "epr"}).code == cli::kExitUsage);
  CHECK(invoke({"run", "--teleport", "qft", "--n", "7"}).code == cli::kExitUsage);
  CHECK(invoke({"run", "--teleport", "ulock", "--n", "3"}).code == cli::kExitUsage);
  CHECK(invoke({"run", "--protocol", "bell", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "lock"}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "lock", "--gate", "qft3"}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "lock", "--gate", "qft2", "--task", "teleportation", "--protocol", "w"}).code ==
        cli::kExitUsage);
  CHECK(invoke({"dump-gate", "nope"}).code == cli::kExitUsage);
  CHECK(invoke({"dump-state"}).code == cli::kExitUsage);
  CHECK(invoke({"dump-state", "--family", "w", "--bits", "1"}).code == cli::kExitUsage);
}

TEST_CASE("cli: identical seeds give byte-identical JSON") {
  const std::vector<std::vector<std::string>> runs{
      {"run", "--protocol", "w", "--bits", "0110", "--seed", "17", "--format", "json", "--snapshots"},
      {"run", "--teleport", "qft", "--n", "3", "--seed", "17", "--format", "json", "--snapshots"},
      {"run", "--teleport", "ulock", "--seed", "5", "--format", "json"},
      {"verify", "counterexample", "--format", "json"}};
  for (const auto& args : runs) {
    const CliResult a = invoke(args);
    const CliResult b = invoke(args);
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}
