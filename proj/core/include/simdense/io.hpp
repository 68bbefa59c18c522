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

// JSON encodings.
//
// Matrices and vectors share one layout:
//
//   {"labels": [...], "shape": [rows, cols], "re": [[...], ...], "im": [[...], ...]}
//
// with row-major nested arrays. A state vector is a column, shape [2^n, 1].
// Gates carry an empty label list.

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "simdense/analysis.hpp"
#include "simdense/protocols.hpp"
#include "simdense/qlinalg.hpp"

namespace simdense::io {

using nlohmann::json;

json matrix_to_json(const CMatrix& m, const Labels& labels);
json to_json(const StateVector& state);
json to_json(const DensityMatrix& rho);
json to_json(const Unitary& u);

/// Parses the matrix layout; throws InvariantError on malformed input.
CMatrix matrix_from_json(const json& j);
Labels labels_from_json(const json& j);

/// Parses a square matrix and validates it as a unitary.
Unitary unitary_from_json(const json& j);

StateVector state_from_json(const json& j);

/// Payload list: [[{"re":..,"im":..}, {"re":..,"im":..}], ...]. Each pair is
/// renormalized; a warning is appended when the norm was off by more than
/// 1e-6.
std::vector<StateVector> payloads_from_json(const json& j, std::vector<std::string>& warnings);

json to_json(const ProtocolTranscript& t, bool include_snapshots);
json to_json(const LockingReport& report);
json to_json(const std::vector<DenseCodingBranch>& branches);

/// Reads a whole file as JSON; throws Error if it cannot be opened or parsed.
json read_json_file(const std::string& path);

}  // namespace simdense::io
