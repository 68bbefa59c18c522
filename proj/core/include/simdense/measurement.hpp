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
#include <random>
#include <span>
#include <string>
#include <vector>

#include "simdense/qlinalg.hpp"
#include "simdense/states.hpp"

namespace simdense {

struct RngSeed {
  std::uint64_t value = 0;
};

/// Seeded mt19937_64. uniform() is built from the raw 64-bit output so that
/// draws do not depend on the standard library's distribution code.
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(seed.value) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Eigenvalue cutoff deciding the rank of a support projector.
inline constexpr double kSupportCutoff = 1e-9;

struct MeasurementOutcome {
  EncodedBits bits;      // member label (x, y)
  double probability;    // clamped to [0, 1]
  StateVector post_state;  // collapsed and renormalized, full register

  int index() const { return bits.index(); }
};

/// All outcomes with probability above kClosedFormTol, in member order.
/// Throws ProtocolViolation when the targets carry more than kClosedFormTol
/// weight outside the family's span (possible for GHZ and W families).
std::vector<MeasurementOutcome> enumerate_branches(const StateVector& state, const BasisFamily& family,
                                                   std::span<const std::string> targets);

/// Samples one branch with Born probabilities.
MeasurementOutcome measure_in_family(const StateVector& state, const BasisFamily& family,
                                     std::span<const std::string> targets, Rng& rng);
MeasurementOutcome measure_in_family(const StateVector& state, const BasisFamily& family,
                                     std::span<const std::string> targets, RngSeed seed);

/// The branch labelled `bits`, or nullopt when its probability is at most
/// kClosedFormTol.
std::optional<MeasurementOutcome> select_branch(const StateVector& state, const BasisFamily& family,
                                                std::span<const std::string> targets, EncodedBits bits);

/// Weight of `state` outside the span of `family` on `targets`.
double span_residual(const StateVector& state, const BasisFamily& family, std::span<const std::string> targets);

struct SupportDistinguisher {
  bool distinguishable = false;
  double overlap = 0.0;  // tr(rho0 rho1)
  CMatrix projector;     // onto the support of rho0
};

/// Decides whether two states have orthogonal supports; if so, {P, I - P}
/// with P the support projector of rho0 identifies the state with certainty.
SupportDistinguisher support_distinguisher(const DensityMatrix& rho0, const DensityMatrix& rho1);

/// ||(P tensor I)|state>||^2 for a projector on `targets`.
double projector_probability(const StateVector& state, const CMatrix& projector, std::span<const std::string> targets);

/// Samples the two-outcome measurement {P, I - P}; true means P clicked.
bool measure_projector(const StateVector& state, const CMatrix& projector, std::span<const std::string> targets,
                       Rng& rng);

}  // namespace simdense
