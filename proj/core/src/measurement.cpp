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

#include "simdense/measurement.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace simdense {

namespace {

void check_targets(const StateVector& state, const BasisFamily& family, std::span<const std::string> targets) {
  if (static_cast<int>(targets.size()) != family.ambient_qubits()) {
    throw DimensionError(to_string(family.channel) + " family acts on " + std::to_string(family.ambient_qubits()) +
                         " qubits, got " + std::to_string(targets.size()) + " targets");
  }
  for (const auto& t : targets) state.position(t);
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

struct Contracted {
  std::array<CVector, 4> rest;
  std::array<double, 4> weight{};
  double total = 0.0;
};

Contracted contract_all(const StateVector& state, const BasisFamily& family, std::span<const std::string> targets) {
  check_targets(state, family, targets);
  Contracted c;
  for (std::size_t i = 0; i < 4; ++i) {
    c.rest[i] = contract_bra(state, targets, family.members[i].amplitudes());
    c.weight[i] = c.rest[i].squaredNorm();
    c.total += c.weight[i];
  }
  const double residual = 1.0 - c.total;
  if (residual > kClosedFormTol) {
    throw ProtocolViolation(to_string(family.channel) + " measurement: state has weight " + std::to_string(residual) +
                            " outside the family span");
  }
  return c;
}

MeasurementOutcome make_outcome(const StateVector& state, const BasisFamily& family,
                                std::span<const std::string> targets, const Contracted& c, std::size_t i) {
  const Labels target_labels(targets.begin(), targets.end());
  const Labels rest_labels = complement(state.labels(), targets);
  CVector ket = family.members[i].amplitudes();
  if (rest_labels.empty()) {
    // The whole register is measured; the post state is the member itself
    // (the contraction is a single amplitude carrying only a phase).
    const Complex amp = c.rest[i](0);
    const Complex phase = std::abs(amp) > 0.0 ? amp / std::abs(amp) : Complex(1.0);
    return {EncodedBits::from_index(static_cast<int>(i)), clamp_probability(c.weight[i]),
            permute(StateVector(target_labels, phase * ket), state.labels())};
  }
  StateVector rest = StateVector::normalized(rest_labels, c.rest[i]);
  return {EncodedBits::from_index(static_cast<int>(i)), clamp_probability(c.weight[i]),
          embed(ket, target_labels, rest, state.labels())};
}

}  // namespace

std::vector<MeasurementOutcome> enumerate_branches(const StateVector& state, const BasisFamily& family,
                                                   std::span<const std::string> targets) {
  const Contracted c = contract_all(state, family, targets);
  std::vector<MeasurementOutcome> out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (c.weight[i] > kClosedFormTol) out.push_back(make_outcome(state, family, targets, c, i));
  }
  return out;
}

MeasurementOutcome measure_in_family(const StateVector& state, const BasisFamily& family,
                                     std::span<const std::string> targets, Rng& rng) {
  const Contracted c = contract_all(state, family, targets);
  const double u = rng.uniform() * c.total;
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (c.weight[i] <= kClosedFormTol) continue;
    last = i;
    acc += c.weight[i];
    if (u < acc) return make_outcome(state, family, targets, c, i);
  }
  return make_outcome(state, family, targets, c, last);
}

MeasurementOutcome measure_in_family(const StateVector& state, const BasisFamily& family,
                                     std::span<const std::string> targets, RngSeed seed) {
  Rng rng(seed);
  return measure_in_family(state, family, targets, rng);
}

std::optional<MeasurementOutcome> select_branch(const StateVector& state, const BasisFamily& family,
                                                std::span<const std::string> targets, EncodedBits bits) {
  const Contracted c = contract_all(state, family, targets);
  const auto i = static_cast<std::size_t>(bits.index());
  if (c.weight[i] <= kClosedFormTol) return std::nullopt;
  return make_outcome(state, family, targets, c, i);
}

double span_residual(const StateVector& state, const BasisFamily& family, std::span<const std::string> targets) {
  check_targets(state, family, targets);
  double total = 0.0;
  for (const auto& m : family.members) total += contract_bra(state, targets, m.amplitudes()).squaredNorm();
  return std::max(0.0, 1.0 - total);
}

SupportDistinguisher support_distinguisher(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  if (rho0.dim() != rho1.dim()) throw DimensionError("support distinguisher needs equal dimensions");
  SupportDistinguisher out;
  out.overlap = trace_product(rho0, rho1);
  out.distinguishable = out.overlap <= kClosedFormTol;
  out.projector = support_projector(rho0.entries(), kSupportCutoff);
  return out;
}

double projector_probability(const StateVector& state, const CMatrix& projector, std::span<const std::string> targets) {
  const std::size_t k = targets.size();
  if (projector.rows() != projector.cols() || static_cast<std::size_t>(projector.rows()) != (std::size_t{1} << k)) {
    throw DimensionError("projector does not fit its targets");
  }
  // Bring the targets to the front; the amplitudes then reshape into a
  // (target x rest) matrix whose rows follow the requested target order.
  Labels order(targets.begin(), targets.end());
  const Labels rest = complement(state.labels(), targets);
  order.insert(order.end(), rest.begin(), rest.end());
  const StateVector front = permute(state, order);
  const auto rest_dim = static_cast<Eigen::Index>(state.dim() >> k);
  const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> slices(
      front.amplitudes().data(), projector.rows(), rest_dim);
  return clamp_probability((projector * slices).squaredNorm());
}

bool measure_projector(const StateVector& state, const CMatrix& projector, std::span<const std::string> targets,
                       Rng& rng) {
  return rng.uniform() < projector_probability(state, projector, targets);
}

}  // namespace simdense
