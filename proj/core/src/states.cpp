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

#include "simdense/states.hpp"

#include <cmath>

namespace simdense {

namespace {

std::size_t bits_to_index(std::initializer_list<bool> bits) {
  std::size_t out = 0;
  for (bool b : bits) out = (out << 1) | (b ? 1U : 0U);
  return out;
}

}  // namespace

std::string to_string(Channel channel) {
  switch (channel) {
    case Channel::kBell: return "bell";
    case Channel::kGhz: return "ghz";
    case Channel::kW: return "w";
  }
  return "?";
}

Channel parse_channel(std::string_view name) {
  if (name == "bell") return Channel::kBell;
  if (name == "ghz") return Channel::kGhz;
  if (name == "w") return Channel::kW;
  throw InvariantError("unknown channel '" + std::string(name) + "' (expected bell, ghz or w)");
}

int qubits_per_copy(Channel channel) { return channel == Channel::kBell ? 2 : 3; }

StateVector phi(EncodedBits bits, Labels labels) {
  const bool x = bits.x;
  const double s = 1.0 / std::sqrt(2.0);
  CVector amps = CVector::Zero(4);
  amps(static_cast<Eigen::Index>(bits_to_index({false, x}))) += s;
  amps(static_cast<Eigen::Index>(bits_to_index({true, !x}))) += bits.y ? -s : s;
  return StateVector(std::move(labels), std::move(amps));
}

StateVector ghz(EncodedBits bits, Labels labels) {
  const bool x = bits.x;
  const double s = 1.0 / std::sqrt(2.0);
  CVector amps = CVector::Zero(8);
  amps(static_cast<Eigen::Index>(bits_to_index({false, x, x}))) += s;
  amps(static_cast<Eigen::Index>(bits_to_index({true, !x, !x}))) += bits.y ? -s : s;
  return StateVector(std::move(labels), std::move(amps));
}

StateVector w(EncodedBits bits, Labels labels) {
  const bool x = bits.x;
  const double r = std::sqrt(2.0) / 2.0;
  CVector amps = CVector::Zero(8);
  amps(static_cast<Eigen::Index>(bits_to_index({x, true, false}))) += 0.5;
  amps(static_cast<Eigen::Index>(bits_to_index({x, false, true}))) += 0.5;
  amps(static_cast<Eigen::Index>(bits_to_index({!x, false, false}))) += bits.y ? -r : r;
  return StateVector(std::move(labels), std::move(amps));
}

StateVector family_member(Channel channel, EncodedBits bits, Labels labels) {
  switch (channel) {
    case Channel::kBell: return phi(bits, std::move(labels));
    case Channel::kGhz: return ghz(bits, std::move(labels));
    case Channel::kW: return w(bits, std::move(labels));
  }
  throw InvariantError("unknown channel");
}

CMatrix BasisFamily::span_projector() const {
  const auto d = static_cast<Eigen::Index>(ambient_dim());
  CMatrix p = CMatrix::Zero(d, d);
  for (const auto& m : members) p += m.amplitudes() * m.amplitudes().adjoint();
  return p;
}

BasisFamily basis_family(Channel channel) {
  const Labels labels = channel == Channel::kBell ? Labels{"q0", "q1"} : Labels{"q0", "q1", "q2"};
  auto make = [&](int i) { return family_member(channel, EncodedBits::from_index(i), labels); };
  return BasisFamily{channel, {make(0), make(1), make(2), make(3)}};
}

Labels bob_labels(Channel channel) {
  return channel == Channel::kBell ? Labels{"A1", "B"} : Labels{"A1", "B1", "B2"};
}

Labels charlie_labels(Channel channel) {
  return channel == Channel::kBell ? Labels{"A2", "C"} : Labels{"A2", "C1", "C2"};
}

StateVector initial_state(Channel channel) {
  return tensor(family_member(channel, {}, bob_labels(channel)), family_member(channel, {}, charlie_labels(channel)));
}

}  // namespace simdense
