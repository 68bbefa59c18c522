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

#include "simdense/gates.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

namespace simdense {

namespace {

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

/// omega^r for omega = exp(2 pi i / dim), exact on the four axis phases.
Complex root_of_unity(std::size_t r, std::size_t dim) {
  r %= dim;
  if ((4 * r) % dim == 0) {
    switch ((4 * r) / dim) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(dim);
  return {std::cos(angle), std::sin(angle)};
}

std::optional<int> parse_suffix(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  int n = 0;
  const auto digits = name.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return n;
}

}  // namespace

std::vector<EncodedBits> all_bit_pairs() { return {{false, false}, {false, true}, {true, false}, {true, true}}; }

Unitary identity(int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) throw DimensionError("identity needs 0..20 qubits");
  const auto d = Eigen::Index{1} << n_qubits;
  return Unitary(CMatrix::Identity(d, d));
}

Unitary pauli_x() { return Unitary(mat2(0, 1, 1, 0)); }

Unitary pauli_z() { return Unitary(mat2(1, 0, 0, -1)); }

Unitary hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return Unitary(mat2(s, s, s, -s));
}

Unitary cnot() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return Unitary(m);
}

Unitary pauli_encoder(EncodedBits bits) {
  // U(xy) = Z^y X^x
  if (!bits.x && !bits.y) return identity(1);
  if (!bits.x && bits.y) return pauli_z();
  if (bits.x && !bits.y) return pauli_x();
  return Unitary(mat2(0, 1, -1, 0));
}

Unitary qft(int n_qubits) {
  if (n_qubits < 1) throw DimensionError("qft needs at least one qubit");
  if (n_qubits > 12) throw DimensionError("qft is limited to 12 qubits");
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  CMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j < dim; ++j)
      m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = scale * root_of_unity(j * k, dim);
  return Unitary(m);
}

Unitary lock_operator() {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix m(4, 4);
  m << s, 0, 0, s,
       0, s, s, 0,
       s, 0, 0, -s,
       0, s, -s, 0;
  return Unitary(m);
}

Unitary adjoint(const Unitary& u) { return Unitary(u.entries().adjoint()); }

Unitary conjugate(const Unitary& u) { return Unitary(u.entries().conjugate()); }

Unitary gate_by_name(std::string_view name) {
  if (name == "x") return pauli_x();
  if (name == "z") return pauli_z();
  if (name == "h") return hadamard();
  if (name == "cnot") return cnot();
  if (name == "ulock") return lock_operator();
  if (name == "u00") return pauli_encoder({false, false});
  if (name == "u01") return pauli_encoder({false, true});
  if (name == "u10") return pauli_encoder({true, false});
  if (name == "u11") return pauli_encoder({true, true});
  if (auto n = parse_suffix(name, "qftdg")) return adjoint(qft(*n));
  if (auto n = parse_suffix(name, "qft")) return qft(*n);
  if (auto n = parse_suffix(name, "id")) return identity(*n);
  throw InvariantError("unknown gate '" + std::string(name) + "'");
}

std::vector<std::string> gate_names() {
  return {"id<n>", "x", "z", "h", "cnot", "ulock", "qft<n>", "qftdg<n>", "u00", "u01", "u10", "u11"};
}

}  // namespace simdense
