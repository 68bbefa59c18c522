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

// Test-only generators and brute-force oracles. Nothing here calls into the
// register machinery under test; index arithmetic is spelled out by hand.

#pragma once

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "simdense/qlinalg.hpp"

namespace simdense::testing {

/// Seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  CVector gaussian_vector(std::size_t dim) {
    CVector v(static_cast<Eigen::Index>(dim));
    for (auto& z : v) z = Complex(normal(), normal());
    return v;
  }

  StateVector state(const Labels& labels) {
    return StateVector::normalized(labels, gaussian_vector(std::size_t{1} << labels.size()));
  }

  StateVector qubit() { return state({"q"}); }

  /// Haar-ish unitary from the QR factor of a Ginibre matrix.
  Unitary unitary(int n_qubits) {
    const Eigen::Index d = Eigen::Index{1} << n_qubits;
    CMatrix g(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) g(r, c) = Complex(normal(), normal());
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
    return Unitary(q);
  }

  DensityMatrix density(const Labels& labels, int rank) {
    const Eigen::Index d = Eigen::Index{1} << labels.size();
    CMatrix a(d, rank);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < rank; ++c) a(r, c) = Complex(normal(), normal());
    CMatrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(labels, rho);
  }

  /// Random subset of `labels` of size k, in random order.
  Labels pick(const Labels& labels, std::size_t k) {
    Labels pool = labels;
    std::shuffle(pool.begin(), pool.end(), engine_);
    pool.resize(k);
    return pool;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline Labels qubit_labels(int n, const std::string& prefix = "q") {
  Labels out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline int bit_of(std::size_t index, int position, int n_qubits) {
  return static_cast<int>((index >> (n_qubits - 1 - position)) & 1U);
}

inline int find(const Labels& labels, const std::string& name) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<int>(i);
  return -1;
}

/// Full 2^n x 2^n operator of `gate` acting on `targets`, built entry by entry.
inline CMatrix full_operator(const Labels& labels, const CMatrix& gate, const Labels& targets) {
  const int n = static_cast<int>(labels.size());
  const int k = static_cast<int>(targets.size());
  const std::size_t dim = std::size_t{1} << n;
  std::vector<int> pos;
  for (const auto& t : targets) pos.push_back(find(labels, t));
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      bool rest_equal = true;
      for (int q = 0; q < n && rest_equal; ++q) {
        if (std::find(pos.begin(), pos.end(), q) != pos.end()) continue;
        rest_equal = bit_of(row, q, n) == bit_of(col, q, n);
      }
      if (!rest_equal) continue;
      std::size_t sub_r = 0, sub_c = 0;
      for (int t = 0; t < k; ++t) {
        sub_r = (sub_r << 1) | static_cast<std::size_t>(bit_of(row, pos[static_cast<std::size_t>(t)], n));
        sub_c = (sub_c << 1) | static_cast<std::size_t>(bit_of(col, pos[static_cast<std::size_t>(t)], n));
      }
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          gate(static_cast<Eigen::Index>(sub_r), static_cast<Eigen::Index>(sub_c));
    }
  }
  return out;
}

/// rho_keep(a, b) = sum_r psi(a, r) conj(psi(b, r)), with `keep` in the given order.
inline CMatrix brute_partial_trace(const Labels& labels, const CVector& psi, const Labels& keep) {
  const int n = static_cast<int>(labels.size());
  const int k = static_cast<int>(keep.size());
  const std::size_t dim = std::size_t{1} << n;
  std::vector<int> pos;
  for (const auto& t : keep) pos.push_back(find(labels, t));
  auto keep_index = [&](std::size_t i) {
    std::size_t s = 0;
    for (int t = 0; t < k; ++t) s = (s << 1) | static_cast<std::size_t>(bit_of(i, pos[static_cast<std::size_t>(t)], n));
    return s;
  };
  auto rest_index = [&](std::size_t i) {
    std::size_t s = 0;
    for (int q = 0; q < n; ++q) {
      if (std::find(pos.begin(), pos.end(), q) != pos.end()) continue;
      s = (s << 1) | static_cast<std::size_t>(bit_of(i, q, n));
    }
    return s;
  };
  const Eigen::Index kd = Eigen::Index{1} << k;
  CMatrix out = CMatrix::Zero(kd, kd);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (rest_index(i) == rest_index(j)) {
        out(static_cast<Eigen::Index>(keep_index(i)), static_cast<Eigen::Index>(keep_index(j))) +=
            psi(static_cast<Eigen::Index>(i)) * std::conj(psi(static_cast<Eigen::Index>(j)));
      }
  return out;
}

/// Ket |bits> as a column vector over the given number of qubits.
inline CVector ket(const std::string& bits) {
  CVector v = CVector::Zero(Eigen::Index{1} << bits.size());
  v(static_cast<Eigen::Index>(std::stoul(bits, nullptr, 2))) = 1.0;
  return v;
}

inline CMatrix outer(const std::string& a, const std::string& b) { return ket(a) * ket(b).adjoint(); }

// Closed-form receiver views, written out entry by entry.

inline CMatrix bell_view() { return CMatrix::Identity(4, 4) / 4.0; }

inline CMatrix ghz_view() {
  return (outer("000", "000") + outer("011", "011") + outer("100", "100") + outer("111", "111")) / 4.0;
}

inline CMatrix w_view() {
  return (2.0 * outer("000", "000") + outer("001", "001") + outer("001", "010") + outer("010", "001") +
          outer("010", "010") + 2.0 * outer("100", "100") + outer("101", "101") + outer("101", "110") +
          outer("110", "101") + outer("110", "110")) /
         8.0;
}

/// Bob's view of the U(LOCK) dense coding run for a given b1.
inline CMatrix ulock_view(bool b1) {
  CMatrix m(4, 4);
  if (!b1) {
    m << 1, 0, 1, 0, 0, 1, 0, -1, 1, 0, 1, 0, 0, -1, 0, 1;
  } else {
    m << 1, 0, -1, 0, 0, 1, 0, 1, -1, 0, 1, 0, 0, 1, 0, 1;
  }
  return m / 4.0;
}

}  // namespace simdense::testing
