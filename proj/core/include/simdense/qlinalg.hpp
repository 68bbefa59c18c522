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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "simdense/errors.hpp"

namespace simdense {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Ordered qubit names. The first label is the most significant bit of the
/// amplitude index, so |01> on labels (a, b) is index 1.
using Labels = std::vector<std::string>;

/// Tolerance for comparisons against closed-form states and matrices.
inline constexpr double kClosedFormTol = 1e-10;
/// Tolerance for algebraic identities (unitarity, norm preservation, ...).
inline constexpr double kAlgebraTol = 1e-12;

/// Largest register the library will allocate.
inline constexpr int kMaxQubits = 20;

/// Normalized pure state over a labeled qubit register.
class StateVector {
 public:
  /// Throws InvariantError unless `amplitudes` has length 2^|labels|, is
  /// finite and has unit norm within kClosedFormTol. Labels must be unique.
  StateVector(Labels labels, CVector amplitudes);

  /// Rescales `amplitudes` to unit norm. Throws on a zero vector.
  static StateVector normalized(Labels labels, CVector amplitudes);

  /// Computational basis state; `bits` is a string over {0,1}, leftmost
  /// character for the first label.
  static StateVector basis(Labels labels, std::string_view bits);

  int n_qubits() const { return static_cast<int>(labels_.size()); }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Labels& labels() const { return labels_; }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  /// Position of `label` in the register; throws LabelError if absent.
  int position(std::string_view label) const;
  bool has_label(std::string_view label) const;

  /// Same amplitudes under new names (same count, unique).
  StateVector relabeled(Labels labels) const;

 private:
  Labels labels_;
  CVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace matrix over a labeled
/// register.
class DensityMatrix {
 public:
  /// Validates shape, hermiticity, trace and spectrum within kClosedFormTol.
  DensityMatrix(Labels labels, CMatrix entries);

  static DensityMatrix from_pure(const StateVector& state);

  int n_qubits() const { return static_cast<int>(labels_.size()); }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Labels& labels() const { return labels_; }
  const CMatrix& entries() const { return entries_; }

  int position(std::string_view label) const;

  Complex trace() const { return entries_.trace(); }
  double purity() const;
  double min_eigenvalue() const;

 private:
  Labels labels_;
  CMatrix entries_;
};

/// Square unitary matrix acting on a power-of-two dimension.
class Unitary {
 public:
  /// Throws unless the matrix is square, of power-of-two size, finite and
  /// satisfies U^dagger U = I within kClosedFormTol.
  explicit Unitary(CMatrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  int n_qubits() const;
  const CMatrix& entries() const { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

 private:
  CMatrix entries_;
};

// ---------------------------------------------------------------------------
// Tensor products
// ---------------------------------------------------------------------------

/// Kronecker product; labels are a.labels ++ b.labels and must be disjoint.
StateVector tensor(const StateVector& a, const StateVector& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
Unitary tensor(const Unitary& a, const Unitary& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Matrix product a * b (apply b first).
Unitary compose(const Unitary& a, const Unitary& b);

// ---------------------------------------------------------------------------
// Gate application and register manipulation
// ---------------------------------------------------------------------------

/// Applies `gate` to `targets` (first target = most significant bit of the
/// gate index), identity elsewhere.
StateVector apply(const StateVector& state, const Unitary& gate, std::span<const std::string> targets);
StateVector apply(const StateVector& state, const Unitary& gate, std::initializer_list<std::string> targets);

/// Reorders the register so that its labels become `order`, a permutation of
/// the current labels.
StateVector permute(const StateVector& state, const Labels& order);

/// Labels of `state` not in `targets`, in register order.
Labels complement(const Labels& labels, std::span<const std::string> targets);

/// (<bra|_targets tensor I) |state>, an unnormalized vector over the
/// complement of `targets` in register order.
CVector contract_bra(const StateVector& state, std::span<const std::string> targets, const CVector& bra);

/// Replaces the `targets` part of a product state by `ket`:
/// returns |ket>_targets tensor |rest>_complement laid out in `register_order`.
StateVector embed(const CVector& ket, const Labels& targets, const StateVector& rest, const Labels& register_order);

// ---------------------------------------------------------------------------
// Partial trace
// ---------------------------------------------------------------------------

/// Reduced density matrix on `keep`. The result lists the kept labels in the
/// order they appear in the source register.
DensityMatrix partial_trace(const StateVector& state, std::span<const std::string> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep);
DensityMatrix partial_trace(const StateVector& state, std::initializer_list<std::string> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::string> keep);

// ---------------------------------------------------------------------------
// Comparisons
// ---------------------------------------------------------------------------

Complex inner(const StateVector& a, const StateVector& b);

/// |<a|b>|^2. Labels must match.
double fidelity(const StateVector& a, const StateVector& b);

/// <psi|rho|psi> for a pure reference state on the same labels.
double fidelity(const StateVector& psi, const DensityMatrix& rho);

/// True iff some unit scalar l has ||a - l b|| <= tol. Labels must match.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol);

/// Entrywise max |a_ij - b_ij|; throws DimensionError on shape mismatch.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// max_abs_diff(a, b) <= tol.
bool matrix_close(const DensityMatrix& a, const DensityMatrix& b, double tol);
bool matrix_close(const CMatrix& a, const CMatrix& b, double tol);

/// Re tr(a b).
double trace_product(const DensityMatrix& a, const DensityMatrix& b);

/// (1/2) || a - b ||_1.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Orthogonal projector onto eigenvectors of a Hermitian matrix whose
/// eigenvalues exceed `cutoff`.
CMatrix support_projector(const CMatrix& hermitian, double cutoff);

bool is_power_of_two(std::size_t n);

}  // namespace simdense
