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

#include "simdense/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Eigenvalues>

namespace simdense {

namespace {

std::string join(const Labels& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ",";
    out += l;
  }
  return out;
}

void check_unique(const Labels& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw LabelError("empty qubit label");
    if (!seen.insert(l).second) throw LabelError("duplicate qubit label '" + l + "'");
  }
}

void check_register_size(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxQubits)) {
    throw DimensionError("register of " + std::to_string(n) + " qubits exceeds the limit of " +
                         std::to_string(kMaxQubits));
  }
}

int find_label(const Labels& labels, std::string_view label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw LabelError("unknown qubit label '" + std::string(label) + "' (register: " + join(labels) + ")");
  }
  return static_cast<int>(it - labels.begin());
}

template <class Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.derived().data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

/// Bit shift of each listed label, first label = most significant.
std::vector<int> target_shifts(const Labels& labels, std::span<const std::string> targets) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> shifts;
  shifts.reserve(targets.size());
  std::set<std::string> seen;
  for (const auto& t : targets) {
    if (!seen.insert(t).second) throw LabelError("target label '" + t + "' listed twice");
    shifts.push_back(n - 1 - find_label(labels, t));
  }
  return shifts;
}

/// Splits a global index into (selected bits, remaining bits), each packed
/// most-significant first in the order the shifts are given.
struct IndexSplit {
  std::vector<int> selected;  // shifts, in selection order
  std::vector<int> rest;      // shifts, in register order

  std::size_t pack(std::size_t index, const std::vector<int>& shifts) const {
    std::size_t out = 0;
    for (int s : shifts) out = (out << 1) | ((index >> s) & 1U);
    return out;
  }
  std::size_t compose(std::size_t sel, std::size_t rem) const {
    std::size_t out = 0;
    const std::size_t ks = selected.size();
    for (std::size_t i = 0; i < ks; ++i) out |= ((sel >> (ks - 1 - i)) & 1U) << selected[i];
    const std::size_t kr = rest.size();
    for (std::size_t i = 0; i < kr; ++i) out |= ((rem >> (kr - 1 - i)) & 1U) << rest[i];
    return out;
  }
};

IndexSplit split_for(const Labels& labels, std::span<const std::string> selected) {
  IndexSplit split;
  split.selected = target_shifts(labels, selected);
  const int n = static_cast<int>(labels.size());
  for (int p = 0; p < n; ++p) {
    const int s = n - 1 - p;
    if (std::find(split.selected.begin(), split.selected.end(), s) == split.selected.end()) split.rest.push_back(s);
  }
  return split;
}

/// `keep` reordered to follow the register order of `labels`.
Labels in_register_order(const Labels& labels, std::span<const std::string> keep) {
  if (keep.empty()) throw LabelError("partial trace needs at least one kept qubit");
  std::set<std::string> wanted;
  for (const auto& k : keep) {
    find_label(labels, k);
    if (!wanted.insert(k).second) throw LabelError("kept label '" + k + "' listed twice");
  }
  Labels out;
  for (const auto& l : labels)
    if (wanted.count(l)) out.push_back(l);
  return out;
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(Labels labels, CVector amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
  check_unique(labels_);
  check_register_size(labels_.size());
  if (static_cast<std::size_t>(amplitudes_.size()) != (std::size_t{1} << labels_.size())) {
    throw DimensionError("state of " + std::to_string(labels_.size()) + " qubits needs " +
                         std::to_string(std::size_t{1} << labels_.size()) + " amplitudes, got " +
                         std::to_string(amplitudes_.size()));
  }
  if (!all_finite(amplitudes_)) throw InvariantError("state amplitudes must be finite");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kClosedFormTol) {
    throw InvariantError("state vector is not normalized (norm " + std::to_string(norm) + ")");
  }
}

StateVector StateVector::normalized(Labels labels, CVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvariantError("cannot normalize a zero or non-finite vector");
  amplitudes /= norm;
  return StateVector(std::move(labels), std::move(amplitudes));
}

StateVector StateVector::basis(Labels labels, std::string_view bits) {
  if (bits.size() != labels.size()) {
    throw DimensionError("basis string '" + std::string(bits) + "' does not match " + std::to_string(labels.size()) +
                         " labels");
  }
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvariantError("basis string must be over {0,1}: '" + std::string(bits) + "'");
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  check_register_size(labels.size());
  CVector amps = CVector::Zero(Eigen::Index{1} << labels.size());
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(labels), std::move(amps));
}

int StateVector::position(std::string_view label) const { return find_label(labels_, label); }

bool StateVector::has_label(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

StateVector StateVector::relabeled(Labels labels) const {
  if (labels.size() != labels_.size()) throw DimensionError("relabel must keep the qubit count");
  return StateVector(std::move(labels), amplitudes_);
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Labels labels, CMatrix entries) : labels_(std::move(labels)), entries_(std::move(entries)) {
  check_unique(labels_);
  check_register_size(labels_.size());
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << labels_.size());
  if (entries_.rows() != d || entries_.cols() != d) {
    throw DimensionError("density matrix over " + std::to_string(labels_.size()) + " qubits must be " +
                         std::to_string(d) + "x" + std::to_string(d));
  }
  if (!all_finite(entries_)) throw InvariantError("density matrix entries must be finite");
  if (max_abs_diff(entries_, entries_.adjoint()) > kClosedFormTol) {
    throw InvariantError("density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace() - Complex(1.0)) > kClosedFormTol) {
    throw InvariantError("density matrix trace is not 1");
  }
  if (min_eigenvalue() < -kClosedFormTol) throw InvariantError("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::from_pure(const StateVector& state) {
  return DensityMatrix(state.labels(), state.amplitudes() * state.amplitudes().adjoint());
}

int DensityMatrix::position(std::string_view label) const { return find_label(labels_, label); }

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

double DensityMatrix::min_eigenvalue() const {
  const CMatrix herm = 0.5 * (entries_ + entries_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

// ---------------------------------------------------------------------------
// Unitary

Unitary::Unitary(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DimensionError("unitary must be square");
  if (!is_power_of_two(static_cast<std::size_t>(entries_.rows()))) {
    throw DimensionError("unitary dimension must be a power of two, got " + std::to_string(entries_.rows()));
  }
  if (!all_finite(entries_)) throw InvariantError("unitary entries must be finite");
  const CMatrix gram = entries_.adjoint() * entries_;
  if (max_abs_diff(gram, CMatrix::Identity(entries_.rows(), entries_.cols())) > kClosedFormTol) {
    throw InvariantError("matrix is not unitary");
  }
}

int Unitary::n_qubits() const {
  int n = 0;
  while ((std::size_t{1} << n) < dim()) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Tensor products

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

Labels concat_labels(const Labels& a, const Labels& b) {
  Labels out = a;
  for (const auto& l : b) {
    if (std::find(a.begin(), a.end(), l) != a.end()) throw LabelError("label collision in tensor product: '" + l + "'");
    out.push_back(l);
  }
  check_register_size(out.size());
  return out;
}

}  // namespace

StateVector tensor(const StateVector& a, const StateVector& b) {
  Labels labels = concat_labels(a.labels(), b.labels());
  CVector out(a.amplitudes().size() * b.amplitudes().size());
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i)
    out.segment(i * b.amplitudes().size(), b.amplitudes().size()) = a.amplitudes()(i) * b.amplitudes();
  return StateVector(std::move(labels), std::move(out));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Labels labels = concat_labels(a.labels(), b.labels());
  return DensityMatrix(std::move(labels), kron(a.entries(), b.entries()));
}

Unitary tensor(const Unitary& a, const Unitary& b) { return Unitary(kron(a.entries(), b.entries())); }

Unitary compose(const Unitary& a, const Unitary& b) {
  if (a.dim() != b.dim()) throw DimensionError("cannot compose unitaries of different dimension");
  return Unitary(a.entries() * b.entries());
}

// ---------------------------------------------------------------------------
// Gate application

StateVector apply(const StateVector& state, const Unitary& gate, std::span<const std::string> targets) {
  if (targets.empty()) throw DimensionError("gate needs at least one target");
  if (gate.dim() != (std::size_t{1} << targets.size())) {
    throw DimensionError("gate of dimension " + std::to_string(gate.dim()) + " cannot act on " +
                         std::to_string(targets.size()) + " targets");
  }
  const IndexSplit split = split_for(state.labels(), targets);
  const std::size_t k = targets.size();
  const std::size_t block = std::size_t{1} << k;
  const std::size_t groups = state.dim() >> k;

  // offsets[m] is the global index contribution of local gate index m.
  std::vector<std::size_t> offsets(block);
  for (std::size_t m = 0; m < block; ++m) offsets[m] = split.compose(m, 0);

  const CVector& in = state.amplitudes();
  CVector out(in.size());
  CVector local(static_cast<Eigen::Index>(block));
  const CMatrix& g = gate.entries();
  for (std::size_t r = 0; r < groups; ++r) {
    const std::size_t base = split.compose(0, r);
    for (std::size_t m = 0; m < block; ++m) local(static_cast<Eigen::Index>(m)) = in(static_cast<Eigen::Index>(base | offsets[m]));
    const CVector mapped = g * local;
    for (std::size_t m = 0; m < block; ++m) out(static_cast<Eigen::Index>(base | offsets[m])) = mapped(static_cast<Eigen::Index>(m));
  }
  return StateVector(state.labels(), std::move(out));
}

StateVector apply(const StateVector& state, const Unitary& gate, std::initializer_list<std::string> targets) {
  return apply(state, gate, std::span<const std::string>(targets.begin(), targets.size()));
}

StateVector permute(const StateVector& state, const Labels& order) {
  if (order.size() != state.labels().size()) throw LabelError("permutation must list every qubit exactly once");
  check_unique(order);
  const IndexSplit split = split_for(state.labels(), order);
  CVector out(state.amplitudes().size());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    out(static_cast<Eigen::Index>(split.pack(i, split.selected))) = state[i];
  }
  return StateVector(order, std::move(out));
}

Labels complement(const Labels& labels, std::span<const std::string> targets) {
  for (const auto& t : targets) find_label(labels, t);
  Labels out;
  for (const auto& l : labels)
    if (std::find(targets.begin(), targets.end(), l) == targets.end()) out.push_back(l);
  return out;
}

CVector contract_bra(const StateVector& state, std::span<const std::string> targets, const CVector& bra) {
  const std::size_t k = targets.size();
  if (static_cast<std::size_t>(bra.size()) != (std::size_t{1} << k)) {
    throw DimensionError("bra of length " + std::to_string(bra.size()) + " does not fit " + std::to_string(k) +
                         " targets");
  }
  const IndexSplit split = split_for(state.labels(), targets);
  const std::size_t rest_dim = state.dim() >> k;
  CVector out = CVector::Zero(static_cast<Eigen::Index>(rest_dim));
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const auto sel = static_cast<Eigen::Index>(split.pack(i, split.selected));
    const auto rem = static_cast<Eigen::Index>(split.pack(i, split.rest));
    out(rem) += std::conj(bra(sel)) * state[i];
  }
  return out;
}

StateVector embed(const CVector& ket, const Labels& targets, const StateVector& rest, const Labels& register_order) {
  if (static_cast<std::size_t>(ket.size()) != (std::size_t{1} << targets.size())) {
    throw DimensionError("ket does not fit its target labels");
  }
  Labels joined = concat_labels(targets, rest.labels());
  CVector amps(ket.size() * rest.amplitudes().size());
  for (Eigen::Index i = 0; i < ket.size(); ++i)
    amps.segment(i * rest.amplitudes().size(), rest.amplitudes().size()) = ket(i) * rest.amplitudes();
  return permute(StateVector::normalized(std::move(joined), std::move(amps)), register_order);
}

// ---------------------------------------------------------------------------
// Partial trace

DensityMatrix partial_trace(const StateVector& state, std::span<const std::string> keep) {
  const Labels kept = in_register_order(state.labels(), keep);
  const IndexSplit split = split_for(state.labels(), kept);
  const auto keep_dim = static_cast<Eigen::Index>(std::size_t{1} << kept.size());
  const auto rest_dim = static_cast<Eigen::Index>(state.dim() >> kept.size());
  // Row i_keep, column i_rest of the reshaped amplitude tensor.
  CMatrix reshaped(keep_dim, rest_dim);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    reshaped(static_cast<Eigen::Index>(split.pack(i, split.selected)),
             static_cast<Eigen::Index>(split.pack(i, split.rest))) = state[i];
  }
  CMatrix rho = reshaped * reshaped.adjoint();
  return DensityMatrix(kept, std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep) {
  const Labels kept = in_register_order(rho.labels(), keep);
  const IndexSplit split = split_for(rho.labels(), kept);
  const std::size_t keep_dim = std::size_t{1} << kept.size();
  const std::size_t rest_dim = rho.dim() >> kept.size();
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(keep_dim), static_cast<Eigen::Index>(keep_dim));
  for (std::size_t i = 0; i < keep_dim; ++i) {
    for (std::size_t j = 0; j < keep_dim; ++j) {
      Complex acc = 0.0;
      for (std::size_t r = 0; r < rest_dim; ++r) {
        acc += rho.entries()(static_cast<Eigen::Index>(split.compose(i, r)), static_cast<Eigen::Index>(split.compose(j, r)));
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  }
  return DensityMatrix(kept, std::move(out));
}

DensityMatrix partial_trace(const StateVector& state, std::initializer_list<std::string> keep) {
  return partial_trace(state, std::span<const std::string>(keep.begin(), keep.size()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::string> keep) {
  return partial_trace(rho, std::span<const std::string>(keep.begin(), keep.size()));
}

// ---------------------------------------------------------------------------
// Comparisons

namespace {

void require_same_labels(const Labels& a, const Labels& b) {
  if (a != b) throw LabelError("label mismatch: (" + join(a) + ") vs (" + join(b) + ")");
}

}  // namespace

Complex inner(const StateVector& a, const StateVector& b) {
  require_same_labels(a.labels(), b.labels());
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner(a, b)); }

double fidelity(const StateVector& psi, const DensityMatrix& rho) {
  require_same_labels(psi.labels(), rho.labels());
  return (psi.amplitudes().adjoint() * rho.entries() * psi.amplitudes())(0, 0).real();
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
  const Complex overlap = inner(b, a);
  // The minimizing phase aligns b with a; for orthogonal states any phase
  // gives the same distance.
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a.amplitudes() - phase * b.amplitudes()).norm() <= tol;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool matrix_close(const DensityMatrix& a, const DensityMatrix& b, double tol) {
  return max_abs_diff(a.entries(), b.entries()) <= tol;
}

bool matrix_close(const CMatrix& a, const CMatrix& b, double tol) { return max_abs_diff(a, b) <= tol; }

double trace_product(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace product needs equal dimensions");
  return (a.entries() * b.entries()).trace().real();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace distance needs equal dimensions");
  const CMatrix diff = a.entries() - b.entries();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (diff + diff.adjoint()), Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

CMatrix support_projector(const CMatrix& hermitian, double cutoff) {
  if (hermitian.rows() != hermitian.cols()) throw DimensionError("support projector needs a square matrix");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (hermitian + hermitian.adjoint()));
  CMatrix projector = CMatrix::Zero(hermitian.rows(), hermitian.cols());
  for (Eigen::Index i = 0; i < hermitian.rows(); ++i) {
    if (solver.eigenvalues()(i) > cutoff) {
      const CVector v = solver.eigenvectors().col(i);
      projector += v * v.adjoint();
    }
  }
  return projector;
}

}  // namespace simdense
