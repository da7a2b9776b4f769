// Copyright 2026 The qmm Authors
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

#include "qmm/operator_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qmm {

namespace {

std::size_t bit_of(std::size_t index, std::size_t qubit, std::size_t n) {
  return (index >> (n - 1 - qubit)) & 1U;
}

}  // namespace

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return max_abs_diff(m, m.adjoint()) <= tolerance;
}

bool is_unitary(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return max_abs_diff(m.adjoint() * m, identity(m.rows())) <= tolerance;
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("hermitize: not square");
  return (m + m.adjoint()) * 0.5;
}

ComplexMatrix identity(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix basis_projector(Eigen::Index dim, Eigen::Index k) {
  if (k < 0 || k >= dim) throw DimensionError("basis_projector: index out of range");
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  p(k, k) = 1.0;
  return p;
}

ComplexMatrix outer(const ComplexVector& v) {
  return v * v.adjoint();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  if (m.rows() != m.cols()) throw DimensionError("partial_trace: matrix not square");
  if (dims.empty()) throw DimensionError("partial_trace: no subsystems");
  const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                                            std::multiplies<>());
  if (total != static_cast<std::size_t>(m.rows())) {
    std::ostringstream msg;
    msg << "partial_trace: product of subsystem dimensions " << total
        << " != matrix dimension " << m.rows();
    throw DimensionError(msg.str());
  }
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");

  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size() || kept[k]) {
      throw DimensionError("partial_trace: invalid keep index");
    }
    kept[k] = true;
  }

  // Big-endian strides; subsystem 0 is most significant.
  std::vector<std::size_t> stride(dims.size());
  std::size_t s = 1;
  for (std::size_t q = dims.size(); q-- > 0;) {
    stride[q] = s;
    s *= dims[q];
  }

  // Offsets of every kept/traced multi-index combination into the full index.
  auto offsets = [&](bool want_kept) {
    std::vector<std::size_t> out{0};
    for (std::size_t q = 0; q < dims.size(); ++q) {
      if (kept[q] != want_kept) continue;
      std::vector<std::size_t> next;
      next.reserve(out.size() * dims[q]);
      for (std::size_t base : out) {
        for (std::size_t v = 0; v < dims[q]; ++v) next.push_back(base + v * stride[q]);
      }
      out = std::move(next);
    }
    return out;
  };
  const std::vector<std::size_t> kept_off = offsets(true);
  const std::vector<std::size_t> traced_off = offsets(false);

  const auto dk = static_cast<Eigen::Index>(kept_off.size());
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (std::size_t t : traced_off) {
        acc += m(static_cast<Eigen::Index>(kept_off[i] + t),
                 static_cast<Eigen::Index>(kept_off[j] + t));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix transpose_in_basis(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("transpose_in_basis: not square");
  return m.transpose();
}

ComplexMatrix qubit_permutation(std::size_t num_qubits,
                                std::span<const std::size_t> perm) {
  if (perm.size() != num_qubits) throw DimensionError("qubit_permutation: wrong length");
  std::vector<bool> seen(num_qubits, false);
  for (std::size_t p : perm) {
    if (p >= num_qubits || seen[p]) throw InvariantError("qubit_permutation: not a permutation");
    seen[p] = true;
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                          static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (std::size_t q = 0; q < num_qubits; ++q) {
      y |= bit_of(x, q, num_qubits) << (num_qubits - 1 - perm[q]);
    }
    out(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = 1.0;
  }
  return out;
}

//----------------------------------------------------------------------------

HermitianOperator::HermitianOperator(ComplexMatrix m, double tolerance)
    : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DimensionError("HermitianOperator: matrix must be square and non-empty");
  }
  if (!all_finite(m_)) throw InvariantError("HermitianOperator: non-finite entry");
  if (!is_hermitian(m_, tolerance)) {
    std::ostringstream msg;
    msg << "HermitianOperator: ||M - M^dagger||_max = " << max_abs_diff(m_, m_.adjoint())
        << " exceeds " << tolerance;
    throw InvariantError(msg.str());
  }
}

HermitianOperator HermitianOperator::from_hermitized(const ComplexMatrix& m) {
  return HermitianOperator(hermitize(m));
}

EigenDecomposition eig_hermitian(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigen decomposition failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
  return eig_hermitian(HermitianOperator(m));
}

double min_eigenvalue(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

bool is_psd(const ComplexMatrix& m, double tolerance) {
  return min_eigenvalue(m) >= -tolerance;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(m));
  const RealVector root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix& v = solver.eigenvectors();
  return v * root.cast<Complex>().asDiagonal() * v.adjoint();
}

PseudoInverse psd_pseudo_inverse(const ComplexMatrix& m, double relative_cutoff) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(m));
  const RealVector& w = solver.eigenvalues();
  const ComplexMatrix& v = solver.eigenvectors();
  const double cutoff = relative_cutoff * std::max(w.maxCoeff(), 0.0);
  Eigen::VectorXcd inv = Eigen::VectorXcd::Zero(w.size());
  Eigen::VectorXcd keep = Eigen::VectorXcd::Zero(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) > cutoff && w(i) > 0.0) {
      inv(i) = 1.0 / w(i);
      keep(i) = 1.0;
    }
  }
  return {v * inv.asDiagonal() * v.adjoint(), v * keep.asDiagonal() * v.adjoint()};
}

//----------------------------------------------------------------------------

PureState::PureState(ComplexVector amplitudes) : a_(std::move(amplitudes)) {
  const auto n = static_cast<std::size_t>(a_.size());
  if (n == 0 || !std::has_single_bit(n)) {
    throw DimensionError("PureState: amplitude count must be a power of two");
  }
  if (!a_.allFinite()) throw InvariantError("PureState: non-finite amplitude");
  const double norm2 = a_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol::kNorm) {
    std::ostringstream msg;
    msg << "PureState: squared norm " << norm2 << " differs from 1";
    throw InvariantError(msg.str());
  }
  num_qubits_ = static_cast<std::size_t>(std::countr_zero(n));
}

PureState PureState::basis(std::size_t num_qubits, std::size_t index) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) throw DimensionError("PureState::basis: index out of range");
  ComplexVector a = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  a(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(a));
}

PureState PureState::normalized(ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw InvariantError("PureState::normalized: zero vector");
  return PureState(amplitudes / norm);
}

PureState PureState::operator*(const PureState& rhs) const {
  // Renormalize to absorb the roundoff of the product.
  return normalized(tensor(a_, rhs.a_));
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw DimensionError("inner: dimension mismatch");
  return a.amplitudes().dot(b.amplitudes());  // Eigen's dot conjugates the first
}

PureState tensor_power(const PureState& psi, std::size_t count) {
  PureState out;  // zero-qubit state, amplitude 1
  for (std::size_t i = 0; i < count; ++i) out = out * psi;
  return out;
}

}  // namespace qmm
