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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qmm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Shape mismatches between operators, subsystems or registers.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value violates the invariant of the type being constructed.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kNorm = 1e-12;
inline constexpr double kSpectral = 1e-10;
inline constexpr double kChoi = 1e-9;
inline constexpr double kPovm = 1e-10;
}  // namespace tol

//----------------------------------------------------------------------------
// Dense helpers. Qubit ordering is big-endian throughout: in a register of n
// qubits, qubit 0 is the most significant bit of the basis index.
//----------------------------------------------------------------------------

// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool all_finite(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::kHermitian);
bool is_unitary(const ComplexMatrix& m, double tolerance = tol::kHermitian);

// (m + m^dagger) / 2
ComplexMatrix hermitize(const ComplexMatrix& m);

ComplexMatrix identity(Eigen::Index dim);

// |k><k| on a dim-dimensional space.
ComplexMatrix basis_projector(Eigen::Index dim, Eigen::Index k);

// |v><v|
ComplexMatrix outer(const ComplexVector& v);

// Kronecker product, a's index most significant.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

// Reduced operator on the subsystems listed in `keep` (indices into `dims`),
// tracing out the rest. Kept subsystems retain their relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

// Transpose in the computational basis (no conjugation).
ComplexMatrix transpose_in_basis(const ComplexMatrix& m);

// Operator P_pi on n qubits with P_pi |x_0 ... x_{n-1}> = |y> where
// y_{perm[q]} = x_q, i.e. qubit q is moved to wire perm[q].
ComplexMatrix qubit_permutation(std::size_t num_qubits,
                                std::span<const std::size_t> perm);

//----------------------------------------------------------------------------
// HermitianOperator
//----------------------------------------------------------------------------

// Square complex matrix whose Hermiticity (||M - M^dagger||_max <= 1e-12)
// is checked at construction. Arithmetic is done on matrix().
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(ComplexMatrix m,
                             double tolerance = tol::kHermitian);

  // Symmetrizes first, for iterates carrying roundoff drift.
  static HermitianOperator from_hermitized(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  double trace() const { return m_.trace().real(); }

 private:
  ComplexMatrix m_;
};

struct EigenDecomposition {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns are eigenvectors
};

EigenDecomposition eig_hermitian(const HermitianOperator& h);
// Throws InvariantError when m is not Hermitian within 1e-12.
EigenDecomposition eig_hermitian(const ComplexMatrix& m);

double min_eigenvalue(const ComplexMatrix& m);
bool is_psd(const ComplexMatrix& m, double tolerance);

// Hermitian square root of a PSD operator; negative roundoff eigenvalues
// are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

struct PseudoInverse {
  ComplexMatrix inverse;
  ComplexMatrix support;  // projector onto the retained eigenspace
};

// Eigen pseudo-inverse of a PSD operator; eigenvalues below
// relative_cutoff * max eigenvalue are dropped.
PseudoInverse psd_pseudo_inverse(const ComplexMatrix& m,
                                 double relative_cutoff);

//----------------------------------------------------------------------------
// PureState
//----------------------------------------------------------------------------

// Normalized amplitude vector over a qubit register.
class PureState {
 public:
  PureState() = default;
  // Throws InvariantError unless the length is a power of two and the norm
  // is 1 within 1e-12.
  explicit PureState(ComplexVector amplitudes);

  static PureState basis(std::size_t num_qubits, std::size_t index);
  static PureState normalized(ComplexVector amplitudes);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  Eigen::Index dim() const noexcept { return a_.size(); }
  const ComplexVector& amplitudes() const noexcept { return a_; }

  // |psi><psi|
  ComplexMatrix density() const { return outer(a_); }

  PureState operator*(const PureState& rhs) const;  // tensor product

 private:
  std::size_t num_qubits_ = 0;
  ComplexVector a_ = ComplexVector::Ones(1);
};

// <a|b>
Complex inner(const PureState& a, const PureState& b);

// psi^{(x) count}
PureState tensor_power(const PureState& psi, std::size_t count);

}  // namespace qmm
