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

#include "qmm/choimap.hpp"

#include <array>
#include <sstream>

namespace qmm {

namespace {

std::array<std::size_t, 2> split(Eigen::Index dim_in, Eigen::Index dim_out) {
  return {static_cast<std::size_t>(dim_in), static_cast<std::size_t>(dim_out)};
}

}  // namespace

ComplexMatrix trace_out(const ComplexMatrix& m, Eigen::Index dim_in, Eigen::Index dim_out) {
  const auto dims = split(dim_in, dim_out);
  const std::array<std::size_t, 1> keep{0};
  return partial_trace(m, dims, keep);
}

ComplexMatrix trace_in(const ComplexMatrix& m, Eigen::Index dim_in, Eigen::Index dim_out) {
  const auto dims = split(dim_in, dim_out);
  const std::array<std::size_t, 1> keep{1};
  return partial_trace(m, dims, keep);
}

ChoiMatrix::ChoiMatrix(Eigen::Index dim_in, Eigen::Index dim_out, ComplexMatrix matrix)
    : dim_in_(dim_in), dim_out_(dim_out) {
  if (dim_in < 1 || dim_out < 1) throw DimensionError("ChoiMatrix: dimensions must be positive");
  if (matrix.rows() != dim_in * dim_out || matrix.cols() != dim_in * dim_out) {
    throw DimensionError("ChoiMatrix: matrix must be (dim_in*dim_out) square");
  }
  m_ = HermitianOperator(std::move(matrix));
  const double lo = min_eigenvalue(m_.matrix());
  if (lo < -tol::kChoi) {
    std::ostringstream msg;
    msg << "ChoiMatrix: not positive semidefinite (min eigenvalue " << lo << ")";
    throw InvariantError(msg.str());
  }
  const double tp = max_abs_diff(trace_out(), identity(dim_in));
  if (tp > tol::kChoi) {
    std::ostringstream msg;
    msg << "ChoiMatrix: not trace preserving (||Tr_out chi - 1||_max = " << tp << ")";
    throw InvariantError(msg.str());
  }
}

ComplexMatrix ChoiMatrix::trace_out() const {
  return qmm::trace_out(m_.matrix(), dim_in_, dim_out_);
}

HermitianOperator apply(const ChoiMatrix& chi, const HermitianOperator& rho_in) {
  if (rho_in.dim() != chi.dim_in()) throw DimensionError("apply: input dimension mismatch");
  const ComplexMatrix lifted =
      tensor(transpose_in_basis(rho_in.matrix()), identity(chi.dim_out()));
  return HermitianOperator::from_hermitized(
      trace_in(chi.matrix() * lifted, chi.dim_in(), chi.dim_out()));
}

double mean_fidelity(const ChoiMatrix& chi, const FidelityOperator& r) {
  if (r.r_total.dim() != chi.matrix().rows() || chi.dim_out() != 2) {
    throw DimensionError("mean_fidelity: Choi matrix and R act on different spaces");
  }
  const Complex f = (r.r_total.matrix().cwiseProduct(chi.matrix().transpose())).sum();
  if (std::abs(f.imag()) > 1e-10) {
    throw std::runtime_error("mean_fidelity: trace has a non-negligible imaginary part");
  }
  return f.real();
}

double pointwise_fidelity(const ChoiMatrix& chi, const PureState& psi, ProgramKind kind,
                          int n) {
  const MultimeterInput in = multimeter_input(psi, kind, n);
  if (in.parallel.dim() != chi.dim_in() || chi.dim_out() != 2) {
    throw DimensionError("pointwise_fidelity: Choi matrix does not match the register");
  }
  auto term = [&](const PureState& input, Eigen::Index outcome) {
    const ComplexMatrix probe =
        tensor(transpose_in_basis(input.density()), basis_projector(2, outcome));
    return (chi.matrix().cwiseProduct(probe.transpose())).sum().real();
  };
  return 0.5 * term(in.parallel, 0) + 0.5 * term(in.perp, 1);
}

ChoiMatrix identity_channel(Eigen::Index dim) {
  ComplexVector omega = ComplexVector::Zero(dim * dim);
  for (Eigen::Index i = 0; i < dim; ++i) omega(i * dim + i) = 1.0;
  return ChoiMatrix(dim, dim, outer(omega));
}

ChoiMatrix depolarizing_channel(Eigen::Index dim_in, Eigen::Index dim_out) {
  return ChoiMatrix(dim_in, dim_out,
                    identity(dim_in * dim_out) / static_cast<double>(dim_out));
}

ChoiMatrix measure_and_prepare(std::span<const ComplexMatrix> povm_elements) {
  if (povm_elements.empty()) throw DimensionError("measure_and_prepare: empty POVM");
  const Eigen::Index dim_in = povm_elements.front().rows();
  const auto dim_out = static_cast<Eigen::Index>(povm_elements.size());
  ComplexMatrix chi = ComplexMatrix::Zero(dim_in * dim_out, dim_in * dim_out);
  for (Eigen::Index k = 0; k < dim_out; ++k) {
    const ComplexMatrix& e = povm_elements[static_cast<std::size_t>(k)];
    if (e.rows() != dim_in || e.cols() != dim_in) {
      throw DimensionError("measure_and_prepare: POVM elements differ in size");
    }
    chi += tensor(transpose_in_basis(e), basis_projector(dim_out, k));
  }
  return ChoiMatrix(dim_in, dim_out, std::move(chi));
}

}  // namespace qmm
