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

#include "qmm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qmm/multimeter.hpp"

namespace qmm {

void SolverConfig::validate() const {
  if (max_iters <= 0) throw std::invalid_argument("SolverConfig: max_iters must be positive");
  if (!(convergence_tol >= 1e-14)) {
    throw std::invalid_argument("SolverConfig: convergence_tol must be >= 1e-14");
  }
  if (!(psd_tol > 0.0)) throw std::invalid_argument("SolverConfig: psd_tol must be positive");
  if (!(pinv_cutoff > 0.0)) {
    throw std::invalid_argument("SolverConfig: pinv_cutoff must be positive");
  }
}

namespace {

constexpr Eigen::Index kDimOut = 2;

ComplexMatrix lift(const ComplexMatrix& in_op) {
  return tensor(in_op, identity(kDimOut));
}

double frobenius(const ComplexMatrix& m) {
  return m.norm();
}

double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.cwiseProduct(b.transpose()).sum().real();
}

double eq11_min_eig(const ComplexMatrix& r, const ComplexMatrix& chi, Eigen::Index dim_in) {
  const ComplexMatrix lambda = hermitize(trace_out(r * chi, dim_in, kDimOut));
  return min_eigenvalue(lift(lambda) - r);
}

}  // namespace

ComplexMatrix certificate_block_a1(const OptimalityCertificate& cert, const FidelityOperator& r) {
  return cert.lambda_op.matrix() - r.r_minus.matrix();
}

ComplexMatrix certificate_block_a2(const OptimalityCertificate& cert, const FidelityOperator& r) {
  return cert.lambda_op.matrix() - r.r_plus.matrix();
}

OptimalityCertificate certify(const ChoiMatrix& chi, const FidelityOperator& r, double psd_tol) {
  if (chi.dim_in() != r.dim_in() || chi.dim_out() != kDimOut) {
    throw DimensionError("certify: Choi matrix and R act on different spaces");
  }
  const ComplexMatrix& rm = r.r_total.matrix();
  OptimalityCertificate cert;
  cert.lambda_op =
      HermitianOperator::from_hermitized(trace_out(rm * chi.matrix(), chi.dim_in(), kDimOut));
  const ComplexMatrix gap = lift(cert.lambda_op.matrix()) - rm;
  cert.residual_eq10 = frobenius(gap * chi.matrix());
  cert.min_eig_eq11 = min_eigenvalue(gap);
  cert.fidelity = mean_fidelity(chi, r);
  cert.passed = cert.residual_eq10 <= psd_tol && cert.min_eig_eq11 >= -psd_tol;
  return cert;
}

SolveResult solve(const FidelityOperator& r, const SolverConfig& cfg,
                  const std::optional<ChoiMatrix>& chi0) {
  cfg.validate();
  const Eigen::Index dim_in = r.dim_in();
  if (chi0 && (chi0->dim_in() != dim_in || chi0->dim_out() != kDimOut)) {
    throw DimensionError("solve: initial Choi matrix does not match R");
  }
  const ComplexMatrix& rm = r.r_total.matrix();

  ComplexMatrix chi = chi0 ? chi0->matrix() : depolarizing_channel(dim_in, kDimOut).matrix();
  double fidelity = trace_product(rm, chi);

  std::vector<IterationRecord> log;
  bool converged = false;
  bool support_violation = false;
  int iter = 0;
  while (iter < cfg.max_iters) {
    ++iter;
    const ComplexMatrix rchir = rm * chi * rm;
    const ComplexMatrix l = hermitize(trace_out(rchir, dim_in, kDimOut));

    // L^{-1/2} on the support of L.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(l);
    const RealVector& w = es.eigenvalues();
    const ComplexMatrix& v = es.eigenvectors();
    const double cutoff = cfg.pinv_cutoff * std::max(w.maxCoeff(), 0.0);
    ComplexVector inv_sqrt = ComplexVector::Zero(dim_in);
    ComplexVector keep = ComplexVector::Zero(dim_in);
    for (Eigen::Index i = 0; i < dim_in; ++i) {
      if (w(i) > cutoff && w(i) > 0.0) {
        inv_sqrt(i) = 1.0 / std::sqrt(w(i));
        keep(i) = 1.0;
      }
    }
    const ComplexMatrix k = lift(v * inv_sqrt.asDiagonal() * v.adjoint());
    const ComplexMatrix kernel = identity(dim_in) - v * keep.asDiagonal() * v.adjoint();

    if (frobenius(lift(kernel) * rm * chi) > cfg.psd_tol) support_violation = true;

    ComplexMatrix next = hermitize(k * rchir * k);
    next += lift(kernel) / static_cast<double>(kDimOut);
    next = hermitize(next);

    const double step = frobenius(next - chi);
    const double next_fidelity = trace_product(rm, next);
    const double fidelity_step = std::abs(next_fidelity - fidelity);
    chi = std::move(next);
    fidelity = next_fidelity;
    log.push_back({iter, fidelity, step, eq11_min_eig(rm, chi, dim_in)});

    if (step < cfg.convergence_tol ||
        fidelity_step < cfg.convergence_tol * cfg.convergence_tol) {
      converged = true;
      break;
    }
  }

  ChoiMatrix final_chi(dim_in, kDimOut, hermitize(chi));
  OptimalityCertificate cert = certify(final_chi, r, cfg.psd_tol);
  cert.passed = cert.passed && converged && !support_violation;
  return {std::move(final_chi), std::move(cert), std::move(log), iter, converged,
          support_violation};
}

ChoiMatrix closed_form_chi(ProgramKind kind, int n) {
  check_program(kind, n);
  const Povm povm =
      kind == ProgramKind::Identical ? joint_povm_identical(n) : joint_povm_orthogonal();
  return choi_from_povm(povm);
}

HermitianOperator lambda_formula_identical(int n) {
  check_program(ProgramKind::Identical, n);
  const double np1 = n + 1.0;
  const double np2 = n + 2.0;
  return HermitianOperator::from_hermitized(
      input_identity(ProgramKind::Identical, n).matrix() / (2.0 * np1) -
      symmetric_projector(n + 1).matrix() / (2.0 * np1 * np2));
}

std::string iteration_log_csv(const std::vector<IterationRecord>& log) {
  std::ostringstream out;
  out.precision(17);
  out << "iter,fidelity,step_norm,min_eig\n";
  for (const IterationRecord& rec : log) {
    out << rec.iter << ',' << rec.fidelity << ',' << rec.step_norm << ',' << rec.min_eig << '\n';
  }
  return out.str();
}

}  // namespace qmm
