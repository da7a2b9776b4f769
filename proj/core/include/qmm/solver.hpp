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

#include <optional>
#include <string>
#include <vector>

#include "qmm/choimap.hpp"
#include "qmm/fidelity_operator.hpp"

namespace qmm {

struct SolverConfig {
  int max_iters = 10000;
  double convergence_tol = 1e-10;  // Frobenius norm of the iterate step
  double psd_tol = 1e-7;
  double pinv_cutoff = 1e-12;      // relative eigenvalue cutoff

  // Throws std::invalid_argument on non-positive fields or a tolerance
  // below 1e-14.
  void validate() const;
};

// First-order optimality conditions for maximizing Tr[R chi] over
// trace-preserving CP maps:
//   (lambda (x) 1 - R) chi = 0,   lambda (x) 1 - R >= 0,   lambda = Tr_out[R chi].
struct OptimalityCertificate {
  HermitianOperator lambda_op;
  double residual_eq10 = 0.0;  // ||(lambda (x) 1 - R) chi||_F
  double min_eig_eq11 = 0.0;   // smallest eigenvalue of lambda (x) 1 - R
  double fidelity = 0.0;
  bool passed = false;
};

// lambda - R_-, the |1><1| block of lambda (x) 1 - R.
ComplexMatrix certificate_block_a1(const OptimalityCertificate& cert, const FidelityOperator& r);
// lambda - R_+, the |0><0| block.
ComplexMatrix certificate_block_a2(const OptimalityCertificate& cert, const FidelityOperator& r);

OptimalityCertificate certify(const ChoiMatrix& chi, const FidelityOperator& r, double psd_tol);

struct IterationRecord {
  int iter = 0;
  double fidelity = 0.0;
  double step_norm = 0.0;
  double min_eig = 0.0;  // min eigenvalue of lambda_k (x) 1 - R at iterate k
};

struct SolveResult {
  ChoiMatrix chi;
  OptimalityCertificate certificate;
  std::vector<IterationRecord> log;
  int iterations = 0;
  bool converged = false;
  // Rank-deficient lambda left part of R chi outside its support.
  bool support_violation = false;
};

// Fixed-point iteration
//   L_k = Tr_out[R chi_k R],  chi_{k+1} = L_k^{-1/2} R chi_k R L_k^{-1/2}
// followed by the depolarizing completion on the kernel of L_k so the
// iterate stays trace preserving on the whole register. Starts from the
// maximally mixed map unless chi0 is given.
SolveResult solve(const FidelityOperator& r, const SolverConfig& cfg = {},
                  const std::optional<ChoiMatrix>& chi0 = std::nullopt);

// Optimal maps in closed form:
//   identical:  chi = Pi_+^{(n+1)} (x) |0><0| + (1 - Pi_+^{(n+1)}) (x) |1><1|
//   orthogonal: measure-and-prepare map of joint_povm_orthogonal()
ChoiMatrix closed_form_chi(ProgramKind kind, int n);

// Closed-form Lagrange operator for identical programs:
// lambda = 1_in/(2(n+1)) - Pi_+^{(n+1)} / (2(n+1)(n+2)).
HermitianOperator lambda_formula_identical(int n);

std::string iteration_log_csv(const std::vector<IterationRecord>& log);

}  // namespace qmm
