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

#include <cstdint>
#include <span>

#include "qmm/operator_core.hpp"
#include "qmm/states.hpp"

namespace qmm {

// Figure-of-merit operator for the discrimination task. The mean fidelity
// of a Choi matrix chi is Tr[r_total chi], with
//
//   r_total = r_plus (x) |0><0| + r_minus (x) |1><1|      (in (x) out)
//   r_plus^T  = 1/2 int dpsi |Psi><Psi|
//   r_minus^T = 1/2 int dpsi |Psi_perp><Psi_perp|
//
// The input space is the full signal+program register (2^{n+1} dims); for
// identical programs the physically reachable part is the signal qubit
// times the symmetric subspace of the program, see input_identity().
struct FidelityOperator {
  int n_program = 1;
  ProgramKind program_kind = ProgramKind::Identical;
  HermitianOperator r_plus;
  HermitianOperator r_minus;
  HermitianOperator r_total;

  Eigen::Index dim_in() const { return r_plus.dim(); }
};

// Assembles r_total and checks the PSD invariant of both blocks.
FidelityOperator make_fidelity_operator(ProgramKind kind, int n, ComplexMatrix r_plus,
                                        ComplexMatrix r_minus);

// Projector onto the symmetric (bosonic) subspace of m qubits, rank m + 1.
// Built from the Dicke basis.
HermitianOperator symmetric_projector(int m);

// Identity on the input space spanned by signal (x) program states:
// 1_2 (x) Pi_+^{(n)} for identical programs, the full identity otherwise.
HermitianOperator input_identity(ProgramKind kind, int n);

// Closed form for identical programs; converged product-Gauss quadrature
// over the sphere for the orthogonal program.
FidelityOperator build_r_analytic(ProgramKind kind, int n);

struct QuadratureResult {
  FidelityOperator op;
  int theta_nodes = 0;
  int phi_nodes = 0;
  double last_change = 0.0;  // max-norm change of the final refinement
};

// Gauss-Legendre (cos theta) x uniform (phi) quadrature, doubling both grids
// until successive refinements differ by less than `tolerance`.
QuadratureResult build_r_quadrature(ProgramKind kind, int n, double tolerance = 1e-10);

// Empirical average over the given Bloch points.
FidelityOperator build_r_from_points(ProgramKind kind, int n,
                                     std::span<const BlochPoint> points);

// Empirical average over `samples` uniform Bloch points drawn from `seed`.
FidelityOperator build_r_montecarlo(ProgramKind kind, int n, std::size_t samples,
                                    std::uint64_t seed);

}  // namespace qmm
