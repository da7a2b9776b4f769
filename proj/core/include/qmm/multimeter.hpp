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

#include <string>
#include <utility>
#include <vector>

#include "qmm/choimap.hpp"
#include "qmm/operator_core.hpp"
#include "qmm/states.hpp"

namespace qmm {

// Ordered POVM. Element 0 is the "parallel" outcome (result 0, projection
// onto |psi>), element 1 the "perp" outcome (result 1).
class Povm {
 public:
  // Throws InvariantError unless every element is PSD within 1e-10 and the
  // elements sum to the identity within 1e-10.
  Povm(std::vector<HermitianOperator> elements, std::vector<std::string> labels);

  const std::vector<HermitianOperator>& elements() const noexcept { return elements_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const HermitianOperator& operator[](std::size_t k) const { return elements_.at(k); }
  std::size_t size() const noexcept { return elements_.size(); }
  Eigen::Index dim() const { return elements_.front().dim(); }

  // ||sum_k E_k - 1||_max
  double completeness_residual() const;

 private:
  std::vector<HermitianOperator> elements_;
  std::vector<std::string> labels_;
};

// {Pi_+^{(n+1)}, 1 - Pi_+^{(n+1)}} on signal + n program qubits.
Povm joint_povm_identical(int n);

// The two-element three-qubit POVM for the |psi>|psi_perp> program:
// Pi_+ = Pi_+^{(3)}/2 + |phi_1><phi_1| + |phi_2><phi_2|, Pi_- = 1 - Pi_+.
Povm joint_povm_orthogonal();

// The vectors |phi_1>, |phi_2> entering joint_povm_orthogonal().
std::pair<PureState, PureState> orthogonal_program_vectors();

// Single-qubit POVM induced on the signal by a fixed program state:
// E_eff = Tr_p[(1_s (x) |prog><prog|) E_joint].
Povm effective_povm(const Povm& joint, const PureState& program);

// Same reduction spelled out with partial_trace; kept as a cross-check.
Povm effective_povm_by_partial_trace(const Povm& joint, const PureState& program);

// Closed forms of the effective POVMs.
//   identical:  E_par = 1/(n+1) + n/(n+1) |psi><psi|,  E_perp = n/(n+1) |psi_perp><psi_perp|
//   orthogonal: E_par = (3 - sqrt 3)/6 + (sqrt 3)/3 |psi><psi|, mirrored for perp
Povm effective_povm_formula(ProgramKind kind, int n, const PureState& psi);

struct DiscriminationFidelities {
  double f_par = 0.0;   // <psi|E_par|psi>
  double f_perp = 0.0;  // <psi_perp|E_perp|psi_perp>

  double mean() const { return 0.5 * (f_par + f_perp); }
};

DiscriminationFidelities discrimination_fidelities(const Povm& povm, const PureState& psi);

// (2n+1)/(2n+2) for identical programs, (1 + 1/sqrt 3)/2 for orthogonal.
double mean_fidelity_formula(ProgramKind kind, int n);

// POVM realized by measuring the output of chi in the computational basis:
// E_k = (Tr_out[chi (1 (x) |k><k|)])^T.
Povm induced_povm(const ChoiMatrix& chi);

// Measure-and-prepare Choi matrix of a two-outcome POVM.
ChoiMatrix choi_from_povm(const Povm& povm);

}  // namespace qmm
