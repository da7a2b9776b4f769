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

#include "qmm/multimeter.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "qmm/fidelity_operator.hpp"

namespace qmm {

Povm::Povm(std::vector<HermitianOperator> elements, std::vector<std::string> labels)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
  if (elements_.empty()) throw InvariantError("Povm: no elements");
  if (labels_.size() != elements_.size()) {
    throw InvariantError("Povm: one label per element required");
  }
  for (const HermitianOperator& e : elements_) {
    if (e.dim() != elements_.front().dim()) throw DimensionError("Povm: elements differ in size");
    const double lo = min_eigenvalue(e.matrix());
    if (lo < -tol::kPovm) {
      std::ostringstream msg;
      msg << "Povm: element not PSD (min eigenvalue " << lo << ")";
      throw InvariantError(msg.str());
    }
  }
  const double residual = completeness_residual();
  if (residual > tol::kPovm) {
    std::ostringstream msg;
    msg << "Povm: elements do not sum to identity (residual " << residual << ")";
    throw InvariantError(msg.str());
  }
}

double Povm::completeness_residual() const {
  ComplexMatrix sum = ComplexMatrix::Zero(dim(), dim());
  for (const HermitianOperator& e : elements_) sum += e.matrix();
  return max_abs_diff(sum, identity(dim()));
}

namespace {

std::vector<std::string> two_labels() {
  return {"par", "perp"};
}

Povm two_outcome(ComplexMatrix par) {
  ComplexMatrix perp = identity(par.rows()) - par;
  std::vector<HermitianOperator> elements;
  elements.emplace_back(std::move(par));
  elements.emplace_back(std::move(perp));
  return Povm(std::move(elements), two_labels());
}

}  // namespace

Povm joint_povm_identical(int n) {
  check_program(ProgramKind::Identical, n);
  return two_outcome(symmetric_projector(n + 1).matrix());
}

std::pair<PureState, PureState> orthogonal_program_vectors() {
  const double s3 = std::sqrt(3.0);
  const double norm = 1.0 / (2.0 * s3);
  // Basis index = 4 s + 2 p1 + p2.
  ComplexVector phi1 = ComplexVector::Zero(8);
  phi1(0b001) = (s3 + 1.0) * norm;
  phi1(0b010) = -(s3 - 1.0) * norm;
  phi1(0b100) = -2.0 * norm;
  ComplexVector phi2 = ComplexVector::Zero(8);
  phi2(0b110) = (s3 + 1.0) * norm;
  phi2(0b101) = -(s3 - 1.0) * norm;
  phi2(0b011) = -2.0 * norm;
  // PureState asserts the normalization.
  return {PureState(std::move(phi1)), PureState(std::move(phi2))};
}

Povm joint_povm_orthogonal() {
  const auto [phi1, phi2] = orthogonal_program_vectors();
  ComplexMatrix par = 0.5 * symmetric_projector(3).matrix() + phi1.density() + phi2.density();
  return two_outcome(hermitize(par));
}

Povm effective_povm(const Povm& joint, const PureState& program) {
  if (joint.dim() != 2 * program.dim()) {
    throw DimensionError("effective_povm: joint POVM must act on signal (x) program");
  }
  // E_eff = M^dagger E M with M = 1_s (x) |prog>.
  const ComplexMatrix m = tensor(identity(2), ComplexMatrix(program.amplitudes()));
  std::vector<HermitianOperator> elements;
  elements.reserve(joint.size());
  for (const HermitianOperator& e : joint.elements()) {
    elements.push_back(HermitianOperator::from_hermitized(m.adjoint() * e.matrix() * m));
  }
  return Povm(std::move(elements), joint.labels());
}

Povm effective_povm_by_partial_trace(const Povm& joint, const PureState& program) {
  if (joint.dim() != 2 * program.dim()) {
    throw DimensionError("effective_povm: joint POVM must act on signal (x) program");
  }
  const ComplexMatrix select = tensor(identity(2), program.density());
  const std::array<std::size_t, 2> dims{2, static_cast<std::size_t>(program.dim())};
  const std::array<std::size_t, 1> keep{0};
  std::vector<HermitianOperator> elements;
  for (const HermitianOperator& e : joint.elements()) {
    elements.push_back(
        HermitianOperator::from_hermitized(partial_trace(select * e.matrix(), dims, keep)));
  }
  return Povm(std::move(elements), joint.labels());
}

Povm effective_povm_formula(ProgramKind kind, int n, const PureState& psi) {
  check_program(kind, n);
  if (psi.num_qubits() != 1) throw DimensionError("effective_povm_formula: expects one qubit");
  const PureState perp = orthogonal_state(psi);
  std::vector<HermitianOperator> elements;
  if (kind == ProgramKind::Identical) {
    const double p = n / (n + 1.0);
    elements.push_back(HermitianOperator::from_hermitized(identity(2) / (n + 1.0) +
                                                          p * psi.density()));
    elements.push_back(HermitianOperator::from_hermitized(p * perp.density()));
  } else {
    const double s3 = std::sqrt(3.0);
    const double base = (3.0 - s3) / 6.0;
    elements.push_back(
        HermitianOperator::from_hermitized(base * identity(2) + (s3 / 3.0) * psi.density()));
    elements.push_back(
        HermitianOperator::from_hermitized(base * identity(2) + (s3 / 3.0) * perp.density()));
  }
  return Povm(std::move(elements), two_labels());
}

DiscriminationFidelities discrimination_fidelities(const Povm& povm, const PureState& psi) {
  if (povm.size() != 2 || povm.dim() != 2 || psi.num_qubits() != 1) {
    throw DimensionError("discrimination_fidelities: expects a two-outcome qubit POVM");
  }
  const PureState perp = orthogonal_state(psi);
  auto expect = [](const HermitianOperator& e, const PureState& s) {
    return (s.amplitudes().adjoint() * e.matrix() * s.amplitudes())(0).real();
  };
  return {expect(povm[0], psi), expect(povm[1], perp)};
}

double mean_fidelity_formula(ProgramKind kind, int n) {
  check_program(kind, n);
  if (kind == ProgramKind::Orthogonal) return 0.5 * (1.0 + 1.0 / std::sqrt(3.0));
  return (2.0 * n + 1.0) / (2.0 * n + 2.0);
}

Povm induced_povm(const ChoiMatrix& chi) {
  std::vector<HermitianOperator> elements;
  std::vector<std::string> labels;
  for (Eigen::Index k = 0; k < chi.dim_out(); ++k) {
    const ComplexMatrix select = tensor(identity(chi.dim_in()), basis_projector(chi.dim_out(), k));
    const ComplexMatrix block = trace_out(chi.matrix() * select, chi.dim_in(), chi.dim_out());
    elements.push_back(HermitianOperator::from_hermitized(transpose_in_basis(block)));
    labels.push_back(std::to_string(k));
  }
  if (chi.dim_out() == 2) labels = two_labels();
  return Povm(std::move(elements), std::move(labels));
}

ChoiMatrix choi_from_povm(const Povm& povm) {
  std::vector<ComplexMatrix> elements;
  for (const HermitianOperator& e : povm.elements()) elements.push_back(e.matrix());
  return measure_and_prepare(elements);
}

}  // namespace qmm
