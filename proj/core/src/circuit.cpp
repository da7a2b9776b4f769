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

#include "qmm/circuit.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qmm {

GateCircuit::GateCircuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) throw std::invalid_argument("GateCircuit: needs at least one wire");
}

GateCircuit& GateCircuit::hadamard(std::size_t wire) {
  return add({GateKind::Hadamard, {wire}, {}});
}

GateCircuit& GateCircuit::fredkin(std::size_t control, std::size_t target_a,
                                  std::size_t target_b) {
  return add({GateKind::Fredkin, {control, target_a, target_b}, {}});
}

GateCircuit& GateCircuit::unitary(std::size_t wire, ComplexMatrix u) {
  return add({GateKind::Unitary, {wire}, std::move(u)});
}

GateCircuit& GateCircuit::add(Gate gate) {
  for (std::size_t w : gate.wires) {
    if (w >= num_qubits_) throw std::invalid_argument("GateCircuit: wire index out of range");
  }
  switch (gate.kind) {
    case GateKind::Hadamard:
      if (gate.wires.size() != 1) throw std::invalid_argument("Hadamard acts on one wire");
      break;
    case GateKind::Unitary:
      if (gate.wires.size() != 1) throw std::invalid_argument("unitary gate acts on one wire");
      if (gate.unitary.rows() != 2 || gate.unitary.cols() != 2 ||
          !is_unitary(gate.unitary, tol::kHermitian)) {
        throw std::invalid_argument("unitary gate needs a 2x2 unitary matrix");
      }
      break;
    case GateKind::Fredkin:
      if (gate.wires.size() != 3 || gate.wires[0] == gate.wires[1] ||
          gate.wires[0] == gate.wires[2] || gate.wires[1] == gate.wires[2]) {
        throw std::invalid_argument("Fredkin needs one control and two distinct targets");
      }
      break;
  }
  gates_.push_back(std::move(gate));
  return *this;
}

namespace {

void apply_single(ComplexVector& a, std::size_t n, std::size_t wire, const ComplexMatrix& u) {
  const std::size_t mask = std::size_t{1} << (n - 1 - wire);
  const auto dim = static_cast<std::size_t>(a.size());
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | mask);
    const Complex x0 = a(i0);
    const Complex x1 = a(i1);
    a(i0) = u(0, 0) * x0 + u(0, 1) * x1;
    a(i1) = u(1, 0) * x0 + u(1, 1) * x1;
  }
}

void apply_fredkin(ComplexVector& a, std::size_t n, std::size_t c, std::size_t t1,
                   std::size_t t2) {
  const std::size_t mc = std::size_t{1} << (n - 1 - c);
  const std::size_t m1 = std::size_t{1} << (n - 1 - t1);
  const std::size_t m2 = std::size_t{1} << (n - 1 - t2);
  const auto dim = static_cast<std::size_t>(a.size());
  for (std::size_t i = 0; i < dim; ++i) {
    // Visit each swapped pair once, from the side with t1 = 1, t2 = 0.
    if ((i & mc) && (i & m1) && !(i & m2)) {
      const std::size_t j = (i & ~m1) | m2;
      std::swap(a(static_cast<Eigen::Index>(i)), a(static_cast<Eigen::Index>(j)));
    }
  }
}

ComplexMatrix hadamard_matrix() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2);
  h << s, s, s, -s;
  return h;
}

}  // namespace

PureState run(const GateCircuit& circuit, const PureState& input) {
  if (input.num_qubits() != circuit.num_qubits()) {
    throw DimensionError("run: input register does not match the circuit");
  }
  const std::size_t n = circuit.num_qubits();
  ComplexVector a = input.amplitudes();
  const ComplexMatrix h = hadamard_matrix();
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::Hadamard:
        apply_single(a, n, g.wires[0], h);
        break;
      case GateKind::Unitary:
        apply_single(a, n, g.wires[0], g.unitary);
        break;
      case GateKind::Fredkin:
        apply_fredkin(a, n, g.wires[0], g.wires[1], g.wires[2]);
        break;
    }
  }
  return PureState(std::move(a));
}

GateCircuit swap_test_circuit() {
  GateCircuit c(3);
  c.hadamard(0).fredkin(0, 1, 2).hadamard(0);
  return c;
}

double ancilla_p0(const GateCircuit& circuit, const PureState& signal,
                  const PureState& program) {
  const PureState input = PureState::basis(1, 0) * signal * program;
  const PureState out = run(circuit, input);
  const Eigen::Index half = out.dim() / 2;  // ancilla is the most significant qubit
  return out.amplitudes().head(half).squaredNorm();
}

OutcomeProbs swap_test_outcome_probs(const PureState& signal, const PureState& program) {
  if (signal.num_qubits() != 1 || program.num_qubits() != 1) {
    throw DimensionError("swap_test_outcome_probs: signal and program are single qubits");
  }
  const double p0 = ancilla_p0(swap_test_circuit(), signal, program);
  return {p0, 1.0 - p0};
}

std::uint64_t sample_zero_outcomes(double p0, std::uint64_t shots, std::uint64_t seed) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("sample_zero_outcomes: p0 not in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p0);
  std::uint64_t zeros = 0;
  for (std::uint64_t s = 0; s < shots; ++s) zeros += coin(rng) ? 1 : 0;
  return zeros;
}

std::vector<PureState> standard_probe_states() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector plus(2);
  plus << s, s;
  ComplexVector plus_i(2);
  plus_i << s, Complex(0.0, s);
  return {PureState::basis(1, 0), PureState::basis(1, 1), PureState::normalized(plus),
          PureState::normalized(plus_i)};
}

Povm tomographic_povm(const MeasurementProcedure& procedure,
                      std::span<const PureState> probes) {
  if (probes.size() < 4) throw std::invalid_argument("tomographic_povm: needs >= 4 probes");
  // E_0 = sum_k c_k B_k over the Hermitian basis {1, X, Y, Z}; p_j = Tr[E_0 rho_j].
  std::vector<ComplexMatrix> basis(4, ComplexMatrix::Zero(2, 2));
  basis[0] << 1, 0, 0, 1;
  basis[1] << 0, 1, 1, 0;
  basis[2] << 0, Complex(0, -1), Complex(0, 1), 0;
  basis[3] << 1, 0, 0, -1;

  const auto m = static_cast<Eigen::Index>(probes.size());
  Eigen::MatrixXd a(m, 4);
  Eigen::VectorXd p(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const PureState& probe = probes[static_cast<std::size_t>(j)];
    if (probe.num_qubits() != 1) throw DimensionError("tomographic_povm: probes are qubits");
    const ComplexMatrix rho = probe.density();
    for (Eigen::Index k = 0; k < 4; ++k) {
      a(j, k) = (basis[static_cast<std::size_t>(k)] * rho).trace().real();
    }
    p(j) = procedure(probe);
  }

  const Eigen::MatrixXd gram = a.transpose() * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues()(0);
  const double hi = es.eigenvalues()(3);
  if (!(lo > 1e-10 * hi)) {
    throw std::invalid_argument("tomographic_povm: probe set is not informationally complete");
  }
  const Eigen::VectorXd c = a.colPivHouseholderQr().solve(p);

  ComplexMatrix e0 = ComplexMatrix::Zero(2, 2);
  for (std::size_t k = 0; k < 4; ++k) e0 += c(static_cast<Eigen::Index>(k)) * basis[k];
  std::vector<HermitianOperator> elements;
  elements.push_back(HermitianOperator::from_hermitized(e0));
  elements.push_back(HermitianOperator::from_hermitized(identity(2) - e0));
  return Povm(std::move(elements), {"par", "perp"});
}

}  // namespace qmm
