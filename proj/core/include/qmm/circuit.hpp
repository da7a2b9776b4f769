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
#include <functional>
#include <span>
#include <vector>

#include "qmm/multimeter.hpp"
#include "qmm/operator_core.hpp"

namespace qmm {

enum class GateKind { Hadamard, Fredkin, Unitary };

struct Gate {
  GateKind kind = GateKind::Hadamard;
  std::vector<std::size_t> wires;  // Fredkin: {control, target_a, target_b}
  ComplexMatrix unitary;           // 2x2, only for GateKind::Unitary
};

// Ordered gate list on a fixed number of wires; wire 0 is the most
// significant qubit of the state vector.
class GateCircuit {
 public:
  explicit GateCircuit(std::size_t num_qubits);

  GateCircuit& hadamard(std::size_t wire);
  GateCircuit& fredkin(std::size_t control, std::size_t target_a, std::size_t target_b);
  GateCircuit& unitary(std::size_t wire, ComplexMatrix u);
  // Validates wires (and unitarity) before appending.
  GateCircuit& add(Gate gate);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
};

PureState run(const GateCircuit& circuit, const PureState& input);

// Ancilla (wire 0) -> H -> Fredkin(0; 1, 2) -> H, signal on wire 1 and
// program on wire 2.
GateCircuit swap_test_circuit();

// Probability of ancilla outcome 0 after running `circuit` on
// |0>_a |signal> |program>.
double ancilla_p0(const GateCircuit& circuit, const PureState& signal, const PureState& program);

struct OutcomeProbs {
  double p0 = 0.0;
  double p1 = 0.0;
};

// Exact ancilla statistics of the swap-test circuit; p0 = (1 + |<s|p>|^2)/2.
OutcomeProbs swap_test_outcome_probs(const PureState& signal, const PureState& program);

// Number of ancilla-0 outcomes in `shots` seeded Bernoulli draws.
std::uint64_t sample_zero_outcomes(double p0, std::uint64_t shots, std::uint64_t seed);

// Probability of outcome 0 for a single-qubit probe state.
using MeasurementProcedure = std::function<double(const PureState&)>;

// {|0>, |1>, |+>, |+i>}
std::vector<PureState> standard_probe_states();

// Least-squares reconstruction of the two-outcome qubit POVM {E_0, 1 - E_0}
// from outcome-0 probabilities on informationally complete probes.
// Throws std::invalid_argument if the probes do not span 2x2 Hermitian
// operators.
Povm tomographic_povm(const MeasurementProcedure& procedure, std::span<const PureState> probes);

}  // namespace qmm
