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
#include <string>
#include <utility>
#include <vector>

#include "qmm/operator_core.hpp"

namespace qmm {

// Point on the Bloch sphere: theta in [0, pi], phi in [0, 2 pi).
struct BlochPoint {
  double theta = 0.0;
  double phi = 0.0;
};

// Which program register drives the multimeter.
//   Identical:  |psi>^{(x) n}
//   Orthogonal: |psi>|psi_perp>  (n is fixed to 2)
enum class ProgramKind { Identical, Orthogonal };

const char* to_string(ProgramKind kind);
ProgramKind program_kind_from_string(const std::string& name);

// Validates (kind, n): n >= 1, and n == 2 for Orthogonal.
void check_program(ProgramKind kind, int n);

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
PureState bloch_state(const BlochPoint& p);

// (-conj(b), conj(a)) for psi = (a, b).
PureState orthogonal_state(const PureState& psi);

// Program register state for psi.
PureState program_state(const PureState& psi, ProgramKind kind, int n);

struct MultimeterInput {
  PureState parallel;  // |Psi>      = |psi>      (x) program
  PureState perp;      // |Psi_perp> = |psi_perp> (x) program
};

// Signal qubit first, then the program qubits.
MultimeterInput multimeter_input(const PureState& psi, ProgramKind kind, int n);

// Uniform points on the sphere (cos theta and phi uniform). The seed fully
// determines the sequence.
std::vector<BlochPoint> sample_bloch_uniform(std::uint64_t seed, std::size_t count);

}  // namespace qmm
