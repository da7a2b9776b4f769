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

#include "qmm/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace qmm {

const char* to_string(ProgramKind kind) {
  switch (kind) {
    case ProgramKind::Identical:
      return "identical";
    case ProgramKind::Orthogonal:
      return "orthogonal";
  }
  return "unknown";
}

ProgramKind program_kind_from_string(const std::string& name) {
  if (name == "identical") return ProgramKind::Identical;
  if (name == "orthogonal") return ProgramKind::Orthogonal;
  throw std::invalid_argument("unknown program kind '" + name + "'");
}

void check_program(ProgramKind kind, int n) {
  if (n < 1) throw std::invalid_argument("program register needs n >= 1 qubits");
  if (kind == ProgramKind::Orthogonal && n != 2) {
    throw std::invalid_argument("orthogonal program |psi>|psi_perp> requires n == 2");
  }
}

PureState bloch_state(const BlochPoint& p) {
  constexpr double pi = std::numbers::pi;
  if (!(p.theta >= 0.0 && p.theta <= pi) || !(p.phi >= 0.0 && p.phi < 2.0 * pi)) {
    throw std::invalid_argument("bloch_state: angles out of range");
  }
  ComplexVector a(2);
  a(0) = std::cos(p.theta / 2.0);
  a(1) = std::polar(std::sin(p.theta / 2.0), p.phi);
  return PureState::normalized(std::move(a));
}

PureState orthogonal_state(const PureState& psi) {
  if (psi.num_qubits() != 1) throw DimensionError("orthogonal_state: expects one qubit");
  const ComplexVector& a = psi.amplitudes();
  ComplexVector out(2);
  out(0) = -std::conj(a(1));
  out(1) = std::conj(a(0));
  return PureState(std::move(out));
}

PureState program_state(const PureState& psi, ProgramKind kind, int n) {
  check_program(kind, n);
  if (psi.num_qubits() != 1) throw DimensionError("program_state: expects one qubit");
  if (kind == ProgramKind::Orthogonal) return psi * orthogonal_state(psi);
  return tensor_power(psi, static_cast<std::size_t>(n));
}

MultimeterInput multimeter_input(const PureState& psi, ProgramKind kind, int n) {
  const PureState program = program_state(psi, kind, n);
  return {psi * program, orthogonal_state(psi) * program};
}

std::vector<BlochPoint> sample_bloch_uniform(std::uint64_t seed, std::size_t count) {
  if (count == 0) throw std::invalid_argument("sample_bloch_uniform: count must be >= 1");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> z_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> phi_dist(0.0, two_pi);
  std::vector<BlochPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double z = z_dist(rng);
    double phi = phi_dist(rng);
    if (phi >= two_pi) phi = 0.0;
    out.push_back({std::acos(std::clamp(z, -1.0, 1.0)), phi});
  }
  return out;
}

}  // namespace qmm
