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

namespace qmm {

// Average information per bit for a two-outcome discrimination of |psi> and
// |psi_perp> sent with equal priors.
//
//   r_par  = [F_par + (1 - F_perp)] / 2,   p_par  = F_par  / (2 r_par)
//   r_perp = [F_perp + (1 - F_par)] / 2,   p_perp = F_perp / (2 r_perp)
//   I = sum_i r_i [1 + p_i log2 p_i + (1 - p_i) log2 (1 - p_i)]
//
// x log2 x is taken as 0 at x = 0; a zero rate contributes nothing and its
// p_i is reported as 0.
struct InfoReport {
  double f_par = 0.0;
  double f_perp = 0.0;
  double r_par = 0.0;
  double r_perp = 0.0;
  double p_par = 0.0;
  double p_perp = 0.0;
  double info_bits = 0.0;
};

// Throws std::invalid_argument for fidelities outside [0, 1].
InfoReport info_from_fidelities(double f_par, double f_perp);

// 1 - H2(p) in bits.
double one_minus_binary_entropy(double p);

}  // namespace qmm
