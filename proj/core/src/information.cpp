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

#include "qmm/information.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmm {

namespace {

double xlog2x(double x) {
  return x > 0.0 ? x * std::log2(x) : 0.0;
}

}  // namespace

double one_minus_binary_entropy(double p) {
  return 1.0 + xlog2x(p) + xlog2x(1.0 - p);
}

InfoReport info_from_fidelities(double f_par, double f_perp) {
  if (!(f_par >= 0.0 && f_par <= 1.0) || !(f_perp >= 0.0 && f_perp <= 1.0)) {
    throw std::invalid_argument("info_from_fidelities: fidelities must lie in [0, 1]");
  }
  InfoReport rep;
  rep.f_par = f_par;
  rep.f_perp = f_perp;
  rep.r_par = (f_par + (1.0 - f_perp)) / 2.0;
  rep.r_perp = (f_perp + (1.0 - f_par)) / 2.0;
  rep.p_par = rep.r_par > 0.0 ? std::min(1.0, f_par / (2.0 * rep.r_par)) : 0.0;
  rep.p_perp = rep.r_perp > 0.0 ? std::min(1.0, f_perp / (2.0 * rep.r_perp)) : 0.0;
  const double info = rep.r_par * one_minus_binary_entropy(rep.p_par) +
                      rep.r_perp * one_minus_binary_entropy(rep.p_perp);
  rep.info_bits = std::clamp(info, 0.0, 1.0);
  return rep;
}

}  // namespace qmm
