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

#include <cmath>
#include <stdexcept>

#include "catch_amalgamated.hpp"
#include "qmm/information.hpp"
#include "qmm/multimeter.hpp"

using namespace qmm;

namespace {

const double kFprime = 0.5 * (1.0 + 1.0 / std::sqrt(3.0));

// Mutual information of the binary channel with equal priors, via the joint table.
double oracle_info(double f_par, double f_perp) {
  const double joint[2][2] = {{0.5 * f_par, 0.5 * (1.0 - f_par)}, {0.5 * (1.0 - f_perp), 0.5 * f_perp}};
  double info = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double py = joint[0][y] + joint[1][y];
      if (joint[x][y] > 0.0) info += joint[x][y] * std::log2(joint[x][y] / (0.5 * py));
    }
  }
  return info;
}

}  // namespace

TEST_CASE("published information values", "[information]") {
  CHECK(std::abs(info_from_fidelities(1.0, 0.5).info_bits - 0.311) <= 5e-4);
  CHECK(std::abs(info_from_fidelities(0.75, 0.75).info_bits - 0.189) <= 5e-4);
  CHECK(std::abs(info_from_fidelities(1.0, 2.0 / 3.0).info_bits - 0.459) <= 5e-4);
  CHECK(std::abs(info_from_fidelities(kFprime, kFprime).info_bits - 0.256) <= 5e-4);
  CHECK(info_from_fidelities(1.0, 1.0).info_bits == Catch::Approx(1.0).margin(1e-15));
  CHECK(info_from_fidelities(0.5, 0.5).info_bits == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("rates and conditional probabilities", "[information]") {
  const InfoReport rep = info_from_fidelities(1.0, 0.5);
  CHECK(rep.r_par == Catch::Approx(0.75));
  CHECK(rep.p_par == Catch::Approx(2.0 / 3.0));
  CHECK(rep.r_perp == Catch::Approx(0.25));
  CHECK(rep.p_perp == Catch::Approx(1.0));
}

TEST_CASE("information grid properties", "[information]") {
  for (int i = 0; i <= 200; ++i) {
    for (int j = 0; j <= 200; ++j) {
      const double a = i / 200.0;
      const double b = j / 200.0;
      const InfoReport rep = info_from_fidelities(a, b);
      REQUIRE(rep.info_bits >= 0.0);
      REQUIRE(rep.info_bits <= 1.0);
      REQUIRE(std::abs(rep.r_par + rep.r_perp - 1.0) <= 1e-12);
      REQUIRE(std::abs(rep.r_par * rep.p_par + rep.r_perp * rep.p_perp - 0.5 * (a + b)) <= 1e-12);
      REQUIRE(std::abs(rep.info_bits - info_from_fidelities(b, a).info_bits) <= 1e-12);
      // Matches the mutual information of the induced binary channel.
      REQUIRE(std::abs(rep.info_bits - oracle_info(a, b)) <= 1e-12);
    }
  }
}

TEST_CASE("ordering of the published values", "[information]") {
  const double i_n2 = info_from_fidelities(1.0, 2.0 / 3.0).info_bits;
  const double i_n1 = info_from_fidelities(1.0, 0.5).info_bits;
  const double i_orth = info_from_fidelities(kFprime, kFprime).info_bits;
  const double i_sym = info_from_fidelities(0.75, 0.75).info_bits;
  CHECK(i_n2 > i_n1);
  CHECK(i_n1 > i_orth);
  CHECK(i_orth > i_sym);
}

TEST_CASE("information from effective POVMs", "[information][multimeter]") {
  const PureState psi = PureState::basis(1, 0);
  const auto info_of = [&](ProgramKind kind, int n) {
    const DiscriminationFidelities f = discrimination_fidelities(effective_povm_formula(kind, n, psi), psi);
    return info_from_fidelities(f.f_par, f.f_perp).info_bits;
  };
  CHECK(std::abs(info_of(ProgramKind::Identical, 1) - 0.311) <= 5e-4);
  CHECK(std::abs(info_of(ProgramKind::Identical, 2) - 0.459) <= 5e-4);
  CHECK(std::abs(info_of(ProgramKind::Orthogonal, 2) - 0.256) <= 5e-4);
}

TEST_CASE("information input validation", "[information]") {
  CHECK_THROWS_AS(info_from_fidelities(-0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(info_from_fidelities(0.5, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(info_from_fidelities(std::nan(""), 0.5), std::invalid_argument);
  CHECK(one_minus_binary_entropy(0.0) == 1.0);
  CHECK(one_minus_binary_entropy(1.0) == 1.0);
  CHECK(one_minus_binary_entropy(0.5) == Catch::Approx(0.0).margin(1e-15));
}
