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

#include <array>
#include <numeric>
#include <random>

#include "catch_amalgamated.hpp"
#include "qmm/fidelity_operator.hpp"
#include "test_util.hpp"

using namespace qmm;

TEST_CASE("symmetric projector", "[fidelity_operator]") {
  SECTION("m = 1 is the identity") {
    CHECK(max_abs_diff(symmetric_projector(1).matrix(), identity(2)) == 0.0);
  }
  SECTION("m = 2 is the triplet projector") {
    const HermitianOperator p = symmetric_projector(2);
    CHECK(p.trace() == Catch::Approx(3.0).margin(1e-12));
    ComplexVector singlet = ComplexVector::Zero(4);
    singlet(1) = 1.0 / std::sqrt(2.0);
    singlet(2) = -1.0 / std::sqrt(2.0);
    CHECK((p.matrix() * singlet).norm() <= 1e-15);
  }
  SECTION("m = 3 fixes product states psi^{(x)3}") {
    const HermitianOperator p = symmetric_projector(3);
    CHECK(p.trace() == Catch::Approx(4.0).margin(1e-10));
    std::mt19937_64 rng(20);
    for (int i = 0; i < 20; ++i) {
      const PureState s = tensor_power(testing::random_qubit(rng), 3);
      CHECK((p.matrix() * s.amplitudes() - s.amplitudes()).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
  SECTION("matches the permutation-averaging oracle") {
    for (int m = 1; m <= 6; ++m) {
      const ComplexMatrix oracle = testing::symmetrizer_by_permutations(static_cast<std::size_t>(m));
      const HermitianOperator p = symmetric_projector(m);
      CHECK(max_abs_diff(p.matrix(), oracle) <= 1e-12);
      CHECK(max_abs_diff(p.matrix() * p.matrix(), p.matrix()) <= 1e-12);
      CHECK(p.trace() == Catch::Approx(m + 1.0).margin(1e-10));
    }
  }
  SECTION("commutes with every transposition") {
    for (int m = 2; m <= 5; ++m) {
      const ComplexMatrix p = symmetric_projector(m).matrix();
      for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
          std::vector<std::size_t> perm(static_cast<std::size_t>(m));
          std::iota(perm.begin(), perm.end(), 0);
          std::swap(perm[a], perm[b]);
          const ComplexMatrix t = qubit_permutation(static_cast<std::size_t>(m), perm);
          CHECK(max_abs_diff(p * t, t * p) <= 1e-12);
        }
      }
    }
  }
  CHECK_THROWS_AS(symmetric_projector(0), std::invalid_argument);
}

TEST_CASE("analytic R for identical programs", "[fidelity_operator]") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const FidelityOperator r = build_r_analytic(ProgramKind::Identical, n);
    const ComplexMatrix sym = symmetric_projector(n + 1).matrix();
    const ComplexMatrix one_in = input_identity(ProgramKind::Identical, n).matrix();
    CHECK(r.dim_in() == (Eigen::Index{1} << (n + 1)));
    CHECK(max_abs_diff(r.r_plus.matrix(), sym / (2.0 * (n + 2))) <= 1e-12);
    CHECK(max_abs_diff(r.r_plus.matrix() + r.r_minus.matrix(), one_in / (2.0 * (n + 1))) <= 1e-10);
    CHECK(r.r_total.trace() == Catch::Approx(1.0).margin(1e-10));
    CHECK(min_eigenvalue(r.r_plus.matrix()) >= -1e-10);
    CHECK(min_eigenvalue(r.r_minus.matrix()) >= -1e-10);
    // R_- on the symmetric image.
    const double coeff = 1.0 / (2.0 * (n + 1)) - 1.0 / (2.0 * (n + 2));
    CHECK(max_abs_diff(r.r_minus.matrix() * sym, coeff * sym) <= 1e-10);
    // Block structure.
    const ComplexMatrix rebuilt = tensor(r.r_plus.matrix(), basis_projector(2, 0)) +
                                  tensor(r.r_minus.matrix(), basis_projector(2, 1));
    CHECK(max_abs_diff(rebuilt, r.r_total.matrix()) == 0.0);
  }
  SECTION("n = 1 values") {
    const FidelityOperator r = build_r_analytic(ProgramKind::Identical, 1);
    CHECK(r.r_plus.trace() == Catch::Approx(0.5).margin(1e-12));
    CHECK(max_abs_diff(r.r_plus.matrix() + r.r_minus.matrix(), identity(4) / 4.0) <= 1e-12);
  }
}

TEST_CASE("quadrature reproduces the identical closed form", "[fidelity_operator]") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const QuadratureResult q = build_r_quadrature(ProgramKind::Identical, n);
    const FidelityOperator a = build_r_analytic(ProgramKind::Identical, n);
    CHECK(q.last_change < 1e-10);
    CHECK(max_abs_diff(q.op.r_plus.matrix(), a.r_plus.matrix()) <= 1e-10);
    CHECK(max_abs_diff(q.op.r_minus.matrix(), a.r_minus.matrix()) <= 1e-10);
  }
}

TEST_CASE("orthogonal-program R", "[fidelity_operator]") {
  const FidelityOperator r = build_r_analytic(ProgramKind::Orthogonal, 2);
  CHECK(r.dim_in() == 8);
  CHECK(r.r_plus.trace() == Catch::Approx(0.5).margin(1e-10));
  CHECK(r.r_minus.trace() == Catch::Approx(0.5).margin(1e-10));
  CHECK(r.r_total.trace() == Catch::Approx(1.0).margin(1e-10));
  CHECK(min_eigenvalue(r.r_plus.matrix()) >= -1e-10);
  CHECK(min_eigenvalue(r.r_minus.matrix()) >= -1e-10);
}

TEST_CASE("Monte-Carlo R", "[fidelity_operator][slow]") {
  SECTION("single forced sample is the definition") {
    const std::array<BlochPoint, 1> pts{BlochPoint{0.0, 0.0}};
    const FidelityOperator r = build_r_from_points(ProgramKind::Identical, 1, pts);
    const MultimeterInput in = multimeter_input(PureState::basis(1, 0), ProgramKind::Identical, 1);
    CHECK(max_abs_diff(transpose_in_basis(r.r_plus.matrix()), 0.5 * in.parallel.density()) == 0.0);
    CHECK(max_abs_diff(transpose_in_basis(r.r_minus.matrix()), 0.5 * in.perp.density()) == 0.0);
  }
  SECTION("deterministic for a seed") {
    const FidelityOperator a = build_r_montecarlo(ProgramKind::Identical, 1, 1000, 5);
    const FidelityOperator b = build_r_montecarlo(ProgramKind::Identical, 1, 1000, 5);
    CHECK(max_abs_diff(a.r_total.matrix(), b.r_total.matrix()) == 0.0);
  }
  SECTION("trace of R at 10^5 samples") {
    for (int n = 1; n <= 3; ++n) {
      const FidelityOperator r = build_r_montecarlo(ProgramKind::Identical, n, 100'000, 17);
      CHECK(std::abs(r.r_total.trace() - 1.0) <= 1e-2);
    }
    const FidelityOperator o = build_r_montecarlo(ProgramKind::Orthogonal, 2, 100'000, 17);
    CHECK(std::abs(o.r_total.trace() - 1.0) <= 1e-2);
  }
  SECTION("converges to the analytic operator at 10^6 samples") {
    const FidelityOperator mc = build_r_montecarlo(ProgramKind::Identical, 1, 1'000'000, 42);
    const FidelityOperator an = build_r_analytic(ProgramKind::Identical, 1);
    CHECK(max_abs_diff(mc.r_plus.matrix(), an.r_plus.matrix()) <= 5e-3);
    CHECK(max_abs_diff(mc.r_minus.matrix(), an.r_minus.matrix()) <= 5e-3);
    // Tr R_+ = 1/2 via the independent sampling route.
    CHECK(std::abs(mc.r_plus.trace() - 0.5) <= 5e-3);

    const FidelityOperator mo = build_r_montecarlo(ProgramKind::Orthogonal, 2, 1'000'000, 42);
    const FidelityOperator ao = build_r_analytic(ProgramKind::Orthogonal, 2);
    CHECK(max_abs_diff(mo.r_total.matrix(), ao.r_total.matrix()) <= 5e-3);
  }
  CHECK_THROWS_AS(build_r_montecarlo(ProgramKind::Identical, 1, 0, 1), std::invalid_argument);
}
