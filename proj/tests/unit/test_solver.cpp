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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "catch_amalgamated.hpp"
#include "qmm/multimeter.hpp"
#include "qmm/solver.hpp"
#include "test_util.hpp"

using namespace qmm;

namespace {

bool fidelity_non_decreasing(const SolveResult& res, double start) {
  double prev = start;
  for (const IterationRecord& rec : res.log) {
    if (rec.fidelity < prev - 1e-12) return false;
    prev = rec.fidelity;
  }
  return true;
}

}  // namespace

TEST_CASE("SolverConfig validation", "[solver]") {
  CHECK_NOTHROW(SolverConfig{}.validate());
  SolverConfig bad;
  bad.convergence_tol = 1e-15;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {};
  bad.max_iters = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {};
  bad.pinv_cutoff = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("closed-form optimum", "[solver]") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const ChoiMatrix chi = closed_form_chi(ProgramKind::Identical, n);
    CHECK(max_abs_diff(chi.trace_out(), identity(chi.dim_in())) <= 1e-15);
    const FidelityOperator r = build_r_analytic(ProgramKind::Identical, n);
    const OptimalityCertificate cert = certify(chi, r, 1e-9);
    CHECK(cert.passed);
    CHECK(cert.residual_eq10 <= 1e-9);
    CHECK(cert.fidelity == Catch::Approx(mean_fidelity_formula(ProgramKind::Identical, n)).margin(1e-10));
    CHECK(max_abs_diff(cert.lambda_op.matrix(), lambda_formula_identical(n).matrix()) <= 1e-9);

    const ComplexMatrix sym = symmetric_projector(n + 1).matrix();
    const ComplexMatrix minus_in = input_identity(ProgramKind::Identical, n).matrix() - sym;
    const ComplexMatrix a1 = certificate_block_a1(cert, r);
    const ComplexMatrix a2 = certificate_block_a2(cert, r);
    CHECK(max_abs_diff(a1, n * sym / (2.0 * (n + 1) * (n + 2))) <= 1e-9);
    CHECK(max_abs_diff(a2, minus_in / (2.0 * (n + 1))) <= 1e-9);
    CHECK(min_eigenvalue(a1) >= -1e-9);
    CHECK(min_eigenvalue(a2) >= -1e-9);
    // The gap operator's spectrum is {0, n/(2(n+1)(n+2)), 1/(2(n+1))}.
    const EigenDecomposition gap = eig_hermitian(
        hermitize(tensor(cert.lambda_op.matrix(), identity(2)) - r.r_total.matrix()));
    for (Eigen::Index i = 0; i < gap.values.size(); ++i) {
      const double w = gap.values(i);
      const bool known = std::abs(w) <= 1e-9 ||
                         std::abs(w - n / (2.0 * (n + 1) * (n + 2))) <= 1e-9 ||
                         std::abs(w - 1.0 / (2.0 * (n + 1))) <= 1e-9;
      CHECK(known);
    }
  }
  SECTION("n = 2 blocks") {
    const FidelityOperator r = build_r_analytic(ProgramKind::Identical, 2);
    const OptimalityCertificate cert = certify(closed_form_chi(ProgramKind::Identical, 2), r, 1e-9);
    const ComplexMatrix sym = symmetric_projector(3).matrix();
    CHECK(max_abs_diff(certificate_block_a1(cert, r), sym / 12.0) <= 1e-12);
    CHECK(max_abs_diff(certificate_block_a2(cert, r),
                       (input_identity(ProgramKind::Identical, 2).matrix() - sym) / 6.0) <= 1e-12);
  }
  SECTION("orthogonal") {
    const ChoiMatrix chi = closed_form_chi(ProgramKind::Orthogonal, 2);
    CHECK(max_abs_diff(chi.trace_out(), identity(8)) <= 1e-12);
    const OptimalityCertificate cert = certify(chi, build_r_analytic(ProgramKind::Orthogonal, 2), 1e-9);
    CHECK(cert.passed);
    CHECK(cert.fidelity == Catch::Approx(0.5 * (1.0 + 1.0 / std::sqrt(3.0))).margin(1e-10));
  }
}

TEST_CASE("certificate rejects a sub-optimal map", "[solver]") {
  const FidelityOperator r = build_r_analytic(ProgramKind::Identical, 1);
  const OptimalityCertificate cert = certify(depolarizing_channel(4, 2), r, 1e-7);
  CHECK_FALSE(cert.passed);
  CHECK(cert.fidelity == Catch::Approx(0.5).margin(1e-12));
  CHECK(cert.residual_eq10 > 1e-3);
}

TEST_CASE("iterative solver", "[solver]") {
  SECTION("identical programs reach (2n+1)/(2n+2)") {
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(n);
      const FidelityOperator r = build_r_analytic(ProgramKind::Identical, n);
      const SolveResult res = solve(r);
      CHECK(res.converged);
      CHECK(res.certificate.passed);
      CHECK(res.certificate.fidelity ==
            Catch::Approx(mean_fidelity_formula(ProgramKind::Identical, n)).margin(1e-6));
      CHECK(res.certificate.residual_eq10 <= 1e-7);
      CHECK(res.certificate.min_eig_eq11 >= -1e-7);
      CHECK(fidelity_non_decreasing(res, 0.5));
      CHECK(static_cast<int>(res.log.size()) == res.iterations);
      // Matrix-level agreement is not required; fidelity-level is.
      const double closed = mean_fidelity(closed_form_chi(ProgramKind::Identical, n), r);
      CHECK(std::abs(res.certificate.fidelity - closed) <= 1e-6);
    }
  }
  SECTION("orthogonal program") {
    const FidelityOperator r = build_r_analytic(ProgramKind::Orthogonal, 2);
    const SolveResult res = solve(r);
    CHECK(res.certificate.passed);
    CHECK(res.certificate.fidelity == Catch::Approx(0.5 * (1.0 + 1.0 / std::sqrt(3.0))).margin(1e-6));
    CHECK(fidelity_non_decreasing(res, 0.5));
  }
  SECTION("monotone from a random start") {
    std::mt19937_64 rng(40);
    const FidelityOperator r = build_r_analytic(ProgramKind::Identical, 2);
    for (int i = 0; i < 5; ++i) {
      const ChoiMatrix start = testing::random_choi(rng, 8, 2);
      const SolveResult res = solve(r, {}, start);
      CHECK(fidelity_non_decreasing(res, mean_fidelity(start, r)));
      CHECK(res.certificate.fidelity == Catch::Approx(5.0 / 6.0).margin(1e-6));
    }
  }
  SECTION("forced non-convergence") {
    SolverConfig cfg;
    cfg.max_iters = 1;
    const SolveResult res = solve(build_r_analytic(ProgramKind::Identical, 1), cfg);
    CHECK_FALSE(res.converged);
    CHECK_FALSE(res.certificate.passed);
    CHECK(res.iterations == 1);
  }
  SECTION("starting point dimension must match") {
    CHECK_THROWS_AS(solve(build_r_analytic(ProgramKind::Identical, 1), {}, depolarizing_channel(8, 2)),
                    DimensionError);
  }
}

TEST_CASE("iteration log CSV", "[solver]") {
  const std::vector<IterationRecord> log{{1, 0.7, 0.1, -0.01}, {2, 0.75, 1e-11, 0.0}};
  const std::string csv = iteration_log_csv(log);
  CHECK(csv.rfind("iter,fidelity,step_norm,min_eig\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
