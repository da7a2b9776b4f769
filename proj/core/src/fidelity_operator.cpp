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

#include "qmm/fidelity_operator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmm {

namespace {

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Accumulates 1/2 * weight * (|Psi><Psi|)^T into plus and likewise for perp.
void accumulate(ComplexMatrix& plus, ComplexMatrix& minus, const PureState& psi,
                ProgramKind kind, int n, double weight) {
  const MultimeterInput in = multimeter_input(psi, kind, n);
  plus.noalias() += (0.5 * weight) * (in.parallel.amplitudes().conjugate() *
                                      in.parallel.amplitudes().transpose());
  minus.noalias() += (0.5 * weight) * (in.perp.amplitudes().conjugate() *
                                       in.perp.amplitudes().transpose());
}

Eigen::Index input_dim(int n) {
  return Eigen::Index{1} << (n + 1);
}

// (P_k(x), P_{k-1}(x)) by the three-term recurrence.
std::pair<double, double> legendre(int k, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int j = 2; j <= k; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

// Nodes and weights of the k-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int k, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(k, 0.0);
  weights.assign(k, 0.0);
  for (int i = 0; i < (k + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (k + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [pk, pkm1] = legendre(k, x);
      const double dp = k * (x * pk - pkm1) / (x * x - 1.0);
      const double dx = pk / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [pk, pkm1] = legendre(k, x);
    const double dp = k * (x * pk - pkm1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[k - 1 - i] = x;
    weights[i] = w;
    weights[k - 1 - i] = w;
  }
}

FidelityOperator quadrature_once(ProgramKind kind, int n, int theta_nodes, int phi_nodes) {
  const Eigen::Index dim = input_dim(n);
  ComplexMatrix plus = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix minus = ComplexMatrix::Zero(dim, dim);
  std::vector<double> z;
  std::vector<double> wz;
  gauss_legendre(theta_nodes, z, wz);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < theta_nodes; ++i) {
    const double theta = std::acos(z[i]);
    for (int j = 0; j < phi_nodes; ++j) {
      const double phi = two_pi * j / phi_nodes;
      // Normalized measure: (1/2) dz x (1/(2 pi)) dphi.
      const double w = 0.5 * wz[i] / phi_nodes;
      accumulate(plus, minus, bloch_state({theta, phi}), kind, n, w);
    }
  }
  return make_fidelity_operator(kind, n, hermitize(plus), hermitize(minus));
}

}  // namespace

FidelityOperator make_fidelity_operator(ProgramKind kind, int n, ComplexMatrix r_plus,
                                        ComplexMatrix r_minus) {
  check_program(kind, n);
  if (r_plus.rows() != input_dim(n) || r_minus.rows() != input_dim(n)) {
    throw DimensionError("make_fidelity_operator: blocks must act on 2^{n+1} dims");
  }
  constexpr double psd_tol = 1e-10;
  if (!is_psd(r_plus, psd_tol) || !is_psd(r_minus, psd_tol)) {
    throw InvariantError("make_fidelity_operator: R blocks must be PSD");
  }
  FidelityOperator op;
  op.n_program = n;
  op.program_kind = kind;
  op.r_total = HermitianOperator(tensor(r_plus, basis_projector(2, 0)) +
                                 tensor(r_minus, basis_projector(2, 1)));
  op.r_plus = HermitianOperator(std::move(r_plus));
  op.r_minus = HermitianOperator(std::move(r_minus));
  return op;
}

HermitianOperator symmetric_projector(int m) {
  if (m < 1) throw std::invalid_argument("symmetric_projector: m must be >= 1");
  if (m > 20) throw std::invalid_argument("symmetric_projector: m too large for dense storage");
  const Eigen::Index dim = Eigen::Index{1} << m;
  // P = sum_k |D_k><D_k| with Dicke states |D_k> = C(m,k)^{-1/2} sum_{|x|=k} |x>.
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  std::vector<double> inv_binom(m + 1);
  for (int k = 0; k <= m; ++k) inv_binom[k] = 1.0 / binomial(m, k);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const int wx = std::popcount(static_cast<std::uint64_t>(x));
    for (Eigen::Index y = 0; y < dim; ++y) {
      if (std::popcount(static_cast<std::uint64_t>(y)) == wx) p(x, y) = inv_binom[wx];
    }
  }
  return HermitianOperator(std::move(p));
}

HermitianOperator input_identity(ProgramKind kind, int n) {
  check_program(kind, n);
  if (kind == ProgramKind::Orthogonal) return HermitianOperator(identity(input_dim(n)));
  return HermitianOperator(tensor(identity(2), symmetric_projector(n).matrix()));
}

FidelityOperator build_r_analytic(ProgramKind kind, int n) {
  check_program(kind, n);
  if (kind == ProgramKind::Orthogonal) return build_r_quadrature(kind, n).op;
  const double np1 = n + 1.0;
  const double np2 = n + 2.0;
  const ComplexMatrix sym = symmetric_projector(n + 1).matrix();
  ComplexMatrix r_plus = sym / (2.0 * np2);
  ComplexMatrix r_minus = input_identity(kind, n).matrix() / (2.0 * np1) - r_plus;
  return make_fidelity_operator(kind, n, std::move(r_plus), std::move(r_minus));
}

QuadratureResult build_r_quadrature(ProgramKind kind, int n, double tolerance) {
  check_program(kind, n);
  int theta_nodes = 2;
  int phi_nodes = 4;
  FidelityOperator prev = quadrature_once(kind, n, theta_nodes, phi_nodes);
  for (int round = 0; round < 8; ++round) {
    theta_nodes *= 2;
    phi_nodes *= 2;
    FidelityOperator next = quadrature_once(kind, n, theta_nodes, phi_nodes);
    const double change = std::max(max_abs_diff(next.r_plus.matrix(), prev.r_plus.matrix()),
                                   max_abs_diff(next.r_minus.matrix(), prev.r_minus.matrix()));
    if (change < tolerance) return {std::move(next), theta_nodes, phi_nodes, change};
    prev = std::move(next);
  }
  throw std::runtime_error("build_r_quadrature: refinement did not converge");
}

FidelityOperator build_r_from_points(ProgramKind kind, int n,
                                     std::span<const BlochPoint> points) {
  check_program(kind, n);
  if (points.empty()) throw std::invalid_argument("build_r_from_points: no samples");
  const Eigen::Index dim = input_dim(n);
  ComplexMatrix plus = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix minus = ComplexMatrix::Zero(dim, dim);
  const double w = 1.0 / static_cast<double>(points.size());
  for (const BlochPoint& p : points) accumulate(plus, minus, bloch_state(p), kind, n, w);
  return make_fidelity_operator(kind, n, std::move(plus), std::move(minus));
}

FidelityOperator build_r_montecarlo(ProgramKind kind, int n, std::size_t samples,
                                    std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("build_r_montecarlo: samples must be >= 1");
  const std::vector<BlochPoint> points = sample_bloch_uniform(seed, samples);
  return build_r_from_points(kind, n, points);
}

}  // namespace qmm
