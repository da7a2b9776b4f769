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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qmm/choimap.hpp"
#include "qmm/operator_core.hpp"
#include "qmm/states.hpp"

namespace qmm::testing {

inline ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index dim) {
  return hermitize(random_matrix(rng, dim, dim));
}

// Random full-rank density matrix.
inline ComplexMatrix random_density(std::mt19937_64& rng, Eigen::Index dim) {
  const ComplexMatrix g = random_matrix(rng, dim, dim);
  ComplexMatrix rho = hermitize(g * g.adjoint());
  return rho / rho.trace().real();
}

inline PureState random_state(std::mt19937_64& rng, std::size_t num_qubits) {
  const auto dim = Eigen::Index{1} << num_qubits;
  return PureState::normalized(random_matrix(rng, dim, 1).col(0));
}

inline PureState random_qubit(std::mt19937_64& rng) {
  return random_state(rng, 1);
}

// Random trace-preserving CP map: X >= 0 rescaled by (L^{-1/2} (x) 1) with
// L = Tr_out X.
inline ChoiMatrix random_choi(std::mt19937_64& rng, Eigen::Index dim_in, Eigen::Index dim_out) {
  const ComplexMatrix g = random_matrix(rng, dim_in * dim_out, dim_in * dim_out);
  const ComplexMatrix x = hermitize(g * g.adjoint());
  const ComplexMatrix l = trace_out(x, dim_in, dim_out);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(l);
  const ComplexMatrix inv_sqrt = es.eigenvectors() *
                                 es.eigenvalues().cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
                                 es.eigenvectors().adjoint();
  const ComplexMatrix k = tensor(inv_sqrt, identity(dim_out));
  return ChoiMatrix(dim_in, dim_out, hermitize(k * x * k));
}

// Symmetrization oracle: (1/m!) sum over all m! qubit permutation matrices,
// each permutation applied to basis indices directly.
inline ComplexMatrix symmetrizer_by_permutations(std::size_t m) {
  const std::size_t dim = std::size_t{1} << m;
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  ComplexMatrix acc = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  double count = 0.0;
  do {
    for (std::size_t x = 0; x < dim; ++x) {
      std::size_t y = 0;
      for (std::size_t q = 0; q < m; ++q) {
        const std::size_t bit = (x >> (m - 1 - q)) & 1U;
        y |= bit << (m - 1 - perm[q]);
      }
      acc(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += 1.0;
    }
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc / count;
}

// Average of f over the Bloch points; f returns a matrix.
template <typename F>
ComplexMatrix bloch_average(const std::vector<BlochPoint>& pts, F&& f) {
  ComplexMatrix acc = f(bloch_state(pts.front()));
  acc.setZero();
  for (const BlochPoint& p : pts) acc += f(bloch_state(p));
  return acc / static_cast<double>(pts.size());
}

}  // namespace qmm::testing
