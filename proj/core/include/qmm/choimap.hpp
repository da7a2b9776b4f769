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

#include "qmm/fidelity_operator.hpp"
#include "qmm/operator_core.hpp"
#include "qmm/states.hpp"

namespace qmm {

// Choi matrix of a trace-preserving CP map, ordered (in (x) out), built with
// the unnormalized maximally entangled state sum_i |i>|i>. Construction
// checks PSD (min eigenvalue >= -1e-9) and Tr_out[chi] = 1_in (1e-9).
class ChoiMatrix {
 public:
  ChoiMatrix(Eigen::Index dim_in, Eigen::Index dim_out, ComplexMatrix matrix);

  Eigen::Index dim_in() const noexcept { return dim_in_; }
  Eigen::Index dim_out() const noexcept { return dim_out_; }
  const HermitianOperator& op() const noexcept { return m_; }
  const ComplexMatrix& matrix() const noexcept { return m_.matrix(); }

  // Tr_out[chi]
  ComplexMatrix trace_out() const;

 private:
  Eigen::Index dim_in_;
  Eigen::Index dim_out_;
  HermitianOperator m_;
};

// Partial traces of an (in (x) out) operator.
ComplexMatrix trace_out(const ComplexMatrix& m, Eigen::Index dim_in, Eigen::Index dim_out);
ComplexMatrix trace_in(const ComplexMatrix& m, Eigen::Index dim_in, Eigen::Index dim_out);

// rho_out = Tr_in[chi (rho_in^T (x) 1_out)]
HermitianOperator apply(const ChoiMatrix& chi, const HermitianOperator& rho_in);

// Tr[r_total chi]
double mean_fidelity(const ChoiMatrix& chi, const FidelityOperator& r);

// F(psi) = 1/2 Tr[chi (|Psi><Psi|)^T (x) |0><0|]
//        + 1/2 Tr[chi (|Psi_perp><Psi_perp|)^T (x) |1><1|]
double pointwise_fidelity(const ChoiMatrix& chi, const PureState& psi, ProgramKind kind,
                          int n);

// sum_i |ii><jj|
ChoiMatrix identity_channel(Eigen::Index dim);

// 1_in (x) 1_out / dim_out
ChoiMatrix depolarizing_channel(Eigen::Index dim_in, Eigen::Index dim_out);

// Measure with {E_k} and prepare |k>: chi = sum_k E_k^T (x) |k><k|.
ChoiMatrix measure_and_prepare(std::span<const ComplexMatrix> povm_elements);

}  // namespace qmm
