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

#include <string>

#include <nlohmann/json.hpp>

#include "qmm/choimap.hpp"
#include "qmm/circuit.hpp"
#include "qmm/multimeter.hpp"
#include "qmm/solver.hpp"

namespace qmm {

using json = nlohmann::json;

// Every document carries the ordering tag of the register layout:
// "in_out" for Choi matrices, "big_endian" for qubit registers.
inline constexpr const char* kChoiOrdering = "in_out";
inline constexpr const char* kQubitOrdering = "big_endian";

// [[re, im], ...] in row-major order.
json matrix_entries_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_entries_from_json(const json& entries, Eigen::Index rows,
                                       Eigen::Index cols);

// {dim_in, dim_out, ordering: "in_out", entries}. Doubles round-trip
// bit-exactly through dump()/parse().
json to_json(const ChoiMatrix& chi);
ChoiMatrix choi_from_json(const json& doc);

// {ordering: "big_endian", dim, labels, elements: [{label, dim, entries}]}
json to_json(const Povm& povm);
Povm povm_from_json(const json& doc);

json to_json(const OptimalityCertificate& cert);

// {num_qubits, ordering: "big_endian", gates: [{kind: "H"|"F"|"U", wires, matrix?}]}
json to_json(const GateCircuit& circuit);
GateCircuit circuit_from_json(const json& doc);

}  // namespace qmm
