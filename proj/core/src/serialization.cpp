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

#include "qmm/serialization.hpp"

#include <stdexcept>

namespace qmm {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

json matrix_entries_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return entries;
}

ComplexMatrix matrix_entries_from_json(const json& entries, Eigen::Index rows,
                                       Eigen::Index cols) {
  require(entries.is_array(), "matrix entries must be an array");
  require(entries.size() == static_cast<std::size_t>(rows * cols),
          "matrix entries length must equal rows * cols");
  ComplexMatrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j, ++k) {
      const json& e = entries[k];
      require(e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number(),
              "matrix entry must be [re, im]");
      m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

json to_json(const ChoiMatrix& chi) {
  return {{"dim_in", chi.dim_in()},
          {"dim_out", chi.dim_out()},
          {"ordering", kChoiOrdering},
          {"entries", matrix_entries_to_json(chi.matrix())}};
}

ChoiMatrix choi_from_json(const json& doc) {
  require(doc.is_object(), "Choi document must be an object");
  require(doc.value("ordering", "") == kChoiOrdering, "Choi document must use ordering in_out");
  const auto din = doc.at("dim_in").get<Eigen::Index>();
  const auto dout = doc.at("dim_out").get<Eigen::Index>();
  require(din > 0 && dout > 0, "Choi dimensions must be positive");
  return ChoiMatrix(din, dout, matrix_entries_from_json(doc.at("entries"), din * dout, din * dout));
}

json to_json(const Povm& povm) {
  json elements = json::array();
  for (std::size_t k = 0; k < povm.size(); ++k) {
    elements.push_back({{"label", povm.labels()[k]},
                        {"dim", povm[k].dim()},
                        {"entries", matrix_entries_to_json(povm[k].matrix())}});
  }
  return {{"ordering", kQubitOrdering},
          {"dim", povm.dim()},
          {"labels", povm.labels()},
          {"elements", elements}};
}

Povm povm_from_json(const json& doc) {
  require(doc.is_object(), "POVM document must be an object");
  require(doc.value("ordering", "") == kQubitOrdering, "POVM document must use big_endian");
  std::vector<HermitianOperator> elements;
  std::vector<std::string> labels;
  for (const json& e : doc.at("elements")) {
    const auto d = e.at("dim").get<Eigen::Index>();
    require(d > 0, "POVM element dimension must be positive");
    elements.emplace_back(matrix_entries_from_json(e.at("entries"), d, d));
    labels.push_back(e.at("label").get<std::string>());
  }
  return Povm(std::move(elements), std::move(labels));
}

json to_json(const OptimalityCertificate& cert) {
  return {{"fidelity", cert.fidelity},
          {"residual_eq10", cert.residual_eq10},
          {"min_eig_eq11", cert.min_eig_eq11},
          {"passed", cert.passed},
          {"lambda",
           {{"dim", cert.lambda_op.dim()},
            {"ordering", kQubitOrdering},
            {"entries", matrix_entries_to_json(cert.lambda_op.matrix())}}}};
}

json to_json(const GateCircuit& circuit) {
  json gates = json::array();
  for (const Gate& g : circuit.gates()) {
    json rec = {{"wires", g.wires}};
    switch (g.kind) {
      case GateKind::Hadamard:
        rec["kind"] = "H";
        break;
      case GateKind::Fredkin:
        rec["kind"] = "F";
        break;
      case GateKind::Unitary:
        rec["kind"] = "U";
        rec["matrix"] = matrix_entries_to_json(g.unitary);
        break;
    }
    gates.push_back(std::move(rec));
  }
  return {{"num_qubits", circuit.num_qubits()}, {"ordering", kQubitOrdering}, {"gates", gates}};
}

GateCircuit circuit_from_json(const json& doc) {
  require(doc.is_object(), "circuit document must be an object");
  require(doc.value("ordering", kQubitOrdering) == std::string(kQubitOrdering),
          "circuit document must use big_endian ordering");
  GateCircuit circuit(doc.at("num_qubits").get<std::size_t>());
  for (const json& rec : doc.at("gates")) {
    const auto kind = rec.at("kind").get<std::string>();
    const auto wires = rec.at("wires").get<std::vector<std::size_t>>();
    if (kind == "H" || kind == "hadamard") {
      circuit.add({GateKind::Hadamard, wires, {}});
    } else if (kind == "F" || kind == "fredkin") {
      circuit.add({GateKind::Fredkin, wires, {}});
    } else if (kind == "U" || kind == "unitary") {
      circuit.add({GateKind::Unitary, wires, matrix_entries_from_json(rec.at("matrix"), 2, 2)});
    } else {
      throw std::invalid_argument("unknown gate kind '" + kind + "'");
    }
  }
  return circuit;
}

}  // namespace qmm
