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

#include "qmm_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qmm/information.hpp"
#include "qmm/serialization.hpp"

namespace qmm::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string program = "identical";
  std::optional<int> n;
  double tol = 1e-10;
  int max_iters = 10000;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string output;

  std::string r_source = "analytic";
  std::string log_csv;
  std::string chi_out;
  std::optional<double> f_par;
  std::optional<double> f_perp;
  double theta = 0.0;
  double phi = 0.0;
  int pairs = 100;
  std::uint64_t shots = 0;
  bool sweep_fidelity = false;
  std::string circuit_file;
};

// A report is a JSON object plus the exit code it should produce. Scalar
// fields go to CSV as field,value rows; "rows" (if present) as a table.
struct Report {
  json doc;
  int exit_code = kExitOk;
};

ProgramKind parse_kind(const std::string& name) {
  try {
    return program_kind_from_string(name);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int resolve_n(const RunConfig& cfg, ProgramKind kind) {
  const int n = cfg.n.value_or(kind == ProgramKind::Orthogonal ? 2 : 1);
  try {
    check_program(kind, n);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return n;
}

json header(const RunConfig& cfg) {
  return {{"tool", "qmm"},
          {"version", kVersion},
          {"command", cfg.command},
          {"seed", cfg.seed},
          {"qubit_ordering", kQubitOrdering}};
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f << text;
}

FidelityOperator build_r(const RunConfig& cfg, ProgramKind kind, int n) {
  if (cfg.r_source == "analytic") return build_r_analytic(kind, n);
  if (cfg.r_source == "quadrature") return build_r_quadrature(kind, n).op;
  if (cfg.r_source == "montecarlo") return build_r_montecarlo(kind, n, cfg.samples, cfg.seed);
  throw ConfigError("--r-source must be analytic, quadrature or montecarlo");
}

Report cmd_solve(const RunConfig& cfg) {
  const ProgramKind kind = parse_kind(cfg.program);
  const int n = resolve_n(cfg, kind);
  if (n > 6) throw ConfigError("solve supports n <= 6");
  SolverConfig sc;
  sc.max_iters = cfg.max_iters;
  sc.convergence_tol = cfg.tol;
  try {
    sc.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const FidelityOperator r = build_r(cfg, kind, n);
  const SolveResult res = solve(r, sc);
  const double closed = mean_fidelity_formula(kind, n);

  if (!cfg.log_csv.empty()) write_text_file(cfg.log_csv, iteration_log_csv(res.log));
  if (!cfg.chi_out.empty()) write_text_file(cfg.chi_out, to_json(res.chi).dump(2) + "\n");

  Report rep;
  rep.doc = {{"header", header(cfg)},
             {"program", to_string(kind)},
             {"n", n},
             {"r_source", cfg.r_source},
             {"tol", cfg.tol},
             {"max_iters", cfg.max_iters},
             {"fidelity", res.certificate.fidelity},
             {"closed_form_fidelity", closed},
             {"abs_difference", std::abs(res.certificate.fidelity - closed)},
             {"residual_eq10", res.certificate.residual_eq10},
             {"min_eig_eq11", res.certificate.min_eig_eq11},
             {"certificate_passed", res.certificate.passed},
             {"iterations", res.iterations},
             {"converged", res.converged},
             {"support_violation", res.support_violation},
             {"failed", !(res.converged && res.certificate.passed)}};
  if (!res.converged) {
    rep.exit_code = kExitNonConvergence;
  } else if (!res.certificate.passed) {
    rep.exit_code = kExitCertificateFailure;
  }
  return rep;
}

PureState psi_from_config(const RunConfig& cfg) {
  try {
    return bloch_state({cfg.theta, cfg.phi});
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

// Fits E = a 1 + b |psi><psi| and returns (a, b, fit residual).
json fit_coefficients(const HermitianOperator& e, const PureState& psi) {
  const PureState perp = orthogonal_state(psi);
  const auto expect = [&](const PureState& s) {
    return (s.amplitudes().adjoint() * e.matrix() * s.amplitudes())(0).real();
  };
  const double a = expect(perp);
  const double b = expect(psi) - a;
  const double residual = max_abs_diff(e.matrix(), a * identity(2) + b * psi.density());
  return {{"identity", a}, {"projector", b}, {"fit_residual", residual}};
}

Report cmd_povm(const RunConfig& cfg) {
  const ProgramKind kind = parse_kind(cfg.program);
  const int n = resolve_n(cfg, kind);
  if (kind == ProgramKind::Identical && n > 8) throw ConfigError("povm supports n <= 8");
  const PureState psi = psi_from_config(cfg);
  const Povm joint = kind == ProgramKind::Identical ? joint_povm_identical(n) : joint_povm_orthogonal();
  const Povm eff = effective_povm(joint, program_state(psi, kind, n));
  const DiscriminationFidelities f = discrimination_fidelities(eff, psi);
  const double residual = std::max(joint.completeness_residual(), eff.completeness_residual());

  Report rep;
  rep.doc = {{"header", header(cfg)},
             {"program", to_string(kind)},
             {"n", n},
             {"theta", cfg.theta},
             {"phi", cfg.phi},
             {"f_par", f.f_par},
             {"f_perp", f.f_perp},
             {"mean_fidelity", f.mean()},
             {"completeness_residual", residual},
             {"par_coefficients", fit_coefficients(eff[0], psi)},
             {"perp_coefficients", fit_coefficients(eff[1], orthogonal_state(psi))},
             {"effective_povm", to_json(eff)},
             {"joint_povm", to_json(joint)}};
  return rep;
}

Report cmd_info(const RunConfig& cfg) {
  double f_par = 0.0;
  double f_perp = 0.0;
  json source;
  if (cfg.f_par || cfg.f_perp) {
    if (!(cfg.f_par && cfg.f_perp)) throw ConfigError("--f-par and --f-perp go together");
    f_par = *cfg.f_par;
    f_perp = *cfg.f_perp;
    source = "explicit";
  } else {
    const ProgramKind kind = parse_kind(cfg.program);
    const int n = resolve_n(cfg, kind);
    if (kind == ProgramKind::Identical && n > 8) throw ConfigError("info supports n <= 8");
    const PureState psi = psi_from_config(cfg);
    const Povm joint = kind == ProgramKind::Identical ? joint_povm_identical(n) : joint_povm_orthogonal();
    const DiscriminationFidelities f =
        discrimination_fidelities(effective_povm(joint, program_state(psi, kind, n)), psi);
    f_par = f.f_par;
    f_perp = f.f_perp;
    source = {{"program", to_string(kind)}, {"n", n}};
  }
  InfoReport info;
  try {
    // Derived fidelities can overshoot [0, 1] by rounding; explicit ones are validated as given.
    info = cfg.f_par ? info_from_fidelities(f_par, f_perp)
                     : info_from_fidelities(std::clamp(f_par, 0.0, 1.0), std::clamp(f_perp, 0.0, 1.0));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  Report rep;
  rep.doc = {{"header", header(cfg)},
             {"source", source},
             {"f_par", info.f_par},
             {"f_perp", info.f_perp},
             {"r_par", info.r_par},
             {"r_perp", info.r_perp},
             {"p_par", info.p_par},
             {"p_perp", info.p_perp},
             {"info_bits", info.info_bits}};
  return rep;
}

GateCircuit load_circuit(const RunConfig& cfg) {
  if (cfg.circuit_file.empty()) return swap_test_circuit();
  std::ifstream in(cfg.circuit_file);
  if (!in) throw ConfigError("cannot read circuit file '" + cfg.circuit_file + "'");
  try {
    const GateCircuit c = circuit_from_json(json::parse(in));
    if (c.num_qubits() != 3) throw ConfigError("circuit must have 3 wires (ancilla, signal, program)");
    return c;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed circuit file: ") + e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid circuit: ") + e.what());
  }
}

Report cmd_circuit(const RunConfig& cfg) {
  if (cfg.pairs < 1) throw ConfigError("--pairs must be positive");
  if (cfg.samples == 0) throw ConfigError("--samples must be positive");
  const GateCircuit circuit = load_circuit(cfg);

  // Circuit vs. closed-form effective POVM for random (signal, program) pairs.
  const std::vector<BlochPoint> pts = sample_bloch_uniform(cfg.seed, 2 * static_cast<std::size_t>(cfg.pairs));
  double max_dev = 0.0;
  for (std::size_t i = 0; i < pts.size(); i += 2) {
    const PureState signal = bloch_state(pts[i]);
    const PureState program = bloch_state(pts[i + 1]);
    const double p0 = ancilla_p0(circuit, signal, program);
    const Povm eff = effective_povm_formula(ProgramKind::Identical, 1, program);
    const ComplexVector& s = signal.amplitudes();
    max_dev = std::max(max_dev, std::abs(p0 - (s.adjoint() * eff[0].matrix() * s)(0).real()));
  }

  const PureState zero = PureState::basis(1, 0);
  const Povm tomo = tomographic_povm(
      [&](const PureState& s) { return ancilla_p0(circuit, s, zero); }, standard_probe_states());

  Report rep;
  rep.doc = {{"header", header(cfg)},
             {"circuit", to_json(circuit)},
             {"pairs", cfg.pairs},
             {"max_probability_deviation", max_dev},
             {"tomography_program_zero", to_json(tomo)}};

  if (cfg.shots > 0) {
    const PureState signal = psi_from_config(cfg);
    const double p0 = ancilla_p0(circuit, signal, zero);
    const std::uint64_t zeros = sample_zero_outcomes(std::clamp(p0, 0.0, 1.0), cfg.shots, cfg.seed);
    const double shots = static_cast<double>(cfg.shots);
    const double sigma = std::sqrt(shots * p0 * (1.0 - p0));
    const double dev = std::abs(static_cast<double>(zeros) - shots * p0);
    rep.doc["shots"] = {{"shots", cfg.shots},
                        {"theta", cfg.theta},
                        {"phi", cfg.phi},
                        {"exact_p0", p0},
                        {"zero_count", zeros},
                        {"empirical_p0", static_cast<double>(zeros) / shots},
                        {"sigma", sigma / shots},
                        {"within_5_sigma", dev <= 5.0 * sigma}};
  }
  if (cfg.sweep_fidelity) {
    const std::vector<BlochPoint> sweep = sample_bloch_uniform(cfg.seed, cfg.samples);
    double sum = 0.0;
    for (const BlochPoint& p : sweep) {
      const PureState psi = bloch_state(p);
      sum += 0.5 * (ancilla_p0(circuit, psi, psi) + 1.0 - ancilla_p0(circuit, orthogonal_state(psi), psi));
    }
    rep.doc["sweep"] = {{"samples", cfg.samples}, {"mean_fidelity", sum / static_cast<double>(sweep.size())}};
  }
  return rep;
}

Report cmd_table(const RunConfig& cfg) {
  const int n_max = cfg.n.value_or(5);
  if (n_max < 1 || n_max > 8) throw ConfigError("table supports 1 <= n <= 8");
  json rows = json::array();
  for (int n = 1; n <= n_max; ++n) {
    const double f = mean_fidelity(closed_form_chi(ProgramKind::Identical, n), build_r_analytic(ProgramKind::Identical, n));
    rows.push_back({{"program", "identical"},
                    {"n", n},
                    {"fidelity", f},
                    {"formula", mean_fidelity_formula(ProgramKind::Identical, n)}});
  }
  const double f_orth =
      mean_fidelity(closed_form_chi(ProgramKind::Orthogonal, 2), build_r_analytic(ProgramKind::Orthogonal, 2));
  rows.push_back({{"program", "orthogonal"},
                  {"n", 2},
                  {"fidelity", f_orth},
                  {"formula", mean_fidelity_formula(ProgramKind::Orthogonal, 2)}});

  const PureState zero = PureState::basis(1, 0);
  const auto info_row = [&](const std::string& label, const Povm& eff) {
    const DiscriminationFidelities f = discrimination_fidelities(eff, zero);
    const InfoReport info = info_from_fidelities(std::clamp(f.f_par, 0.0, 1.0), std::clamp(f.f_perp, 0.0, 1.0));
    return json{{"case", label}, {"f_par", info.f_par}, {"f_perp", info.f_perp}, {"info_bits", info.info_bits}};
  };
  json info = json::array();
  info.push_back(info_row("identical_n1",
                          effective_povm(joint_povm_identical(1), program_state(zero, ProgramKind::Identical, 1))));
  info.push_back(info_row("identical_n2",
                          effective_povm(joint_povm_identical(2), program_state(zero, ProgramKind::Identical, 2))));
  info.push_back(info_row("orthogonal",
                          effective_povm(joint_povm_orthogonal(), program_state(zero, ProgramKind::Orthogonal, 2))));
  const InfoReport sym = info_from_fidelities(0.75, 0.75);
  info.push_back({{"case", "symmetric_0.75"}, {"f_par", 0.75}, {"f_perp", 0.75}, {"info_bits", sym.info_bits}});

  Report rep;
  rep.doc = {{"header", header(cfg)}, {"rows", rows}, {"info", info}};
  return rep;
}

std::string csv_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(17) << v.get<double>();
    return os.str();
  }
  return v.dump();
}

void flatten(const json& doc, const std::string& prefix, std::ostream& os) {
  for (const auto& [key, v] : doc.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (v.is_object()) {
      flatten(v, name, os);
    } else if (!v.is_array()) {
      os << name << ',' << csv_value(v) << '\n';
    }
  }
}

void write_table(const json& rows, std::ostream& os) {
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [key, v] : rows.front().items()) {
    os << (first ? "" : ",") << key;
    first = false;
  }
  os << '\n';
  for (const json& row : rows) {
    first = true;
    for (const auto& [key, v] : row.items()) {
      os << (first ? "" : ",") << csv_value(v);
      first = false;
    }
    os << '\n';
  }
}

std::string render(const Report& rep, const std::string& format) {
  if (format == "json") return rep.doc.dump(2) + "\n";
  std::ostringstream os;
  const json& h = rep.doc.at("header");
  os << "# qmm " << h.at("command").get<std::string>() << " version=" << h.at("version").get<std::string>()
     << " seed=" << h.at("seed").get<std::uint64_t>() << '\n';
  if (rep.doc.contains("rows")) {
    write_table(rep.doc.at("rows"), os);
    os << '\n';
    write_table(rep.doc.at("info"), os);
  } else {
    os << "field,value\n";
    json body = rep.doc;
    body.erase("header");
    flatten(body, "", os);
  }
  return os.str();
}

std::string default_output_path(const RunConfig& cfg) {
  if (!cfg.output.empty()) return cfg.output;
  const char* dir = std::getenv(kOutputDirEnv);
  if (dir == nullptr || *dir == '\0') return {};
  return (std::filesystem::path(dir) / (cfg.command + "." + cfg.format)).string();
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output,-o", cfg.output, "Write the report to this file");
  sub->add_option("--seed", cfg.seed, "RNG seed");
}

void add_program(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--program", cfg.program, "identical or orthogonal");
  sub->add_option("--n", cfg.n, "Number of program copies");
}

void add_psi(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--theta", cfg.theta, "Polar angle of psi");
  sub->add_option("--phi", cfg.phi, "Azimuthal angle of psi");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Programmable quantum multimeter toolkit", "qmm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CLI::App* solve_cmd = app.add_subcommand("solve", "Optimize the multimeter CP map");
  add_common(solve_cmd, cfg);
  add_program(solve_cmd, cfg);
  solve_cmd->add_option("--tol", cfg.tol, "Convergence tolerance");
  solve_cmd->add_option("--max-iters", cfg.max_iters, "Iteration cap");
  solve_cmd->add_option("--r-source", cfg.r_source, "analytic, quadrature or montecarlo");
  solve_cmd->add_option("--samples", cfg.samples, "Monte-Carlo samples for --r-source montecarlo");
  solve_cmd->add_option("--log-csv", cfg.log_csv, "Write the iteration log as CSV");
  solve_cmd->add_option("--chi-out", cfg.chi_out, "Write the optimal Choi matrix as JSON");

  CLI::App* povm_cmd = app.add_subcommand("povm", "Joint and effective POVMs");
  add_common(povm_cmd, cfg);
  add_program(povm_cmd, cfg);
  add_psi(povm_cmd, cfg);

  CLI::App* info_cmd = app.add_subcommand("info", "Average information per bit");
  add_common(info_cmd, cfg);
  add_program(info_cmd, cfg);
  add_psi(info_cmd, cfg);
  info_cmd->add_option("--f-par", cfg.f_par, "Fidelity for the parallel input");
  info_cmd->add_option("--f-perp", cfg.f_perp, "Fidelity for the orthogonal input");

  CLI::App* circuit_cmd = app.add_subcommand("circuit", "Swap-test circuit simulation");
  add_common(circuit_cmd, cfg);
  add_psi(circuit_cmd, cfg);
  circuit_cmd->add_option("--circuit-file", cfg.circuit_file, "Circuit JSON (default: swap test)");
  circuit_cmd->add_option("--pairs", cfg.pairs, "Random (signal, program) pairs");
  circuit_cmd->add_option("--shots", cfg.shots, "Sample the ancilla for signal psi, program |0>");
  circuit_cmd->add_flag("--sweep-fidelity", cfg.sweep_fidelity, "Bloch-averaged circuit fidelity");
  circuit_cmd->add_option("--samples", cfg.samples, "Samples for --sweep-fidelity");

  CLI::App* table_cmd = app.add_subcommand("table", "Reproduce all fidelity and information values");
  add_common(table_cmd, cfg);
  table_cmd->add_option("--n", cfg.n, "Largest N in the fidelity table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidConfig;
  }

  Report rep;
  try {
    if (solve_cmd->parsed()) {
      cfg.command = "solve";
      rep = cmd_solve(cfg);
    } else if (povm_cmd->parsed()) {
      cfg.command = "povm";
      rep = cmd_povm(cfg);
    } else if (info_cmd->parsed()) {
      cfg.command = "info";
      rep = cmd_info(cfg);
    } else if (circuit_cmd->parsed()) {
      cfg.command = "circuit";
      rep = cmd_circuit(cfg);
    } else {
      cfg.command = "table";
      rep = cmd_table(cfg);
    }
    const std::string text = render(rep, cfg.format);
    const std::string path = default_output_path(cfg);
    if (path.empty()) {
      out << text;
    } else {
      write_text_file(path, text);
    }
  } catch (const ConfigError& e) {
    err << "qmm: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  return rep.exit_code;
}

}  // namespace qmm::cli
