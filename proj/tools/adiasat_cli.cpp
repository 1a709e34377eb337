// Copyright 2026 The adiasat authors
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
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "adiasat/circuit.hpp"
#include "adiasat/dense.hpp"
#include "adiasat/report.hpp"

namespace {

// Exit codes: 0 solved/sat, 1 usage or parse error, 2 resource cap,
// 3 ran but the best state does not satisfy (or a verification failed).
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitUnsat = 3;

struct RunConfig {
  std::string input;
  int steps = 100;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string format = "json";
  bool verify = false;
  bool diag = false;
  bool check = false;
};

adiasat::CnfFormula read_formula(const std::string& path) {
  if (path == "-") return adiasat::parse_dimacs(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  return adiasat::parse_dimacs(in);
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

std::string term_label(adiasat::SupportMask support, int num_qubits) {
  if (support == 0) return "Id";
  std::string label;
  for (int q : adiasat::support_qubits(support, num_qubits)) {
    if (!label.empty()) label += '.';
    label += "Z" + std::to_string(q);
  }
  return label;
}

std::string spectrum_term_table(const adiasat::ZPolynomial& h) {
  std::vector<adiasat::SupportMask> order;
  for (const auto& [support, coeff] : h.terms()) order.push_back(support);
  std::sort(order.begin(), order.end(),
            [&h](adiasat::SupportMask a, adiasat::SupportMask b) {
              return adiasat::term_order_less(a, b, h.num_qubits());
            });
  std::ostringstream out;
  char buf[64];
  for (adiasat::SupportMask support : order) {
    std::snprintf(buf, sizeof(buf), "%+.12g", h.coefficient(support));
    out << buf << "  " << term_label(support, h.num_qubits()) << '\n';
  }
  if (order.empty()) out << "0 (zero polynomial)\n";
  return out.str();
}

int cmd_solve(const RunConfig& cfg) {
  const adiasat::CnfFormula formula = read_formula(cfg.input);
  const adiasat::ZPolynomial hamiltonian = adiasat::formula_to_hamiltonian(formula);
  const adiasat::DiagonalSpectrum spectrum = adiasat::build_spectrum(hamiltonian);
  const adiasat::StateVector psi =
      adiasat::run_adiabatic(hamiltonian, adiasat::Schedule(cfg.steps));
  const adiasat::Distribution dist = adiasat::exact_distribution(psi);

  adiasat::SolveReport report;
  report.num_vars = formula.num_vars;
  report.num_clauses = static_cast<int>(formula.clauses.size());
  report.steps = cfg.steps;
  report.seed = cfg.seed;
  report.shots = cfg.shots;

  const adiasat::BestState best = adiasat::extract_best(dist);
  report.best_state = best.state;
  report.best_assignment = best.assignment;
  const adiasat::VerifyResult vr = adiasat::verify(formula, best.state);
  report.best_unsat = vr.unsat;
  report.satisfies = vr.satisfies;
  report.min_unsat = static_cast<int>(std::lround(
      *std::min_element(spectrum.energies.begin(), spectrum.energies.end())));
  report.solution_mass = adiasat::ground_state_mass(dist, spectrum);
  if (formula.num_vars <= adiasat::kReportTableMaxQubits) report.distribution = dist;
  if (cfg.shots > 0) report.histogram = adiasat::sample(dist, cfg.shots, cfg.seed);

  if (cfg.format == "csv") {
    if (!report.histogram.has_value())
      throw std::invalid_argument("--format csv requires --shots >= 1");
    write_output(cfg.out, adiasat::histogram_csv(*report.histogram, formula.num_vars));
  } else {
    write_output(cfg.out, adiasat::write_report(report));
  }
  return report.satisfies ? kExitOk : kExitUnsat;
}

int cmd_spectrum(const RunConfig& cfg) {
  const adiasat::CnfFormula formula = read_formula(cfg.input);
  const adiasat::ZPolynomial hamiltonian = adiasat::formula_to_hamiltonian(formula);
  std::ostringstream out;
  out << spectrum_term_table(hamiltonian);

  const adiasat::DiagonalSpectrum spectrum = adiasat::build_spectrum(hamiltonian);
  bool mismatch = false;
  if (cfg.diag || cfg.verify) {
    if (cfg.diag) out << "\nstate  energy  unsat\n";
    const adiasat::BasisIndex dim = adiasat::BasisIndex{1} << formula.num_vars;
    for (adiasat::BasisIndex k = 0; k < dim; ++k) {
      const int unsat = adiasat::unsat_count(
          formula, adiasat::basis_to_assignment(k, formula.num_vars));
      if (std::abs(spectrum.energies[k] - unsat) > 1e-9) mismatch = true;
      if (cfg.diag) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", spectrum.energies[k]);
        out << adiasat::basis_to_bitstring(k, formula.num_vars) << "  " << buf << "  "
            << unsat << '\n';
      }
    }
    if (cfg.verify)
      out << "\nverify: " << (mismatch ? "MISMATCH" : "spectrum matches clause counts")
          << '\n';
  }
  write_output(cfg.out, out.str());
  return mismatch ? kExitUnsat : kExitOk;
}

int cmd_compile(const RunConfig& cfg) {
  const adiasat::CnfFormula formula = read_formula(cfg.input);
  const adiasat::ZPolynomial hamiltonian = adiasat::formula_to_hamiltonian(formula);
  const adiasat::Schedule schedule(cfg.steps);
  const adiasat::QuantumCircuit circuit =
      adiasat::compile_adiabatic_circuit(hamiltonian, schedule);
  write_output(cfg.out, adiasat::export_qasm(circuit));

  if (!cfg.check) return kExitOk;
  if (formula.num_vars > adiasat::kMaxDenseQubits)
    throw adiasat::ResourceError("--check is limited to " +
                                 std::to_string(adiasat::kMaxDenseQubits) + " qubits");
  const adiasat::StateVector simulated = adiasat::simulate_circuit(circuit);
  const adiasat::StateVector evolved = adiasat::run_adiabatic(hamiltonian, schedule);
  const double f = adiasat::fidelity(simulated, evolved);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", f);
  std::cerr << "fidelity vs statevector evolution: " << buf << '\n';
  return f >= 1.0 - 1e-6 ? kExitOk : kExitUnsat;
}

int cmd_oracle(const RunConfig& cfg) {
  const adiasat::CnfFormula formula = read_formula(cfg.input);
  if (formula.num_vars > adiasat::kMaxDenseQubits)
    throw adiasat::ResourceError("oracle cross-check is limited to " +
                                 std::to_string(adiasat::kMaxDenseQubits) + " qubits");
  const adiasat::ZPolynomial hamiltonian = adiasat::formula_to_hamiltonian(formula);
  const adiasat::Schedule schedule(cfg.steps);

  const adiasat::StateVector fast = adiasat::run_adiabatic(hamiltonian, schedule);
  const adiasat::StateVector dense = adiasat::dense_evolution_oracle(hamiltonian, schedule);
  const double deviation = adiasat::max_amplitude_deviation(fast, dense);

  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", deviation);
  out << "max amplitude deviation (statevector vs dense oracle, T=" << cfg.steps
      << "): " << buf << '\n';

  const adiasat::DenseOperator hd =
      adiasat::dense_driver_hamiltonian(formula.num_vars);
  const adiasat::DenseOperator hp =
      adiasat::dense_from_spectrum(adiasat::build_spectrum(hamiltonian));
  out << "\nsplit-product error vs exact exponential:\n";
  double err32 = 0.0, err64 = 0.0;
  for (int m : {8, 16, 32, 64}) {
    const double err = adiasat::trotter_error(hd, hp, m);
    if (m == 32) err32 = err;
    if (m == 64) err64 = err;
    std::snprintf(buf, sizeof(buf), "%.6g", err);
    out << "  m = " << m << ": " << buf << '\n';
  }

  bool scaling_ok = true;
  if (err32 > 1e-12) {
    const double ratio = err64 / err32;
    std::snprintf(buf, sizeof(buf), "%.4f", ratio);
    out << "  err(64)/err(32) = " << buf << " (first-order splitting halves the error)\n";
    scaling_ok = ratio >= 0.35 && ratio <= 0.65;
  } else {
    out << "  error below 1e-12; operators commute, scaling check skipped\n";
  }

  write_output(cfg.out, out.str());
  return (deviation <= 1e-8 && scaling_ok) ? kExitOk : kExitUnsat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adiabatic optimizer for SAT/Max-SAT on a dense statevector simulator"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* cmd, bool with_schedule) {
    cmd->add_option("input", cfg.input, "DIMACS CNF file, or '-' for stdin")
        ->required();
    if (with_schedule) {
      cmd->add_option("-T,--steps", cfg.steps, "number of schedule steps")
          ->envname("ADIASAT_STEPS")
          ->capture_default_str();
    }
    cmd->add_option("--out", cfg.out, "output path, or '-' for stdout")
        ->envname("ADIASAT_OUT")
        ->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "run the adiabatic evolution and report");
  add_common(solve, true);
  solve->add_option("--shots", cfg.shots, "measurement shots (0 = exact only)")
      ->envname("ADIASAT_SHOTS")
      ->capture_default_str();
  solve->add_option("--seed", cfg.seed, "sampling seed")
      ->envname("ADIASAT_SEED")
      ->capture_default_str();
  solve->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  CLI::App* spectrum = app.add_subcommand("spectrum", "print the problem Hamiltonian");
  add_common(spectrum, false);
  spectrum->add_flag("--verify", cfg.verify,
                     "check the diagonal against per-assignment clause counts");
  spectrum->add_flag("--diag", cfg.diag, "print the full diagonal");

  CLI::App* compile = app.add_subcommand("compile", "emit the evolution as OpenQASM 2.0");
  add_common(compile, true);
  compile->add_flag("--check", cfg.check,
                    "simulate the circuit and compare with the statevector evolution");

  CLI::App* oracle = app.add_subcommand("oracle", "dense-matrix cross checks");
  add_common(oracle, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg);
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (compile->parsed()) return cmd_compile(cfg);
    return cmd_oracle(cfg);
  } catch (const adiasat::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const adiasat::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
