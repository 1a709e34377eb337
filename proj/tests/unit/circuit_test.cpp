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

#include "adiasat/circuit.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "../test_util.hpp"

using namespace adiasat;
using testutil::make_phi;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Materializes the circuit's operator column-by-column from basis inputs.
std::vector<std::vector<Complex>> circuit_operator(const QuantumCircuit& c) {
  const BasisIndex dim = BasisIndex{1} << c.num_qubits();
  std::vector<std::vector<Complex>> columns;
  for (BasisIndex b = 0; b < dim; ++b) {
    StateVector basis(c.num_qubits());
    basis.set_amplitude(0, Complex{0, 0});
    basis.set_amplitude(b, Complex{1, 0});
    const StateVector out = simulate_circuit(c, basis);
    std::vector<Complex> column(out.amplitudes().begin(), out.amplitudes().end());
    columns.push_back(std::move(column));
  }
  return columns;
}

ZPolynomial two_qubit_coupling(double gamma) {
  ZPolynomial h(2);
  h.add_term(qubit_mask(2, 1) | qubit_mask(2, 2), gamma);
  return h;
}

ZPolynomial random_diagonal_poly(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> coeff(-1.5, 1.5);
  ZPolynomial h(n);
  const int terms = 1 + static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t)
    h.add_term(rng() & ((SupportMask{1} << n) - 1), coeff(rng));
  return h;
}

}  // namespace

TEST_CASE("compile_problem_layer emits the CX-ladder conjugation") {
  SUBCASE("two-qubit coupling term") {
    const double t = 0.9, gamma = 0.35;
    const QuantumCircuit c = compile_problem_layer(two_qubit_coupling(gamma), t);
    REQUIRE(c.size() == 3);
    CHECK(c.gates()[0] == Gate::cx(0, 1));
    CHECK(c.gates()[1] == Gate::rot_z(1, 2.0 * t * gamma));
    CHECK(c.gates()[2] == Gate::cx(0, 1));
  }

  SUBCASE("three-qubit term uses the ascending ladder") {
    ZPolynomial h(3);
    h.add_term(qubit_mask(3, 1) | qubit_mask(3, 2) | qubit_mask(3, 3), 0.5);
    const QuantumCircuit c = compile_problem_layer(h, 1.0);
    REQUIRE(c.size() == 5);
    CHECK(c.gates()[0] == Gate::cx(0, 1));
    CHECK(c.gates()[1] == Gate::cx(1, 2));
    CHECK(c.gates()[2] == Gate::rot_z(2, 1.0));
    CHECK(c.gates()[3] == Gate::cx(1, 2));
    CHECK(c.gates()[4] == Gate::cx(0, 1));
  }

  SUBCASE("identity terms and zero angles are dropped") {
    CHECK(compile_problem_layer(ZPolynomial::identity(2, 3.0), 1.0).size() == 0);
    CHECK(compile_problem_layer(two_qubit_coupling(0.7), 0.0).size() == 0);
  }

  SUBCASE("single-Z term is one rotation") {
    const QuantumCircuit c = compile_problem_layer(ZPolynomial::pauli_z(2, 2, 0.25), 2.0);
    REQUIRE(c.size() == 1);
    CHECK(c.gates()[0] == Gate::rot_z(1, 1.0));
  }
}

TEST_CASE("compile_driver_layer is one x-rotation per qubit") {
  CHECK(compile_driver_layer(3, 0.0).size() == 0);

  const QuantumCircuit c = compile_driver_layer(3, 0.4);
  REQUIRE(c.size() == 3);
  for (int q = 0; q < 3; ++q) CHECK(c.gates()[q] == Gate::rot_x(q, -0.8));

  // RotX(-pi) = iX: |0> goes to i|1>.
  const QuantumCircuit half = compile_driver_layer(1, kPi / 2.0);
  const StateVector out = simulate_circuit(half);
  CHECK(std::abs(out.amplitude(0)) < 1e-12);
  CHECK(std::abs(out.amplitude(1) - Complex{0.0, 1.0}) < 1e-12);
}

TEST_CASE("compile_adiabatic_circuit gate count is linear in the step count") {
  const ZPolynomial h = formula_to_hamiltonian(make_phi());
  // Prologue of 3 Hadamards; per step, 3 driver rotations plus the problem
  // layer's 3 singles and 5-gate triple ladder. The first problem layer and
  // the last driver layer are elided, leaving 3 + 11 T gates.
  for (int steps : {1, 2, 3, 10}) {
    const QuantumCircuit c = compile_adiabatic_circuit(h, Schedule(steps));
    CHECK(c.size() == static_cast<std::size_t>(3 + 11 * steps));
  }
}

TEST_CASE("simulate_circuit basics") {
  SUBCASE("hadamards prepare the uniform state") {
    QuantumCircuit c(2);
    c.append(Gate::hadamard(0));
    c.append(Gate::hadamard(1));
    const StateVector psi = simulate_circuit(c);
    for (BasisIndex k = 0; k < 4; ++k)
      CHECK(std::abs(psi.amplitude(k) - Complex{0.5, 0.0}) < 1e-12);
  }

  SUBCASE("controlled-not flips the target when the control is set") {
    QuantumCircuit c(2);
    c.append(Gate::cx(0, 1));
    StateVector in(2);
    in.set_amplitude(0, Complex{0, 0});
    in.set_amplitude(2, Complex{1, 0});  // |10>
    const StateVector out = simulate_circuit(c, in);
    CHECK(std::abs(out.amplitude(3) - Complex{1, 0}) < 1e-15);  // |11>
  }

  SUBCASE("gate validation") {
    QuantumCircuit c(2);
    CHECK_THROWS_AS(c.append(Gate::hadamard(2)), std::invalid_argument);
    CHECK_THROWS_AS(c.append(Gate::cx(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(c.append(Gate::cx(0, 5)), std::invalid_argument);
  }
}

TEST_CASE("the ladder block reproduces the coupling exponential entrywise") {
  const double t_gamma = 0.7;
  const QuantumCircuit block = compile_problem_layer(two_qubit_coupling(1.0), t_gamma);
  const auto op = circuit_operator(block);
  const Complex minus{std::cos(t_gamma), -std::sin(t_gamma)};
  const Complex plus{std::cos(t_gamma), std::sin(t_gamma)};
  const Complex expected[4] = {minus, plus, plus, minus};
  for (BasisIndex col = 0; col < 4; ++col) {
    for (BasisIndex row = 0; row < 4; ++row) {
      const Complex want = row == col ? expected[row] : Complex{0, 0};
      CHECK(std::abs(op[col][row] - want) < 1e-12);
    }
  }
}

TEST_CASE("CX conjugation of RotZ gives the two-qubit diagonal") {
  const double lambda = 1.234;
  QuantumCircuit c(2);
  c.append(Gate::cx(0, 1));
  c.append(Gate::rot_z(1, lambda));
  c.append(Gate::cx(0, 1));
  const auto op = circuit_operator(c);
  const Complex lo{std::cos(lambda / 2), -std::sin(lambda / 2)};
  const Complex hi{std::cos(lambda / 2), std::sin(lambda / 2)};
  const Complex expected[4] = {lo, hi, hi, lo};
  for (BasisIndex col = 0; col < 4; ++col)
    for (BasisIndex row = 0; row < 4; ++row)
      CHECK(std::abs(op[col][row] - (row == col ? expected[row] : Complex{0, 0})) <
            1e-12);
}

TEST_CASE("fidelity") {
  std::mt19937_64 rng(21);
  const StateVector psi = testutil::random_state(rng, 2);
  CHECK(fidelity(psi, psi) == doctest::Approx(1.0).epsilon(1e-12));

  StateVector rotated = psi;
  const Complex phase{std::cos(0.8), std::sin(0.8)};
  for (Complex& a : rotated.amplitudes()) a *= phase;
  CHECK(fidelity(psi, rotated) == doctest::Approx(1.0).epsilon(1e-12));

  StateVector zero(1), one(1);
  one.set_amplitude(0, Complex{0, 0});
  one.set_amplitude(1, Complex{1, 0});
  CHECK(fidelity(zero, one) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(fidelity(zero, psi), std::invalid_argument);
}

TEST_CASE("problem layers match the diagonal phase up to global phase") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> angle(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const ZPolynomial h = random_diagonal_poly(rng, n);
    const double theta = angle(rng);

    StateVector in = testutil::random_state(rng, n);
    StateVector direct = in;
    apply_problem_phase(direct, build_spectrum(h), theta);
    const StateVector circuit = simulate_circuit(compile_problem_layer(h, theta), in);
    CHECK(fidelity(circuit, direct) >= 1.0 - 1e-9);
  }
}

TEST_CASE("driver layers match the driver step exactly") {
  std::mt19937_64 rng(78);
  std::uniform_real_distribution<double> angle(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const double theta = angle(rng);
    StateVector in = testutil::random_state(rng, n);
    StateVector direct = in;
    apply_driver_step(direct, theta);
    const StateVector circuit = simulate_circuit(compile_driver_layer(n, theta), in);
    CHECK(max_amplitude_deviation(circuit, direct) < 1e-12);
  }
}

TEST_CASE("compiled evolution matches the statevector evolution") {
  const ZPolynomial h = formula_to_hamiltonian(make_phi());
  for (int steps : {1, 5, 20}) {
    const Schedule schedule(steps);
    const StateVector compiled = simulate_circuit(compile_adiabatic_circuit(h, schedule));
    const StateVector direct = run_adiabatic(h, schedule);
    CHECK(fidelity(compiled, direct) >= 1.0 - 1e-6);
  }

  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const CnfFormula f = testutil::random_formula(rng, n, 3, 8);
    const ZPolynomial hf = formula_to_hamiltonian(f);
    const Schedule schedule(1 + static_cast<int>(rng() % 20));
    CHECK(fidelity(simulate_circuit(compile_adiabatic_circuit(hf, schedule)),
                   run_adiabatic(hf, schedule)) >= 1.0 - 1e-6);
  }
}

TEST_CASE("export_qasm emits the deterministic subset") {
  SUBCASE("empty circuit") {
    CHECK(export_qasm(QuantumCircuit(1)) ==
          "OPENQASM 2.0;\n"
          "include \"qelib1.inc\";\n"
          "// logical qubit 1 maps to register index 0\n"
          "qreg q[1];\n");
  }

  SUBCASE("the coupling block") {
    const QuantumCircuit block = compile_problem_layer(two_qubit_coupling(1.0), 0.25);
    CHECK(export_qasm(block) ==
          "OPENQASM 2.0;\n"
          "include \"qelib1.inc\";\n"
          "// logical qubit 1 maps to register index 0\n"
          "qreg q[2];\n"
          "cx q[0],q[1];\n"
          "rz(0.5) q[1];\n"
          "cx q[0],q[1];\n");
  }

  SUBCASE("angles carry 17 significant digits") {
    QuantumCircuit c(1);
    c.append(Gate::rot_x(0, 1.4));
    const std::string text = export_qasm(c);
    CHECK(text.find("rx(1.3999999999999999) q[0];") != std::string::npos);
  }
}

TEST_CASE("parse_qasm round-trips exported circuits") {
  const ZPolynomial h = formula_to_hamiltonian(make_phi());
  const QuantumCircuit original = compile_adiabatic_circuit(h, Schedule(3));
  const QuantumCircuit reparsed = parse_qasm(export_qasm(original));
  CHECK(reparsed.num_qubits() == original.num_qubits());
  REQUIRE(reparsed.size() == original.size());
  for (std::size_t i = 0; i < original.size(); ++i)
    CHECK(reparsed.gates()[i] == original.gates()[i]);

  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    QuantumCircuit c(n);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (int g = 0; g < 12; ++g) {
      switch (rng() % 4) {
        case 0: c.append(Gate::hadamard(static_cast<int>(rng() % n))); break;
        case 1: c.append(Gate::rot_x(static_cast<int>(rng() % n), angle(rng))); break;
        case 2: c.append(Gate::rot_z(static_cast<int>(rng() % n), angle(rng))); break;
        default: {
          if (n < 2) break;
          const int control = static_cast<int>(rng() % n);
          int target = static_cast<int>(rng() % n);
          if (target == control) target = (target + 1) % n;
          c.append(Gate::cx(control, target));
        }
      }
    }
    const QuantumCircuit back = parse_qasm(export_qasm(c));
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(back.gates()[i] == c.gates()[i]);
  }
}

TEST_CASE("parse_qasm rejects out-of-subset input") {
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\n"), ParseError);  // no version line
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nh q[0];\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nt q[0];\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nrz() q[0];\n"), ParseError);
}
