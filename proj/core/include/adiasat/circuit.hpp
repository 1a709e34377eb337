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

#pragma once

#include <string>

#include "adiasat/evolve.hpp"

namespace adiasat {

// Gate conventions, pinned so compiled circuits reproduce the evolution
// operators exactly (not merely up to phase):
//   RotZ(lambda) = diag(exp(-i*lambda/2), exp(+i*lambda/2))
//   RotX(lambda) = cos(lambda/2)*Id - i*sin(lambda/2)*X
//   Hadamard     = (1/sqrt(2)) [[1, 1], [1, -1]]
//   ControlledNot flips the target when the control bit is 1.

enum class GateKind { Hadamard, RotX, RotZ, ControlledNot };

/// Gate qubits are 0-based register indices; register q hosts logical
/// qubit q+1 of the 1-based numbering used by formulas and polynomials.
struct Gate {
  GateKind kind = GateKind::Hadamard;
  int q0 = 0;        // target, or control for ControlledNot
  int q1 = -1;       // target of ControlledNot
  double angle = 0.0;

  static Gate hadamard(int q) { return {GateKind::Hadamard, q, -1, 0.0}; }
  static Gate rot_x(int q, double angle) { return {GateKind::RotX, q, -1, angle}; }
  static Gate rot_z(int q, double angle) { return {GateKind::RotZ, q, -1, angle}; }
  static Gate cx(int control, int target) {
    return {GateKind::ControlledNot, control, target, 0.0};
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class QuantumCircuit {
 public:
  explicit QuantumCircuit(int num_qubits);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  /// Appends after validating qubit indices (distinct on 2-qubit gates).
  void append(const Gate& g);
  void extend(const QuantumCircuit& other);

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

/// Rotations with |angle| below this are elided from compiled circuits;
/// the first problem layer and the last driver layer are identities.
inline constexpr double kZeroAngleTolerance = 1e-15;

/// One problem step exp(-i*theta*H_P) as gates, term by term in the
/// deterministic term order. A term with coefficient c and support
/// q1 < ... < qk compiles to:
///   k = 0: nothing (global phase),
///   k = 1: RotZ(2*theta*c) on q1,
///   k >= 2: a CX ladder q1->q2->...->qk, RotZ(2*theta*c) on qk, and the
///           reversed ladder.
QuantumCircuit compile_problem_layer(const ZPolynomial& h, double theta);

/// One driver step exp(-i*theta*H_D): RotX(-2*theta) on every qubit.
QuantumCircuit compile_driver_layer(int num_qubits, double theta);

/// Hadamards on every qubit, then for j = 0..T the driver layer with angle
/// 1-s(j) followed by the problem layer with angle s(j).
QuantumCircuit compile_adiabatic_circuit(const ZPolynomial& h, const Schedule& schedule);

/// Applies the gates in order to |0...0>.
StateVector simulate_circuit(const QuantumCircuit& c);

/// Applies the gates in order to an arbitrary prepared state.
StateVector simulate_circuit(const QuantumCircuit& c, StateVector initial);

/// |<a|b>|, insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

/// OpenQASM 2.0 text. Register index 0 carries logical qubit 1; angles are
/// printed with 17 significant digits, so output is byte-deterministic.
std::string export_qasm(const QuantumCircuit& c);

/// Parses the subset grammar emitted by export_qasm (h/rx/rz/cx over one
/// quantum register). Throws ParseError on anything else.
QuantumCircuit parse_qasm(const std::string& text);

}  // namespace adiasat
