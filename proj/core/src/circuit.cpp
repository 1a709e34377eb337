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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace adiasat {

namespace {

std::string format_angle(double angle) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", angle);
  return buf;
}

// In-place 2x2 unitary on register qubit q (0-based; q = 0 is the most
// significant amplitude-index bit).
void apply_one_qubit(StateVector& psi, int q, Complex u00, Complex u01, Complex u10,
                     Complex u11) {
  auto amps = psi.amplitudes();
  const std::size_t dim = amps.size();
  const std::size_t stride = dim >> (q + 1);
  for (std::size_t group = 0; group < dim; group += 2 * stride) {
    for (std::size_t offset = 0; offset < stride; ++offset) {
      Complex& a0 = amps[group + offset];
      Complex& a1 = amps[group + offset + stride];
      const Complex b0 = u00 * a0 + u01 * a1;
      const Complex b1 = u10 * a0 + u11 * a1;
      a0 = b0;
      a1 = b1;
    }
  }
}

void apply_cx(StateVector& psi, int control, int target) {
  auto amps = psi.amplitudes();
  const std::size_t dim = amps.size();
  const int n = psi.num_qubits();
  const std::size_t cbit = std::size_t{1} << (n - 1 - control);
  const std::size_t tbit = std::size_t{1} << (n - 1 - target);
  for (std::size_t k = 0; k < dim; ++k) {
    if ((k & cbit) && !(k & tbit)) std::swap(amps[k], amps[k | tbit]);
  }
}

}  // namespace

QuantumCircuit::QuantumCircuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("circuit width must be at least 1");
}

void QuantumCircuit::append(const Gate& g) {
  if (g.q0 < 0 || g.q0 >= num_qubits_)
    throw std::invalid_argument("gate qubit index out of range");
  if (g.kind == GateKind::ControlledNot) {
    if (g.q1 < 0 || g.q1 >= num_qubits_)
      throw std::invalid_argument("gate qubit index out of range");
    if (g.q0 == g.q1) throw std::invalid_argument("control equals target");
  }
  gates_.push_back(g);
}

void QuantumCircuit::extend(const QuantumCircuit& other) {
  if (other.num_qubits_ != num_qubits_)
    throw std::invalid_argument("circuit widths differ");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

QuantumCircuit compile_problem_layer(const ZPolynomial& h, double theta) {
  QuantumCircuit circuit(h.num_qubits());

  std::vector<SupportMask> order;
  order.reserve(h.term_count());
  for (const auto& [support, coeff] : h.terms()) {
    if (support != 0) order.push_back(support);
  }
  std::sort(order.begin(), order.end(), [&h](SupportMask a, SupportMask b) {
    return term_order_less(a, b, h.num_qubits());
  });

  for (SupportMask support : order) {
    const double angle = 2.0 * theta * h.coefficient(support);
    if (std::abs(angle) < kZeroAngleTolerance) continue;
    const std::vector<int> qubits = support_qubits(support, h.num_qubits());
    for (std::size_t i = 0; i + 1 < qubits.size(); ++i)
      circuit.append(Gate::cx(qubits[i] - 1, qubits[i + 1] - 1));
    circuit.append(Gate::rot_z(qubits.back() - 1, angle));
    for (std::size_t i = qubits.size() - 1; i > 0; --i)
      circuit.append(Gate::cx(qubits[i - 1] - 1, qubits[i] - 1));
  }
  return circuit;
}

QuantumCircuit compile_driver_layer(int num_qubits, double theta) {
  QuantumCircuit circuit(num_qubits);
  const double angle = -2.0 * theta;
  if (std::abs(angle) < kZeroAngleTolerance) return circuit;
  for (int q = 0; q < num_qubits; ++q) circuit.append(Gate::rot_x(q, angle));
  return circuit;
}

QuantumCircuit compile_adiabatic_circuit(const ZPolynomial& h, const Schedule& schedule) {
  QuantumCircuit circuit(h.num_qubits());
  for (int q = 0; q < h.num_qubits(); ++q) circuit.append(Gate::hadamard(q));
  for (int j = 0; j <= schedule.steps(); ++j) {
    const double s = schedule.s(j);
    circuit.extend(compile_driver_layer(h.num_qubits(), 1.0 - s));
    circuit.extend(compile_problem_layer(h, s));
  }
  return circuit;
}

StateVector simulate_circuit(const QuantumCircuit& c) {
  return simulate_circuit(c, StateVector(c.num_qubits()));
}

StateVector simulate_circuit(const QuantumCircuit& c, StateVector initial) {
  if (initial.num_qubits() != c.num_qubits())
    throw std::invalid_argument("initial state width does not match circuit");
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Hadamard:
        apply_one_qubit(initial, g.q0, {kInvSqrt2, 0}, {kInvSqrt2, 0}, {kInvSqrt2, 0},
                        {-kInvSqrt2, 0});
        break;
      case GateKind::RotX: {
        const double half = 0.5 * g.angle;
        const Complex c0{std::cos(half), 0.0};
        const Complex ms{0.0, -std::sin(half)};
        apply_one_qubit(initial, g.q0, c0, ms, ms, c0);
        break;
      }
      case GateKind::RotZ: {
        const double half = 0.5 * g.angle;
        apply_one_qubit(initial, g.q0, {std::cos(half), -std::sin(half)}, {0, 0}, {0, 0},
                        {std::cos(half), std::sin(half)});
        break;
      }
      case GateKind::ControlledNot:
        apply_cx(initial, g.q0, g.q1);
        break;
    }
  }
  return initial;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("statevector widths differ");
  Complex overlap{0.0, 0.0};
  const auto pa = a.amplitudes();
  const auto pb = b.amplitudes();
  for (std::size_t k = 0; k < pa.size(); ++k) overlap += std::conj(pa[k]) * pb[k];
  return std::abs(overlap);
}

std::string export_qasm(const QuantumCircuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "// logical qubit 1 maps to register index 0\n";
  out << "qreg q[" << c.num_qubits() << "];\n";
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Hadamard:
        out << "h q[" << g.q0 << "];\n";
        break;
      case GateKind::RotX:
        out << "rx(" << format_angle(g.angle) << ") q[" << g.q0 << "];\n";
        break;
      case GateKind::RotZ:
        out << "rz(" << format_angle(g.angle) << ") q[" << g.q0 << "];\n";
        break;
      case GateKind::ControlledNot:
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
    }
  }
  return out.str();
}

namespace {

// Extracts `q[<idx>]` from text starting at pos; advances pos past it.
int parse_qubit_ref(const std::string& text, std::size_t& pos, int line_no) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos + 2 >= text.size() || text[pos] != 'q' || text[pos + 1] != '[')
    throw ParseError(line_no, "expected qubit reference q[<index>]");
  pos += 2;
  std::size_t end = text.find(']', pos);
  if (end == std::string::npos) throw ParseError(line_no, "unterminated qubit reference");
  int idx = 0;
  try {
    idx = std::stoi(text.substr(pos, end - pos));
  } catch (const std::exception&) {
    throw ParseError(line_no, "invalid qubit index");
  }
  pos = end + 1;
  return idx;
}

double parse_angle_arg(const std::string& line, std::size_t& pos, int line_no) {
  if (pos >= line.size() || line[pos] != '(')
    throw ParseError(line_no, "expected '(' with rotation angle");
  std::size_t end = line.find(')', pos);
  if (end == std::string::npos) throw ParseError(line_no, "unterminated angle");
  double angle = 0.0;
  try {
    angle = std::stod(line.substr(pos + 1, end - pos - 1));
  } catch (const std::exception&) {
    throw ParseError(line_no, "invalid rotation angle");
  }
  pos = end + 1;
  return angle;
}

}  // namespace

QuantumCircuit parse_qasm(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_version = false;
  bool have_register = false;
  int width = 0;
  std::vector<Gate> gates;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line.rfind("//", 0) == 0) continue;
    if (line.rfind("OPENQASM", 0) == 0) {
      have_version = true;
      continue;
    }
    if (line.rfind("include", 0) == 0) continue;
    if (line.rfind("qreg", 0) == 0) {
      if (have_register) throw ParseError(line_no, "duplicate qreg declaration");
      std::size_t pos = 4;
      width = parse_qubit_ref(line, pos, line_no);
      if (width < 1) throw ParseError(line_no, "register width must be at least 1");
      have_register = true;
      continue;
    }
    if (!have_register) throw ParseError(line_no, "gate before qreg declaration");

    if (line.rfind("h ", 0) == 0 || line.rfind("h\t", 0) == 0) {
      std::size_t pos = 1;
      gates.push_back(Gate::hadamard(parse_qubit_ref(line, pos, line_no)));
    } else if (line.rfind("rx", 0) == 0) {
      std::size_t pos = 2;
      const double angle = parse_angle_arg(line, pos, line_no);
      gates.push_back(Gate::rot_x(parse_qubit_ref(line, pos, line_no), angle));
    } else if (line.rfind("rz", 0) == 0) {
      std::size_t pos = 2;
      const double angle = parse_angle_arg(line, pos, line_no);
      gates.push_back(Gate::rot_z(parse_qubit_ref(line, pos, line_no), angle));
    } else if (line.rfind("cx", 0) == 0) {
      std::size_t pos = 2;
      const int control = parse_qubit_ref(line, pos, line_no);
      while (pos < line.size() && (std::isspace(static_cast<unsigned char>(line[pos])) ||
                                   line[pos] == ','))
        ++pos;
      const int target = parse_qubit_ref(line, pos, line_no);
      gates.push_back(Gate::cx(control, target));
    } else {
      throw ParseError(line_no, "unsupported statement: " + line);
    }
  }

  if (!have_version) throw ParseError(line_no, "missing OPENQASM header");
  if (!have_register) throw ParseError(line_no, "missing qreg declaration");
  QuantumCircuit circuit(width);
  for (const Gate& g : gates) circuit.append(g);
  return circuit;
}

}  // namespace adiasat
