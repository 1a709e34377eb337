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

#include "adiasat/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace adiasat {

namespace {

void check_qubit_index(int num_qubits, int j) {
  if (j < 1 || j > num_qubits)
    throw std::invalid_argument("qubit index " + std::to_string(j) +
                                " out of range 1.." + std::to_string(num_qubits));
}

void check_same_width(const ZPolynomial& p, const ZPolynomial& q) {
  if (p.num_qubits() != q.num_qubits())
    throw std::invalid_argument("polynomial qubit counts differ");
}

}  // namespace

int z_term_eigenvalue(SupportMask support, BasisIndex k) {
  return (std::popcount(support & k) & 1) ? -1 : 1;
}

SupportMask qubit_mask(int num_qubits, int j) {
  check_qubit_index(num_qubits, j);
  return SupportMask{1} << (num_qubits - j);
}

std::vector<int> support_qubits(SupportMask support, int num_qubits) {
  std::vector<int> qubits;
  for (int j = 1; j <= num_qubits; ++j) {
    if (support & (SupportMask{1} << (num_qubits - j))) qubits.push_back(j);
  }
  return qubits;
}

ZPolynomial::ZPolynomial(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 63)
    throw std::invalid_argument("qubit count out of range 1..63");
}

ZPolynomial ZPolynomial::identity(int num_qubits, double coeff) {
  ZPolynomial p(num_qubits);
  p.add_term(0, coeff);
  return p;
}

ZPolynomial ZPolynomial::pauli_z(int num_qubits, int j, double coeff) {
  ZPolynomial p(num_qubits);
  p.add_term(qubit_mask(num_qubits, j), coeff);
  return p;
}

double ZPolynomial::coefficient(SupportMask support) const {
  auto it = terms_.find(support);
  return it == terms_.end() ? 0.0 : it->second;
}

void ZPolynomial::add_term(SupportMask support, double coeff) {
  if (num_qubits_ < 64 && support >= (SupportMask{1} << num_qubits_))
    throw std::invalid_argument("support mask exceeds qubit count");
  auto [it, inserted] = terms_.try_emplace(support, 0.0);
  it->second += coeff;
  if (std::abs(it->second) < kCoeffDropTolerance) terms_.erase(it);
}

double ZPolynomial::eigenvalue(BasisIndex k) const {
  double value = 0.0;
  for (const auto& [support, coeff] : terms_)
    value += coeff * z_term_eigenvalue(support, k);
  return value;
}

bool term_order_less(SupportMask a, SupportMask b, int num_qubits) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Same support size: ascending qubit tuples. Qubit 1 is the high bit,
  // so lexicographic order on tuples is descending order on masks.
  (void)num_qubits;
  return a > b;
}

std::string ZPolynomial::to_text() const {
  std::vector<SupportMask> order;
  order.reserve(terms_.size());
  for (const auto& [support, coeff] : terms_) order.push_back(support);
  std::sort(order.begin(), order.end(), [this](SupportMask a, SupportMask b) {
    return term_order_less(a, b, num_qubits_);
  });

  std::ostringstream out;
  char buf[64];
  for (SupportMask support : order) {
    std::snprintf(buf, sizeof(buf), "%.17g", coefficient(support));
    out << buf;
    for (int q : support_qubits(support, num_qubits_)) out << ' ' << q;
    out << '\n';
  }
  return out.str();
}

ZPolynomial poly_add(const ZPolynomial& p, const ZPolynomial& q) {
  check_same_width(p, q);
  ZPolynomial r = p;
  for (const auto& [support, coeff] : q.terms()) r.add_term(support, coeff);
  return r;
}

ZPolynomial poly_scale(const ZPolynomial& p, double c) {
  ZPolynomial r(p.num_qubits());
  for (const auto& [support, coeff] : p.terms()) r.add_term(support, coeff * c);
  return r;
}

ZPolynomial poly_multiply(const ZPolynomial& p, const ZPolynomial& q) {
  check_same_width(p, q);
  ZPolynomial r(p.num_qubits());
  for (const auto& [sp, cp] : p.terms())
    for (const auto& [sq, cq] : q.terms()) r.add_term(sp ^ sq, cp * cq);
  return r;
}

ZPolynomial operator+(const ZPolynomial& p, const ZPolynomial& q) { return poly_add(p, q); }

ZPolynomial operator-(const ZPolynomial& p, const ZPolynomial& q) {
  return poly_add(p, poly_scale(q, -1.0));
}

ZPolynomial operator*(const ZPolynomial& p, const ZPolynomial& q) { return poly_multiply(p, q); }

ZPolynomial operator*(double c, const ZPolynomial& p) { return poly_scale(p, c); }

ZPolynomial operator*(const ZPolynomial& p, double c) { return poly_scale(p, c); }

DiagPattern diag_pattern(int num_qubits, int j) {
  check_qubit_index(num_qubits, j);
  if (num_qubits > kExhaustiveBound)
    throw ResourceError("diagonal pattern over " + std::to_string(num_qubits) +
                        " qubits exceeds the exhaustive bound");
  DiagPattern pattern;
  pattern.num_qubits = num_qubits;
  pattern.qubit = j;
  const BasisIndex dim = BasisIndex{1} << num_qubits;
  const SupportMask mask = qubit_mask(num_qubits, j);
  pattern.values.reserve(dim);
  for (BasisIndex k = 0; k < dim; ++k) {
    const int value = z_term_eigenvalue(mask, k);
    pattern.values.push_back(value);
    if (value < 0) pattern.minus_positions.push_back(k);
  }
  return pattern;
}

ZPolynomial literal_hamiltonian(const Literal& l, int num_qubits) {
  check_qubit_index(num_qubits, l.var);
  ZPolynomial p(num_qubits);
  p.add_term(0, 0.5);
  p.add_term(qubit_mask(num_qubits, l.var), l.negated ? 0.5 : -0.5);
  return p;
}

ZPolynomial clause_to_projector(const Clause& c, int num_qubits) {
  if (c.literals.empty()) throw std::invalid_argument("empty clause");

  // Deduplicate; complementary literals make the clause a tautology.
  std::map<int, bool> sign;
  for (const Literal& l : c.literals) {
    check_qubit_index(num_qubits, l.var);
    auto [it, inserted] = sign.try_emplace(l.var, l.negated);
    if (!inserted && it->second != l.negated) return ZPolynomial(num_qubits);
  }

  ZPolynomial projector = ZPolynomial::identity(num_qubits);
  for (const auto& [var, negated] : sign)
    projector = poly_multiply(projector, literal_hamiltonian({var, negated}, num_qubits));
  return projector;
}

ZPolynomial formula_to_hamiltonian(const CnfFormula& f) {
  ZPolynomial h(f.num_vars);
  for (const Clause& c : f.clauses) h = poly_add(h, clause_to_projector(c, f.num_vars));
  return h;
}

}  // namespace adiasat
