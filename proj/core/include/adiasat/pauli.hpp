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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adiasat/formula.hpp"

namespace adiasat {

/// Support set of a tensor product of Pauli-Z factors, as an n-bit mask
/// aligned with the BasisIndex layout: qubit j occupies bit (n - j), so
/// qubit 1 is the most significant bit. The empty mask is the identity.
using SupportMask = std::uint64_t;

/// Coefficients with magnitude below this are dropped after add/multiply,
/// so cancellations in projector sums leave structurally clean polynomials.
inline constexpr double kCoeffDropTolerance = 1e-12;

/// Eigenvalue of the Z-product with the given support on basis state k:
/// +1 when the number of set bits of k inside the support is even, else -1.
int z_term_eigenvalue(SupportMask support, BasisIndex k);

/// Mask of the single-qubit operator Z_j over n qubits (1 <= j <= n).
SupportMask qubit_mask(int num_qubits, int j);

/// Qubit indices (1-based, ascending) present in a support mask.
std::vector<int> support_qubits(SupportMask support, int num_qubits);

/// A real linear combination of Pauli-Z tensor products over n qubits.
/// Every Hamiltonian handled by this library is one; the operator is
/// diagonal in the computational basis and Hermitian by construction.
class ZPolynomial {
 public:
  explicit ZPolynomial(int num_qubits);

  /// coeff * Id over n qubits.
  static ZPolynomial identity(int num_qubits, double coeff = 1.0);
  /// coeff * Z_j over n qubits.
  static ZPolynomial pauli_z(int num_qubits, int j, double coeff = 1.0);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::map<SupportMask, double>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Stored coefficient for a support mask, or 0 when absent.
  double coefficient(SupportMask support) const;

  /// Accumulates coeff onto the term; drops the result when it falls
  /// below kCoeffDropTolerance.
  void add_term(SupportMask support, double coeff);

  /// Diagonal entry of the operator on basis state k.
  double eigenvalue(BasisIndex k) const;

  /// Text dump, one term per line: `<coefficient> <qubit indices...>`,
  /// identity terms carry no indices. Terms are ordered by support size,
  /// then lexicographically by qubit indices.
  std::string to_text() const;

 private:
  int num_qubits_;
  std::map<SupportMask, double> terms_;
};

ZPolynomial poly_add(const ZPolynomial& p, const ZPolynomial& q);
ZPolynomial poly_scale(const ZPolynomial& p, double c);

/// Product of two polynomials. Z_j^2 = Id, so supports combine by
/// symmetric difference (XOR of masks) and coefficients multiply.
ZPolynomial poly_multiply(const ZPolynomial& p, const ZPolynomial& q);

ZPolynomial operator+(const ZPolynomial& p, const ZPolynomial& q);
ZPolynomial operator-(const ZPolynomial& p, const ZPolynomial& q);
ZPolynomial operator*(const ZPolynomial& p, const ZPolynomial& q);
ZPolynomial operator*(double c, const ZPolynomial& p);
ZPolynomial operator*(const ZPolynomial& p, double c);

/// Deterministic term order used for dumps and circuit emission: ascending
/// support size, then ascending qubit tuples.
bool term_order_less(SupportMask a, SupportMask b, int num_qubits);

/// The +/-1 diagonal of Z_j over n qubits: blocks of 2^(n-j) entries
/// alternating +1/-1, starting with +1. `minus_positions` collects the
/// basis indices with eigenvalue -1.
struct DiagPattern {
  int num_qubits = 0;
  int qubit = 0;
  std::vector<int> values;
  std::vector<BasisIndex> minus_positions;
};

DiagPattern diag_pattern(int num_qubits, int j);

/// Projector onto the basis states where the literal is false:
/// (Id - Z_j)/2 for a positive literal, (Id + Z_j)/2 for a negated one.
/// Its eigenvalues are 0 and 1.
ZPolynomial literal_hamiltonian(const Literal& l, int num_qubits);

/// Projector with eigenvalue 1 exactly on the basis states whose decoded
/// assignment violates the clause: the product of the clause literals'
/// projectors after deduplication. Complementary literals make the clause
/// a tautology and yield the zero polynomial.
ZPolynomial clause_to_projector(const Clause& c, int num_qubits);

/// Sum of the clause projectors. The eigenvalue on basis state k equals
/// the number of clauses violated by the decoded assignment, so ground
/// states encode maximum-satisfiability optima.
ZPolynomial formula_to_hamiltonian(const CnfFormula& f);

}  // namespace adiasat
