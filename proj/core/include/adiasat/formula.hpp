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
#include <iosfwd>
#include <string>
#include <vector>

#include "adiasat/error.hpp"

namespace adiasat {

/// Index of a computational basis state. The bitstring b1 b2 ... bn is read
/// with b1 as the most significant bit, and bit bj encodes variable xj as
/// bj = 1 - xj (true maps to 0, the |0> ket).
using BasisIndex = std::uint64_t;

/// One signed occurrence of a variable. Variables are 1-based.
struct Literal {
  int var = 0;
  bool negated = false;
};

struct Clause {
  std::vector<Literal> literals;
};

/// A CNF formula: the conjunction of `clauses` over variables 1..num_vars.
struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

/// values[j-1] is the Boolean assigned to variable j.
using Assignment = std::vector<bool>;

/// Largest variable count accepted by exhaustive routines (2^n scan).
inline constexpr int kExhaustiveBound = 24;

/// Parses DIMACS CNF: `c` comment lines, one `p cnf <n> <m>` header, then m
/// zero-terminated clauses. Clauses may span lines; CRLF and trailing
/// whitespace are accepted. Throws ParseError (with line number) on a
/// missing or duplicate header, an out-of-range literal, a clause count
/// mismatch, or an empty clause.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

/// Serializes a formula back to DIMACS text (one clause per line).
std::string to_dimacs(const CnfFormula& f);

bool literal_satisfied(const Literal& l, const Assignment& a);

/// Number of clauses of `f` with no literal satisfied by `a`; 0 iff `a`
/// satisfies the formula. Throws std::invalid_argument on length mismatch.
int unsat_count(const CnfFormula& f, const Assignment& a);

/// All satisfying assignments, ordered by ascending basis index of their
/// ket encoding. Throws ResourceError when num_vars exceeds `bound`.
std::vector<Assignment> enumerate_solutions(const CnfFormula& f,
                                            int bound = kExhaustiveBound);

/// Bijection between assignments and basis indices: bj = 1 - xj, b1 is the
/// most significant bit.
BasisIndex assignment_to_basis(const Assignment& a);
Assignment basis_to_assignment(BasisIndex k, int num_vars);

/// Renders k as the bitstring "b1b2...bn", e.g. index 5 over 3 variables
/// is "101".
std::string basis_to_bitstring(BasisIndex k, int num_vars);

}  // namespace adiasat
