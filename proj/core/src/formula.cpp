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

#include "adiasat/formula.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace adiasat {

namespace {

bool parse_int(const std::string& token, long long& value) {
  std::size_t pos = 0;
  try {
    value = std::stoll(token, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == token.size();
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula formula;
  bool have_header = false;
  long long expected_clauses = 0;
  Clause current;
  bool in_clause = false;
  int line_no = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;  // blank line
    if (tok == "c" || tok[0] == 'c') continue;

    if (tok == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p cnf' header");
      std::string fmt;
      long long n = 0, m = 0;
      if (!(tokens >> fmt >> n >> m) || fmt != "cnf")
        throw ParseError(line_no, "malformed header, expected 'p cnf <n> <m>'");
      if (n < 1) throw ParseError(line_no, "variable count must be at least 1");
      if (m < 0) throw ParseError(line_no, "negative clause count");
      std::string extra;
      if (tokens >> extra)
        throw ParseError(line_no, "trailing tokens after header");
      formula.num_vars = static_cast<int>(n);
      expected_clauses = m;
      have_header = true;
      continue;
    }

    if (!have_header)
      throw ParseError(line_no, "clause data before 'p cnf' header");

    // Clause literals; a clause may span lines and ends at 0.
    do {
      long long v = 0;
      if (!parse_int(tok, v))
        throw ParseError(line_no, "invalid literal token '" + tok + "'");
      if (v == 0) {
        if (!in_clause) throw ParseError(line_no, "empty clause");
        formula.clauses.push_back(current);
        current.literals.clear();
        in_clause = false;
        if (static_cast<long long>(formula.clauses.size()) > expected_clauses)
          throw ParseError(line_no, "clause count mismatch: more clauses than declared");
      } else {
        long long var = v < 0 ? -v : v;
        if (var > formula.num_vars)
          throw ParseError(line_no, "variable out of range: " + std::to_string(var));
        current.literals.push_back({static_cast<int>(var), v < 0});
        in_clause = true;
      }
    } while (tokens >> tok);
  }

  if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
  if (in_clause) throw ParseError(line_no, "unterminated clause at end of input");
  if (static_cast<long long>(formula.clauses.size()) != expected_clauses)
    throw ParseError(line_no, "clause count mismatch: declared " +
                                  std::to_string(expected_clauses) + ", found " +
                                  std::to_string(formula.clauses.size()));
  return formula;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c.literals) out << (l.negated ? -l.var : l.var) << ' ';
    out << "0\n";
  }
  return out.str();
}

bool literal_satisfied(const Literal& l, const Assignment& a) {
  return a[static_cast<std::size_t>(l.var - 1)] != l.negated;
}

int unsat_count(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.num_vars)
    throw std::invalid_argument("assignment length does not match variable count");
  int count = 0;
  for (const Clause& c : f.clauses) {
    bool sat = false;
    for (const Literal& l : c.literals) {
      if (literal_satisfied(l, a)) {
        sat = true;
        break;
      }
    }
    if (!sat) ++count;
  }
  return count;
}

std::vector<Assignment> enumerate_solutions(const CnfFormula& f, int bound) {
  if (f.num_vars > bound)
    throw ResourceError("enumeration bound exceeded: " + std::to_string(f.num_vars) +
                        " variables > " + std::to_string(bound));
  std::vector<Assignment> solutions;
  const BasisIndex dim = BasisIndex{1} << f.num_vars;
  for (BasisIndex k = 0; k < dim; ++k) {
    Assignment a = basis_to_assignment(k, f.num_vars);
    if (unsat_count(f, a) == 0) solutions.push_back(std::move(a));
  }
  return solutions;
}

BasisIndex assignment_to_basis(const Assignment& a) {
  const int n = static_cast<int>(a.size());
  BasisIndex k = 0;
  for (int j = 1; j <= n; ++j) {
    if (!a[static_cast<std::size_t>(j - 1)]) k |= BasisIndex{1} << (n - j);
  }
  return k;
}

Assignment basis_to_assignment(BasisIndex k, int num_vars) {
  if (num_vars < 1 || (num_vars < 64 && k >= (BasisIndex{1} << num_vars)))
    throw std::invalid_argument("basis index out of range");
  Assignment a(static_cast<std::size_t>(num_vars));
  for (int j = 1; j <= num_vars; ++j) {
    a[static_cast<std::size_t>(j - 1)] = ((k >> (num_vars - j)) & 1) == 0;
  }
  return a;
}

std::string basis_to_bitstring(BasisIndex k, int num_vars) {
  std::string s(static_cast<std::size_t>(num_vars), '0');
  for (int j = 1; j <= num_vars; ++j) {
    if ((k >> (num_vars - j)) & 1) s[static_cast<std::size_t>(j - 1)] = '1';
  }
  return s;
}

}  // namespace adiasat
