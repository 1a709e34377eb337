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
#include <optional>
#include <string>

#include "adiasat/evolve.hpp"

namespace adiasat {

struct Distribution {
  int num_qubits = 0;
  std::vector<double> probabilities;
};

struct Histogram {
  std::uint64_t shots = 0;
  std::map<BasisIndex, std::uint64_t> counts;
};

/// Born-rule probabilities |a_k|^2 of a normalized state.
Distribution exact_distribution(const StateVector& psi);

/// `shots` i.i.d. categorical draws from d. The generator is mt19937_64
/// seeded with `seed`; each draw maps the raw 64-bit output to [0,1) as
/// (x >> 11) * 2^-53, so histograms are identical across platforms for
/// the same (d, shots, seed). Throws std::invalid_argument on shots = 0.
Histogram sample(const Distribution& d, std::uint64_t shots, std::uint64_t seed);

struct BestState {
  BasisIndex state = 0;
  Assignment assignment;
};

/// Argmax by probability (or count); ties break toward the smallest basis
/// index so results are deterministic.
BestState extract_best(const Distribution& d);
BestState extract_best(const Histogram& h, int num_qubits);

struct VerifyResult {
  bool satisfies = false;
  int unsat = 0;
};

/// Decodes the basis state and counts unsatisfied clauses.
VerifyResult verify(const CnfFormula& f, BasisIndex s);

/// Probability mass on the states attaining the spectrum's minimum energy.
/// For a satisfiable formula this is the mass on satisfying assignments.
double ground_state_mass(const Distribution& d, const DiagonalSpectrum& spectrum);

/// Per-ket tables are embedded in reports only up to this width; beyond it
/// the JSON fields are null.
inline constexpr int kReportTableMaxQubits = 12;

struct SolveReport {
  int num_vars = 0;
  int num_clauses = 0;
  int steps = 0;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  BasisIndex best_state = 0;
  Assignment best_assignment;
  int best_unsat = 0;
  bool satisfies = false;
  int min_unsat = 0;
  double solution_mass = 0.0;
  std::optional<Distribution> distribution;
  std::optional<Histogram> histogram;
};

/// Canonical JSON: fixed key order, kets as bitstring keys ("101"),
/// probabilities with 12 significant digits. Byte-deterministic for
/// identical report values.
std::string write_report(const SolveReport& r);

/// CSV dump `bitstring,count,frequency`, one row per ket (all kets up to
/// kReportTableMaxQubits, observed kets beyond that).
std::string histogram_csv(const Histogram& h, int num_qubits);

}  // namespace adiasat
