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

#include "adiasat/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

namespace adiasat {

namespace {

std::string format_probability(double p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", p);
  return buf;
}

// Raw engine output to [0,1): the top 53 bits as a binary fraction.
double to_unit_interval(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace

Distribution exact_distribution(const StateVector& psi) {
  Distribution d;
  d.num_qubits = psi.num_qubits();
  d.probabilities.reserve(psi.dimension());
  for (const Complex& a : psi.amplitudes()) d.probabilities.push_back(std::norm(a));
  return d;
}

Histogram sample(const Distribution& d, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shot count must be at least 1");

  std::vector<double> cumulative(d.probabilities.size());
  double running = 0.0;
  for (std::size_t k = 0; k < d.probabilities.size(); ++k) {
    running += d.probabilities[k];
    cumulative[k] = running;
  }

  Histogram h;
  h.shots = shots;
  std::mt19937_64 engine(seed);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = to_unit_interval(engine()) * running;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t k =
        it == cumulative.end() ? cumulative.size() - 1
                               : static_cast<std::size_t>(it - cumulative.begin());
    ++h.counts[static_cast<BasisIndex>(k)];
  }
  return h;
}

BestState extract_best(const Distribution& d) {
  if (d.probabilities.empty()) throw std::invalid_argument("empty distribution");
  std::size_t best = 0;
  for (std::size_t k = 1; k < d.probabilities.size(); ++k) {
    if (d.probabilities[k] > d.probabilities[best]) best = k;
  }
  return {static_cast<BasisIndex>(best),
          basis_to_assignment(static_cast<BasisIndex>(best), d.num_qubits)};
}

BestState extract_best(const Histogram& h, int num_qubits) {
  if (h.counts.empty()) throw std::invalid_argument("empty histogram");
  BasisIndex best = h.counts.begin()->first;
  std::uint64_t best_count = h.counts.begin()->second;
  for (const auto& [state, count] : h.counts) {
    if (count > best_count) {
      best = state;
      best_count = count;
    }
  }
  return {best, basis_to_assignment(best, num_qubits)};
}

VerifyResult verify(const CnfFormula& f, BasisIndex s) {
  const int unsat = unsat_count(f, basis_to_assignment(s, f.num_vars));
  return {unsat == 0, unsat};
}

double ground_state_mass(const Distribution& d, const DiagonalSpectrum& spectrum) {
  if (d.num_qubits != spectrum.num_qubits)
    throw std::invalid_argument("distribution and spectrum widths differ");
  const double min_energy =
      *std::min_element(spectrum.energies.begin(), spectrum.energies.end());
  double mass = 0.0;
  for (std::size_t k = 0; k < d.probabilities.size(); ++k) {
    if (spectrum.energies[k] <= min_energy + 1e-9) mass += d.probabilities[k];
  }
  return mass;
}

std::string write_report(const SolveReport& r) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"instance\": {\"num_vars\": " << r.num_vars
      << ", \"num_clauses\": " << r.num_clauses << "},\n";
  out << "  \"schedule\": {\"profile\": \"linear\", \"steps\": " << r.steps << "},\n";
  out << "  \"seed\": " << r.seed << ",\n";
  out << "  \"shots\": " << r.shots << ",\n";
  out << "  \"best_state\": \"" << basis_to_bitstring(r.best_state, r.num_vars)
      << "\",\n";
  out << "  \"best_assignment\": [";
  for (std::size_t j = 0; j < r.best_assignment.size(); ++j) {
    if (j > 0) out << ", ";
    out << (r.best_assignment[j] ? 1 : 0);
  }
  out << "],\n";
  out << "  \"best_unsat\": " << r.best_unsat << ",\n";
  out << "  \"satisfies\": " << (r.satisfies ? "true" : "false") << ",\n";
  out << "  \"min_unsat\": " << r.min_unsat << ",\n";
  out << "  \"solution_mass\": " << format_probability(r.solution_mass) << ",\n";

  out << "  \"distribution\": ";
  if (r.distribution.has_value()) {
    out << "{";
    const Distribution& d = *r.distribution;
    for (std::size_t k = 0; k < d.probabilities.size(); ++k) {
      if (k > 0) out << ", ";
      out << '"' << basis_to_bitstring(k, d.num_qubits) << "\": "
          << format_probability(d.probabilities[k]);
    }
    out << "},\n";
  } else {
    out << "null,\n";
  }

  out << "  \"histogram\": ";
  if (r.histogram.has_value()) {
    const Histogram& h = *r.histogram;
    out << "{";
    bool first = true;
    if (r.num_vars <= kReportTableMaxQubits) {
      const BasisIndex dim = BasisIndex{1} << r.num_vars;
      for (BasisIndex k = 0; k < dim; ++k) {
        if (!first) out << ", ";
        first = false;
        auto it = h.counts.find(k);
        out << '"' << basis_to_bitstring(k, r.num_vars) << "\": "
            << (it == h.counts.end() ? 0 : it->second);
      }
    } else {
      for (const auto& [state, count] : h.counts) {
        if (!first) out << ", ";
        first = false;
        out << '"' << basis_to_bitstring(state, r.num_vars) << "\": " << count;
      }
    }
    out << "}\n";
  } else {
    out << "null\n";
  }

  out << "}\n";
  return out.str();
}

std::string histogram_csv(const Histogram& h, int num_qubits) {
  std::ostringstream out;
  out << "bitstring,count,frequency\n";
  const double shots = static_cast<double>(h.shots);
  if (num_qubits <= kReportTableMaxQubits) {
    const BasisIndex dim = BasisIndex{1} << num_qubits;
    for (BasisIndex k = 0; k < dim; ++k) {
      auto it = h.counts.find(k);
      const std::uint64_t count = it == h.counts.end() ? 0 : it->second;
      out << basis_to_bitstring(k, num_qubits) << ',' << count << ','
          << format_probability(static_cast<double>(count) / shots) << '\n';
    }
  } else {
    for (const auto& [state, count] : h.counts) {
      out << basis_to_bitstring(state, num_qubits) << ',' << count << ','
          << format_probability(static_cast<double>(count) / shots) << '\n';
    }
  }
  return out.str();
}

}  // namespace adiasat
