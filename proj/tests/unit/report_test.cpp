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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "../test_util.hpp"

using namespace adiasat;
using testutil::make_phi;

TEST_CASE("exact_distribution applies the Born rule") {
  const Distribution uniform = exact_distribution(init_plus_state(2));
  for (double p : uniform.probabilities) CHECK(p == doctest::Approx(0.25).epsilon(1e-12));

  StateVector basis(3);
  basis.set_amplitude(0, Complex{0, 0});
  basis.set_amplitude(3, Complex{0, 1});  // |011> with a phase
  const Distribution point = exact_distribution(basis);
  for (BasisIndex k = 0; k < 8; ++k)
    CHECK(point.probabilities[k] == doctest::Approx(k == 3 ? 1.0 : 0.0).epsilon(1e-12));
}

TEST_CASE("sample is deterministic and respects point masses") {
  Distribution point{2, {0.0, 0.0, 0.0, 0.0}};
  point.probabilities[0] = 1.0;
  const Histogram h = sample(point, 100, 1);
  CHECK(h.shots == 100);
  REQUIRE(h.counts.size() == 1);
  CHECK(h.counts.at(0) == 100);

  const Distribution d = exact_distribution(
      run_adiabatic(formula_to_hamiltonian(make_phi()), Schedule(10)));
  const Histogram a = sample(d, 2048, 7);
  const Histogram b = sample(d, 2048, 7);
  CHECK(a.counts == b.counts);
  const Histogram c = sample(d, 2048, 8);
  CHECK(a.counts != c.counts);

  CHECK_THROWS_AS(sample(d, 0, 7), std::invalid_argument);
}

TEST_CASE("sampled frequencies sit inside binomial error bars") {
  const Distribution d = exact_distribution(
      run_adiabatic(formula_to_hamiltonian(make_phi()), Schedule(10)));
  const std::uint64_t shots = 2048;
  for (std::uint64_t seed : {3u, 7u, 11u}) {
    const Histogram h = sample(d, shots, seed);
    std::uint64_t total = 0;
    for (const auto& [state, count] : h.counts) total += count;
    CHECK(total == shots);
    for (BasisIndex k = 0; k < 8; ++k) {
      const double p = d.probabilities[k];
      auto it = h.counts.find(k);
      const double freq =
          static_cast<double>(it == h.counts.end() ? 0 : it->second) / shots;
      const double sigma = std::sqrt(p * (1.0 - p) / shots);
      CHECK(std::abs(freq - p) <= 3.0 * sigma + 1e-12);
    }
  }
}

TEST_CASE("larger shot counts track the distribution more closely") {
  const Distribution d = exact_distribution(
      run_adiabatic(formula_to_hamiltonian(make_phi()), Schedule(10)));
  auto max_gap = [&](std::uint64_t shots) {
    const Histogram h = sample(d, shots, 4242);
    double gap = 0.0;
    for (BasisIndex k = 0; k < 8; ++k) {
      auto it = h.counts.find(k);
      const double freq =
          static_cast<double>(it == h.counts.end() ? 0 : it->second) / shots;
      gap = std::max(gap, std::abs(freq - d.probabilities[k]));
    }
    return gap;
  };
  const double g8 = max_gap(1u << 8);
  const double g12 = max_gap(1u << 12);
  const double g16 = max_gap(1u << 16);
  CHECK(g12 < g8);
  CHECK(g16 < g12);
}

TEST_CASE("extract_best breaks ties toward the smaller basis index") {
  const Distribution d = exact_distribution(
      run_adiabatic(formula_to_hamiltonian(make_phi()), Schedule(10)));
  const BestState best = extract_best(d);
  CHECK(best.state == 5);
  CHECK(best.assignment == Assignment{false, true, false});

  Distribution tie{2, {0.5, 0.0, 0.5, 0.0}};
  CHECK(extract_best(tie).state == 0);

  Distribution point{2, {0.0, 0.0, 1.0, 0.0}};
  CHECK(extract_best(point).state == 2);

  Histogram h;
  h.shots = 10;
  h.counts[1] = 5;
  h.counts[3] = 5;
  CHECK(extract_best(h, 2).state == 1);
}

TEST_CASE("verify closes the loop against the formula") {
  const CnfFormula phi = make_phi();
  const VerifyResult good = verify(phi, 5);
  CHECK(good.satisfies);
  CHECK(good.unsat == 0);

  const VerifyResult bad = verify(phi, 6);
  CHECK(!bad.satisfies);
  CHECK(bad.unsat == 1);

  const CnfFormula empty{2, {}};
  CHECK(verify(empty, 3).satisfies);
}

TEST_CASE("ground_state_mass sums the minimum-energy kets") {
  const ZPolynomial h = formula_to_hamiltonian(make_phi());
  const DiagonalSpectrum spectrum = build_spectrum(h);
  const Distribution d = exact_distribution(run_adiabatic(h, Schedule(10)));
  CHECK(ground_state_mass(d, spectrum) ==
        doctest::Approx(0.936683463523620).epsilon(1e-9));
}

TEST_CASE("write_report is canonical and byte-deterministic") {
  const CnfFormula phi = make_phi();
  const ZPolynomial h = formula_to_hamiltonian(phi);
  const DiagonalSpectrum spectrum = build_spectrum(h);
  const Distribution d = exact_distribution(run_adiabatic(h, Schedule(10)));

  SolveReport r;
  r.num_vars = 3;
  r.num_clauses = 4;
  r.steps = 10;
  r.seed = 7;
  r.shots = 2048;
  const BestState best = extract_best(d);
  r.best_state = best.state;
  r.best_assignment = best.assignment;
  const VerifyResult vr = verify(phi, best.state);
  r.best_unsat = vr.unsat;
  r.satisfies = vr.satisfies;
  r.min_unsat = 0;
  r.solution_mass = ground_state_mass(d, spectrum);
  r.distribution = d;
  r.histogram = sample(d, r.shots, r.seed);

  const std::string text = write_report(r);
  CHECK(text.find("\"best_state\": \"101\"") != std::string::npos);
  CHECK(text.find("\"best_assignment\": [0, 1, 0]") != std::string::npos);
  CHECK(text.find("\"satisfies\": true") != std::string::npos);
  CHECK(text.find("\"solution_mass\": 0.936683463524") != std::string::npos);
  CHECK(text == write_report(r));

  SolveReport bare = r;
  bare.shots = 0;
  bare.histogram.reset();
  bare.distribution.reset();
  const std::string bare_text = write_report(bare);
  CHECK(bare_text.find("\"histogram\": null") != std::string::npos);
  CHECK(bare_text.find("\"distribution\": null") != std::string::npos);
}

TEST_CASE("histogram_csv lists every ket for small widths") {
  Distribution d{2, {0.5, 0.5, 0.0, 0.0}};
  const Histogram h = sample(d, 64, 9);
  const std::string csv = histogram_csv(h, 2);
  CHECK(csv.rfind("bitstring,count,frequency\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 kets
  CHECK(csv.find("\n10,0,0\n") != std::string::npos);
}

TEST_CASE("best state of a converged run satisfies random planted instances") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);  // 3..6 variables
    const int m = 3 + static_cast<int>(rng() % 10);
    const CnfFormula f = testutil::random_satisfiable_3sat(rng, n, m);
    const ZPolynomial h = formula_to_hamiltonian(f);
    const Distribution d = exact_distribution(run_adiabatic(h, Schedule(100)));
    const BestState best = extract_best(d);
    const VerifyResult vr = verify(f, best.state);
    CHECK(vr.satisfies);

    // Membership agrees with exhaustive enumeration.
    const auto solutions = enumerate_solutions(f);
    bool member = false;
    for (const Assignment& a : solutions)
      if (a == best.assignment) member = true;
    CHECK(member == vr.satisfies);
  }
}
