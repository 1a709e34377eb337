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

#include <benchmark/benchmark.h>

#include <random>

#include "adiasat/circuit.hpp"
#include "adiasat/pauli.hpp"

namespace {

using namespace adiasat;

CnfFormula random_3sat(int num_vars, int num_clauses, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> var(1, num_vars);
  std::bernoulli_distribution negated(0.5);
  CnfFormula f;
  f.num_vars = num_vars;
  for (int i = 0; i < num_clauses; ++i) {
    Clause c;
    for (int l = 0; l < 3; ++l) c.literals.push_back({var(rng), negated(rng)});
    f.clauses.push_back(c);
  }
  return f;
}

void BM_FormulaToHamiltonian(benchmark::State& state) {
  const CnfFormula f =
      random_3sat(static_cast<int>(state.range(0)), 4 * static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(formula_to_hamiltonian(f));
}
BENCHMARK(BM_FormulaToHamiltonian)->Arg(8)->Arg(16)->Arg(32);

void BM_BuildSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ZPolynomial h = formula_to_hamiltonian(random_3sat(n, 4 * n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(build_spectrum(h));
}
BENCHMARK(BM_BuildSpectrum)->Arg(8)->Arg(12)->Arg(16);

void BM_DriverStep(benchmark::State& state) {
  StateVector psi = init_plus_state(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    apply_driver_step(psi, 0.37);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_DriverStep)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_RunAdiabatic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ZPolynomial h = formula_to_hamiltonian(random_3sat(n, 4 * n, 3));
  const Schedule schedule(50);
  for (auto _ : state) benchmark::DoNotOptimize(run_adiabatic(h, schedule));
}
BENCHMARK(BM_RunAdiabatic)->Arg(8)->Arg(12)->Arg(16);

void BM_SimulateCompiledCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ZPolynomial h = formula_to_hamiltonian(random_3sat(n, 4 * n, 4));
  const QuantumCircuit circuit = compile_adiabatic_circuit(h, Schedule(10));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_circuit(circuit));
}
BENCHMARK(BM_SimulateCompiledCircuit)->Arg(4)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
