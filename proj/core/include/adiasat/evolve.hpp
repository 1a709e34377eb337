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

#include <complex>
#include <span>
#include <vector>

#include "adiasat/pauli.hpp"

namespace adiasat {

using Complex = std::complex<double>;

/// Dense statevector cap: 2^24 amplitudes is ~256 MiB of doubles.
inline constexpr int kMaxStateQubits = 24;

/// 2^n complex amplitudes indexed by BasisIndex. Mutated in place by the
/// evolution primitives; at most one writer at a time.
class StateVector {
 public:
  /// |0...0> over n qubits. Throws ResourceError beyond kMaxStateQubits.
  explicit StateVector(int num_qubits);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }
  Complex amplitude(BasisIndex k) const { return amps_.at(k); }
  void set_amplitude(BasisIndex k, Complex a) { amps_.at(k) = a; }

  double norm() const;

 private:
  int num_qubits_;
  std::vector<Complex> amps_;
};

/// Largest amplitude-wise deviation between two states of equal width.
double max_amplitude_deviation(const StateVector& a, const StateVector& b);

/// The interpolation schedule: T steps with s(j) = j/T for j = 0..T, so the
/// loop body runs T+1 times, s(0) = 0 and s(T) = 1. Linear is the only
/// profile; the tag leaves room for alternatives without an API change.
struct Schedule {
  enum class Profile { Linear };

  explicit Schedule(int steps, Profile profile = Profile::Linear);

  int steps() const noexcept { return steps_; }
  Profile profile() const noexcept { return profile_; }
  double s(int j) const { return static_cast<double>(j) / steps_; }

 private:
  int steps_;
  Profile profile_;
};

/// Diagonal of a Z-polynomial Hamiltonian: energies[k] is its eigenvalue
/// on basis state k. For formula Hamiltonians these are the per-assignment
/// unsatisfied-clause counts.
struct DiagonalSpectrum {
  int num_qubits = 0;
  std::vector<double> energies;
};

/// Uniform superposition |+>^n: every amplitude 2^(-n/2). This is the
/// ground state of the transverse-field driver sum(-X_i), eigenvalue -n.
StateVector init_plus_state(int num_qubits);

DiagonalSpectrum build_spectrum(const ZPolynomial& h);

/// Diagonal phase step exp(-i*theta*H_P): a_k *= exp(-i*theta*energies[k]).
/// Leaves every |a_k| unchanged.
void apply_problem_phase(StateVector& psi, const DiagonalSpectrum& spectrum,
                         double theta);

/// Driver step exp(-i*theta*H_D) with H_D = sum(-X_i), i.e. exp(+i*theta*X)
/// on every qubit: amplitude pairs differing in one bit mix as
/// (cos(theta)*a0 + i*sin(theta)*a1, i*sin(theta)*a0 + cos(theta)*a1).
void apply_driver_step(StateVector& psi, double theta);

/// The full interpolated evolution from |+>^n: for j = 0..T applies the
/// driver step with angle 1-s(j), then the problem phase with angle s(j).
/// Later steps weigh the problem Hamiltonian more, steering probability
/// mass toward its ground states.
StateVector run_adiabatic(const ZPolynomial& h, const Schedule& schedule);

}  // namespace adiasat
