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

#include "adiasat/evolve.hpp"

namespace adiasat {

// Full-matrix verification oracles. Everything here is deliberately small
// (at most 3 qubits / dimension 8) and stays out of performance paths.

inline constexpr int kMaxDenseQubits = 3;

/// Row-major square complex matrix.
class DenseOperator {
 public:
  explicit DenseOperator(int dim);
  static DenseOperator identity(int dim);

  int dim() const noexcept { return dim_; }
  Complex& at(int row, int col) { return m_[index(row, col)]; }
  const Complex& at(int row, int col) const { return m_[index(row, col)]; }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * dim_ + col;
  }

  int dim_;
  std::vector<Complex> m_;
};

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator*(Complex c, const DenseOperator& a);

StateVector apply(const DenseOperator& op, const StateVector& psi);

double frobenius_norm(const DenseOperator& a);
DenseOperator matrix_power(const DenseOperator& a, int exponent);

/// Matrix exponential by scaling-and-squaring with a Taylor series, to
/// machine-level accuracy. Dimension is capped at 2^kMaxDenseQubits.
DenseOperator dense_expm(const DenseOperator& m);

/// The transverse-field driver sum(-X_i) as a dense matrix.
DenseOperator dense_driver_hamiltonian(int num_qubits);

/// diag(energies) as a dense matrix.
DenseOperator dense_from_spectrum(const DiagonalSpectrum& spectrum);

/// Frobenius distance between the m-step split product
/// (exp(-i*hd/m) * exp(-i*hp/m))^m and exp(-i*(hd+hp)). For a first-order
/// splitting the distance shrinks linearly in 1/m.
double trotter_error(const DenseOperator& hd, const DenseOperator& hp, int m);

/// Re-computation of run_adiabatic with per-step full-matrix exponentials
/// of (1-s)*H_D and s*H_P. Independent of the statevector fast path; the
/// two must agree amplitude-wise to oracle accuracy.
StateVector dense_evolution_oracle(const ZPolynomial& h, const Schedule& schedule);

}  // namespace adiasat
