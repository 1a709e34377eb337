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

#include "adiasat/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace adiasat {

namespace {

constexpr int kMaxDenseDim = 1 << kMaxDenseQubits;

void check_dense_dim(int dim) {
  if (dim < 1 || dim > kMaxDenseDim)
    throw ResourceError("dense operator dimension " + std::to_string(dim) +
                        " exceeds the oracle cap of " + std::to_string(kMaxDenseDim));
}

void check_same_dim(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dense operator dimensions differ");
}

void check_dense_qubits(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxDenseQubits)
    throw ResourceError("dense oracle is limited to " +
                        std::to_string(kMaxDenseQubits) + " qubits, got " +
                        std::to_string(num_qubits));
}

}  // namespace

DenseOperator::DenseOperator(int dim) : dim_(dim) {
  check_dense_dim(dim);
  m_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

DenseOperator DenseOperator::identity(int dim) {
  DenseOperator id(dim);
  for (int i = 0; i < dim; ++i) id.at(i, i) = Complex{1.0, 0.0};
  return id;
}

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
  check_same_dim(a, b);
  DenseOperator r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
  check_same_dim(a, b);
  DenseOperator r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  check_same_dim(a, b);
  DenseOperator r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < a.dim(); ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < a.dim(); ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

DenseOperator operator*(Complex c, const DenseOperator& a) {
  DenseOperator r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = c * a.at(i, j);
  return r;
}

StateVector apply(const DenseOperator& op, const StateVector& psi) {
  if (op.dim() != static_cast<int>(psi.dimension()))
    throw std::invalid_argument("operator dimension does not match statevector");
  StateVector out(psi.num_qubits());
  for (int i = 0; i < op.dim(); ++i) {
    Complex sum{0.0, 0.0};
    for (int j = 0; j < op.dim(); ++j) sum += op.at(i, j) * psi.amplitude(j);
    out.set_amplitude(i, sum);
  }
  return out;
}

double frobenius_norm(const DenseOperator& a) {
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) sum += std::norm(a.at(i, j));
  return std::sqrt(sum);
}

DenseOperator matrix_power(const DenseOperator& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative matrix power");
  DenseOperator result = DenseOperator::identity(a.dim());
  DenseOperator base = a;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

DenseOperator dense_expm(const DenseOperator& m) {
  check_dense_dim(m.dim());

  // Scale down until the norm is small, run the Taylor series to machine
  // precision, then square back up.
  const double norm = frobenius_norm(m);
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }

  const DenseOperator scaled = Complex{scale, 0.0} * m;
  DenseOperator result = DenseOperator::identity(m.dim());
  DenseOperator term = DenseOperator::identity(m.dim());
  for (int k = 1; k <= 64; ++k) {
    term = Complex{1.0 / k, 0.0} * (term * scaled);
    result = result + term;
    if (frobenius_norm(term) < 1e-18) break;
  }

  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

DenseOperator dense_driver_hamiltonian(int num_qubits) {
  check_dense_qubits(num_qubits);
  const int dim = 1 << num_qubits;
  DenseOperator hd(dim);
  for (int q = 0; q < num_qubits; ++q) {
    const int bit = 1 << (num_qubits - 1 - q);
    for (int k = 0; k < dim; ++k) hd.at(k, k ^ bit) += Complex{-1.0, 0.0};
  }
  return hd;
}

DenseOperator dense_from_spectrum(const DiagonalSpectrum& spectrum) {
  check_dense_qubits(spectrum.num_qubits);
  const int dim = 1 << spectrum.num_qubits;
  DenseOperator hp(dim);
  for (int k = 0; k < dim; ++k) hp.at(k, k) = Complex{spectrum.energies[k], 0.0};
  return hp;
}

double trotter_error(const DenseOperator& hd, const DenseOperator& hp, int m) {
  if (m < 1) throw std::invalid_argument("step count must be at least 1");
  check_same_dim(hd, hp);
  const Complex mi{0.0, -1.0};
  const DenseOperator exact = dense_expm(mi * (hd + hp));
  const Complex step_scale{0.0, -1.0 / m};
  const DenseOperator split = dense_expm(step_scale * hd) * dense_expm(step_scale * hp);
  return frobenius_norm(matrix_power(split, m) - exact);
}

StateVector dense_evolution_oracle(const ZPolynomial& h, const Schedule& schedule) {
  check_dense_qubits(h.num_qubits());
  const DiagonalSpectrum spectrum = build_spectrum(h);
  const DenseOperator hd = dense_driver_hamiltonian(h.num_qubits());
  const DenseOperator hp = dense_from_spectrum(spectrum);

  StateVector psi = init_plus_state(h.num_qubits());
  for (int j = 0; j <= schedule.steps(); ++j) {
    const double s = schedule.s(j);
    psi = apply(dense_expm(Complex{0.0, -(1.0 - s)} * hd), psi);
    psi = apply(dense_expm(Complex{0.0, -s} * hp), psi);
  }
  return psi;
}

}  // namespace adiasat
