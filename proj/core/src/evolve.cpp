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

#include "adiasat/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adiasat {

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("qubit count must be at least 1");
  if (num_qubits > kMaxStateQubits)
    throw ResourceError("statevector over " + std::to_string(num_qubits) +
                        " qubits exceeds the cap of " + std::to_string(kMaxStateQubits));
  amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amps_[0] = Complex{1.0, 0.0};
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

double max_amplitude_deviation(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("statevector widths differ");
  double max_dev = 0.0;
  const auto pa = a.amplitudes();
  const auto pb = b.amplitudes();
  for (std::size_t k = 0; k < pa.size(); ++k)
    max_dev = std::max(max_dev, std::abs(pa[k] - pb[k]));
  return max_dev;
}

Schedule::Schedule(int steps, Profile profile) : steps_(steps), profile_(profile) {
  if (steps < 1) throw std::invalid_argument("schedule requires at least 1 step");
}

StateVector init_plus_state(int num_qubits) {
  StateVector psi(num_qubits);
  const double amp = std::pow(2.0, -0.5 * num_qubits);
  for (Complex& a : psi.amplitudes()) a = Complex{amp, 0.0};
  return psi;
}

DiagonalSpectrum build_spectrum(const ZPolynomial& h) {
  if (h.num_qubits() > kMaxStateQubits)
    throw ResourceError("spectrum over " + std::to_string(h.num_qubits()) +
                        " qubits exceeds the cap of " + std::to_string(kMaxStateQubits));
  DiagonalSpectrum spectrum;
  spectrum.num_qubits = h.num_qubits();
  const BasisIndex dim = BasisIndex{1} << h.num_qubits();
  spectrum.energies.reserve(dim);
  for (BasisIndex k = 0; k < dim; ++k) spectrum.energies.push_back(h.eigenvalue(k));
  return spectrum;
}

void apply_problem_phase(StateVector& psi, const DiagonalSpectrum& spectrum,
                         double theta) {
  if (spectrum.num_qubits != psi.num_qubits())
    throw std::invalid_argument("spectrum width does not match statevector");
  auto amps = psi.amplitudes();
  for (std::size_t k = 0; k < amps.size(); ++k) {
    const double phase = -theta * spectrum.energies[k];
    amps[k] *= Complex{std::cos(phase), std::sin(phase)};
  }
}

void apply_driver_step(StateVector& psi, double theta) {
  const double c = std::cos(theta);
  const Complex is{0.0, std::sin(theta)};
  auto amps = psi.amplitudes();
  const std::size_t dim = amps.size();
  for (int q = 0; q < psi.num_qubits(); ++q) {
    const std::size_t stride = dim >> (q + 1);
    for (std::size_t group = 0; group < dim; group += 2 * stride) {
      for (std::size_t offset = 0; offset < stride; ++offset) {
        Complex& a0 = amps[group + offset];
        Complex& a1 = amps[group + offset + stride];
        const Complex b0 = c * a0 + is * a1;
        const Complex b1 = is * a0 + c * a1;
        a0 = b0;
        a1 = b1;
      }
    }
  }
}

StateVector run_adiabatic(const ZPolynomial& h, const Schedule& schedule) {
  const DiagonalSpectrum spectrum = build_spectrum(h);
  StateVector psi = init_plus_state(h.num_qubits());
  for (int j = 0; j <= schedule.steps(); ++j) {
    const double s = schedule.s(j);
    apply_driver_step(psi, 1.0 - s);
    apply_problem_phase(psi, spectrum, s);
  }
  return psi;
}

}  // namespace adiasat
