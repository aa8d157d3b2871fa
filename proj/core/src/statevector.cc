// Copyright 2026 The qcodon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcodon/statevector.h"

#include <cmath>
#include <string>

#include "qcodon/errors.h"

namespace qcodon {

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxStatevectorQubits) {
    throw Error(ErrorCode::kTooManyQubits,
                std::to_string(num_qubits) + " qubits outside [0, " +
                    std::to_string(kMaxStatevectorQubits) + "]");
  }
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude(0.0, 0.0));
  amplitudes_[0] = 1.0;
}

Statevector Statevector::FromAmplitudes(int num_qubits, std::vector<Amplitude> amplitudes) {
  Statevector s(num_qubits);
  if (amplitudes.size() != s.amplitudes_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "amplitude count is not 2^n");
  }
  s.amplitudes_ = std::move(amplitudes);
  if (std::abs(s.Norm() - 1.0) > 1e-10) {
    throw Error(ErrorCode::kInvalidArgument, "amplitudes are not normalized");
  }
  return s;
}

double Statevector::Norm() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return std::sqrt(total);
}

std::uint64_t Statevector::Mask(int qubit) const {
  if (qubit < 0 || qubit >= num_qubits_) {
    throw Error(ErrorCode::kIndexOutOfRange, "qubit " + std::to_string(qubit));
  }
  return std::uint64_t{1} << (num_qubits_ - 1 - qubit);
}

void Statevector::ApplyRy(int qubit, double theta) {
  const std::uint64_t mask = Mask(qubit);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const std::uint64_t dim = amplitudes_.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const Amplitude a0 = amplitudes_[i];
    const Amplitude a1 = amplitudes_[i | mask];
    amplitudes_[i] = c * a0 - s * a1;
    amplitudes_[i | mask] = s * a0 + c * a1;
  }
}

void Statevector::ApplyRz(int qubit, double theta) {
  const std::uint64_t mask = Mask(qubit);
  const Amplitude lower = std::polar(1.0, -0.5 * theta);
  const Amplitude upper = std::polar(1.0, 0.5 * theta);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    amplitudes_[i] *= (i & mask) ? upper : lower;
  }
}

void Statevector::ApplyCnot(int control, int target) {
  const std::uint64_t cmask = Mask(control);
  const std::uint64_t tmask = Mask(target);
  if (cmask == tmask) {
    throw Error(ErrorCode::kInvalidArgument, "CNOT control equals target");
  }
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(amplitudes_[i], amplitudes_[i | tmask]);
  }
}

Statevector PrepareState(const Ansatz& ansatz, std::span<const double> theta) {
  if (ansatz.layers < 1) throw Error(ErrorCode::kInvalidArgument, "ansatz needs >= 1 layer");
  if (theta.size() != static_cast<std::size_t>(ansatz.ParameterCount())) {
    throw Error(ErrorCode::kParameterCountMismatch,
                "expected " + std::to_string(ansatz.ParameterCount()) + " parameters, got " +
                    std::to_string(theta.size()));
  }
  const int n = ansatz.num_qubits;
  Statevector state(n);
  std::size_t p = 0;
  for (int layer = 0; layer < ansatz.layers; ++layer) {
    for (int k = 0; k < n; ++k) state.ApplyRy(k, theta[p++]);
    for (int k = 0; k + 1 < n; ++k) state.ApplyCnot(k, k + 1);
  }
  for (int k = 0; k < n; ++k) state.ApplyRy(k, theta[p++]);
  return state;
}

double Expectation(const Statevector& state, std::span<const double> diagonal) {
  if (diagonal.size() != state.dimension()) {
    throw Error(ErrorCode::kLengthMismatch,
                "diagonal has " + std::to_string(diagonal.size()) + " entries for dimension " +
                    std::to_string(state.dimension()));
  }
  const auto amps = state.amplitudes();
  double total = 0.0;
  for (std::size_t b = 0; b < diagonal.size(); ++b) total += std::norm(amps[b]) * diagonal[b];
  return total;
}

}  // namespace qcodon
