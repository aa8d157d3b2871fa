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

#ifndef QCODON_STATEVECTOR_H_
#define QCODON_STATEVECTOR_H_

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qcodon {

using Amplitude = std::complex<double>;

inline constexpr int kMaxStatevectorQubits = 26;

/// Dense noiseless n-qubit state. Basis index b stores qubit 0 in its most
/// significant bit, matching ToDiagonal.
class Statevector {
 public:
  /// |0...0>. Throws kTooManyQubits above 26 qubits.
  explicit Statevector(int num_qubits);

  /// Throws kDimensionMismatch unless amplitudes.size() == 2^n and
  /// kInvalidArgument unless the norm is 1 within 1e-10.
  static Statevector FromAmplitudes(int num_qubits, std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  double Probability(std::uint64_t index) const { return std::norm(amplitudes_[index]); }
  double Norm() const;

  /// exp(-i theta Y / 2)
  void ApplyRy(int qubit, double theta);
  /// exp(-i theta Z / 2)
  void ApplyRz(int qubit, double theta);
  void ApplyCnot(int control, int target);

 private:
  std::uint64_t Mask(int qubit) const;

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Layered real-amplitude ansatz. Each of the `layers` layers applies RY to
/// every qubit and then CNOT(k, k+1) for k = 0..n-2; a final RY layer closes
/// the circuit. Parameter l*n + k drives qubit k in rotation layer l.
struct Ansatz {
  int num_qubits = 0;
  int layers = 2;

  int ParameterCount() const { return num_qubits * (layers + 1); }
};

/// Throws kParameterCountMismatch when theta has the wrong length.
Statevector PrepareState(const Ansatz& ansatz, std::span<const double> theta);

/// sum_b |a_b|^2 diagonal_b. Throws kLengthMismatch on a size mismatch.
double Expectation(const Statevector& state, std::span<const double> diagonal);

}  // namespace qcodon

#endif  // QCODON_STATEVECTOR_H_
