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

// Sampling variational eigensolver over the diagonal codon Hamiltonian.
//
// The expectation <psi(theta)|H|psi(theta)> is minimized with Nelder-Mead
// from several random starting angles. The best state is then read out by
// listing every basis state whose probability reaches a threshold, scoring
// each with the Hamiltonian and decoding the lowest-energy valid one.

#ifndef QCODON_VQE_H_
#define QCODON_VQE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcodon/encoding.h"
#include "qcodon/hamiltonian.h"
#include "qcodon/optimizer.h"
#include "qcodon/polynomial.h"
#include "qcodon/statevector.h"

namespace qcodon {

struct VqeConfig {
  int layers = 2;
  int restarts = 5;
  int max_evaluations = 500;  // per restart
  std::uint64_t seed = 7;
  double tau = 1e-3;
  Scheme scheme = Scheme::kDense;
  NelderMeadOptions optimizer;

  void Validate() const;
};

struct SampledState {
  Bits bits;
  std::uint64_t index = 0;
  double probability = 0.0;
  double energy = 0.0;
  bool valid = false;
  CodonAssignment assignment;  // empty unless valid
  std::string mrna;            // empty unless valid
};

struct SampleResult {
  /// States with probability >= tau, by energy then basis index.
  std::vector<SampledState> candidates;
  std::optional<SampledState> best_valid;
  /// Set when no candidate was valid and best_valid came from scanning every
  /// basis state with non-zero probability.
  bool fallback = false;
};

/// Throws kDimensionMismatch when the state and layout disagree on qubits.
SampleResult SampleDecode(const Statevector& state, const EncodingLayout& layout,
                          const Polynomial& hamiltonian, double tau);

struct VqeResult {
  int num_qubits = 0;
  HamiltonianWeights weights;  // with c_p resolved
  VqeConfig config;
  std::vector<double> best_parameters;
  double best_expectation = 0.0;
  /// Best-so-far expectation across all restarts, one entry per evaluation.
  std::vector<double> energy_trace;
  int evaluations = 0;
  std::vector<SampledState> candidates;
  std::optional<SampledState> best_valid;
  bool fallback = false;
};

/// Independent 64-bit seed for sub-stream `stream` of a master seed.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

/// Throws kTooManyQubits when the fragment needs more than 26 qubits.
VqeResult RunVqe(const Fragment& fragment, const CodonTable& table,
                 const HamiltonianWeights& weights, const VqeConfig& config);

}  // namespace qcodon

#endif  // QCODON_VQE_H_
