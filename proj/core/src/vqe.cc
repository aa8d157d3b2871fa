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

#include "qcodon/vqe.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qcodon/errors.h"

namespace qcodon {
namespace {

SampledState Score(std::uint64_t index, double probability, const EncodingLayout& layout,
                   const Polynomial& hamiltonian) {
  SampledState s;
  s.index = index;
  s.bits = BitsFromIndex(index, layout.total_qubits);
  s.probability = probability;
  s.energy = Evaluate(hamiltonian, s.bits);
  DecodeResult decoded = DecodeBits(s.bits, layout);
  s.valid = decoded.valid();
  if (s.valid) {
    s.assignment = std::move(*decoded.assignment);
    s.mrna = std::move(decoded.mrna);
  }
  return s;
}

bool LowerEnergy(const SampledState& a, const SampledState& b) {
  if (a.energy != b.energy) return a.energy < b.energy;
  return a.index < b.index;
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  return rng();
}

void VqeConfig::Validate() const {
  if (layers < 1 || restarts < 1 || max_evaluations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "layers, restarts and max_evaluations must be >= 1");
  }
  if (!(tau > 0.0 && tau < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in (0, 1)");
  }
}

SampleResult SampleDecode(const Statevector& state, const EncodingLayout& layout,
                          const Polynomial& hamiltonian, double tau) {
  if (state.num_qubits() != layout.total_qubits) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state has " + std::to_string(state.num_qubits()) + " qubits, layout " +
                    std::to_string(layout.total_qubits));
  }
  SampleResult result;
  for (std::uint64_t b = 0; b < state.dimension(); ++b) {
    const double p = state.Probability(b);
    if (p >= tau) result.candidates.push_back(Score(b, p, layout, hamiltonian));
  }
  std::sort(result.candidates.begin(), result.candidates.end(), LowerEnergy);
  for (const auto& c : result.candidates) {
    if (c.valid) {
      result.best_valid = c;
      return result;
    }
  }
  result.fallback = true;
  for (std::uint64_t b = 0; b < state.dimension(); ++b) {
    const double p = state.Probability(b);
    if (p <= 0.0) continue;
    if (!DecodeBits(BitsFromIndex(b, layout.total_qubits), layout).valid()) continue;
    SampledState s = Score(b, p, layout, hamiltonian);
    if (!result.best_valid || LowerEnergy(s, *result.best_valid)) result.best_valid = std::move(s);
  }
  return result;
}

VqeResult RunVqe(const Fragment& fragment, const CodonTable& table,
                 const HamiltonianWeights& weights, const VqeConfig& config) {
  config.Validate();
  const EncodingLayout layout = BuildLayout(fragment, table, config.scheme);
  if (layout.total_qubits > kMaxStatevectorQubits) {
    throw Error(ErrorCode::kTooManyQubits,
                "fragment needs " + std::to_string(layout.total_qubits) + " qubits, limit is " +
                    std::to_string(kMaxStatevectorQubits));
  }
  VqeResult result;
  result.num_qubits = layout.total_qubits;
  result.weights = ResolvePenalty(fragment, weights);
  result.config = config;
  const Polynomial hamiltonian = BuildTotal(fragment, layout, table, result.weights);
  const std::vector<double> diagonal = ToDiagonal(hamiltonian, layout.total_qubits);
  const Ansatz ansatz{layout.total_qubits, config.layers};

  if (layout.total_qubits == 0) {
    // Nothing to choose: every residue has a single codon.
    const Statevector state(0);
    result.best_expectation = diagonal[0];
    SampleResult sample = SampleDecode(state, layout, hamiltonian, config.tau);
    result.candidates = std::move(sample.candidates);
    result.best_valid = std::move(sample.best_valid);
    return result;
  }

  const auto objective = [&](std::span<const double> theta) {
    return Expectation(PrepareState(ansatz, theta), diagonal);
  };
  const auto dim = static_cast<std::size_t>(ansatz.ParameterCount());
  bool have_best = false;
  for (int r = 0; r < config.restarts; ++r) {
    std::mt19937_64 rng(DeriveSeed(config.seed, static_cast<std::uint64_t>(r)));
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<double> theta0(dim);
    for (auto& t : theta0) t = angle(rng);
    MinimizeResult run =
        Minimize(objective, std::move(theta0), config.max_evaluations, rng(), config.optimizer);
    for (double v : run.trace) {
      const double best_so_far = result.energy_trace.empty() ? v : std::min(result.energy_trace.back(), v);
      result.energy_trace.push_back(best_so_far);
    }
    result.evaluations += run.evaluations;
    // Strict improvement keeps the lowest restart index on ties.
    if (!have_best || run.value < result.best_expectation) {
      have_best = true;
      result.best_expectation = run.value;
      result.best_parameters = std::move(run.theta);
    }
  }

  const Statevector best_state = PrepareState(ansatz, result.best_parameters);
  SampleResult sample = SampleDecode(best_state, layout, hamiltonian, config.tau);
  result.candidates = std::move(sample.candidates);
  result.best_valid = std::move(sample.best_valid);
  result.fallback = sample.fallback;
  return result;
}

}  // namespace qcodon
