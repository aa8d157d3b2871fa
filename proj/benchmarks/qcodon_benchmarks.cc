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

#include <benchmark/benchmark.h>

#include <cmath>
#include <string>
#include <vector>

#include "qcodon/bio.h"
#include "qcodon/encoding.h"
#include "qcodon/exact.h"
#include "qcodon/hamiltonian.h"
#include "qcodon/polynomial.h"
#include "qcodon/statevector.h"
#include "qcodon/vqe.h"

namespace qcodon {
namespace {

// Residues with six, four and two codons so the dense width grows quickly.
std::string Letters(int length) {
  static constexpr std::string_view kCycle = "LRSAGVKEQT";
  std::string s;
  for (int i = 0; i < length; ++i) s += kCycle[static_cast<std::size_t>(i) % kCycle.size()];
  return s;
}

void BM_BuildTotal(benchmark::State& state) {
  const Fragment f = MakeFragment(Letters(static_cast<int>(state.range(0))));
  const CodonTable& table = BuiltinCodonTable();
  const EncodingLayout layout = BuildLayout(f, table, Scheme::kDense);
  const HamiltonianWeights w = ResolvePenalty(f, {});
  for (auto _ : state) benchmark::DoNotOptimize(BuildTotal(f, layout, table, w));
  state.counters["qubits"] = layout.total_qubits;
}
BENCHMARK(BM_BuildTotal)->DenseRange(2, 8, 2);

void BM_ToDiagonal(benchmark::State& state) {
  const Fragment f = MakeFragment(Letters(static_cast<int>(state.range(0))));
  const CodonTable& table = BuiltinCodonTable();
  const EncodingLayout layout = BuildLayout(f, table, Scheme::kDense);
  const Polynomial h = BuildTotal(f, layout, table, ResolvePenalty(f, {}));
  for (auto _ : state) benchmark::DoNotOptimize(ToDiagonal(h, layout.total_qubits));
  state.counters["qubits"] = layout.total_qubits;
}
BENCHMARK(BM_ToDiagonal)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_PrepareStateAndExpectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Ansatz ansatz{n, 2};
  std::vector<double> theta(static_cast<std::size_t>(ansatz.ParameterCount()));
  for (std::size_t i = 0; i < theta.size(); ++i) theta[i] = std::sin(static_cast<double>(i));
  std::vector<double> diagonal(std::size_t{1} << n);
  for (std::size_t i = 0; i < diagonal.size(); ++i) diagonal[i] = static_cast<double>(i % 17);
  for (auto _ : state) benchmark::DoNotOptimize(Expectation(PrepareState(ansatz, theta), diagonal));
}
BENCHMARK(BM_PrepareStateAndExpectation)->DenseRange(4, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_ExactOptimum(benchmark::State& state) {
  const Fragment f = MakeFragment(Letters(static_cast<int>(state.range(0))));
  const unsigned workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExactOptimum(f, BuiltinCodonTable(), HamiltonianWeights{}, workers));
  }
  state.counters["search_space"] = static_cast<double>(SearchSpaceSize(f, BuiltinCodonTable()));
}
BENCHMARK(BM_ExactOptimum)->ArgsProduct({{4, 6, 8}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_RunVqeLengthFour(benchmark::State& state) {
  const Fragment f = MakeFragment("GSKL");
  VqeConfig config;
  config.restarts = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunVqe(f, BuiltinCodonTable(), HamiltonianWeights{}, config));
  }
}
BENCHMARK(BM_RunVqeLengthFour)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qcodon

BENCHMARK_MAIN();
