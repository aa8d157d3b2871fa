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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "testing/helpers.h"
#include "testing/oracles.h"

namespace qcodon {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> RandomAngles(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::vector<double> theta(count);
  for (auto& t : theta) t = angle(rng);
  return theta;
}

std::vector<double> RandomDiagonal(std::mt19937_64& rng, std::size_t size) {
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  std::vector<double> d(size);
  for (auto& x : d) x = value(rng);
  return d;
}

TEST(StatevectorTest, StartsInBasisZero) {
  const Statevector s(3);
  EXPECT_EQ(s.dimension(), 8u);
  EXPECT_EQ(s.amplitudes()[0], Amplitude(1.0, 0.0));
  for (std::size_t i = 1; i < 8; ++i) EXPECT_EQ(s.amplitudes()[i], Amplitude(0.0, 0.0));
}

TEST(StatevectorTest, ZeroQubitsIsAScalar) {
  const Statevector s(0);
  EXPECT_EQ(s.dimension(), 1u);
  EXPECT_DOUBLE_EQ(s.Norm(), 1.0);
}

TEST(StatevectorTest, RejectsTooManyQubits) {
  EXPECT_QCODON_ERROR(Statevector(27), ErrorCode::kTooManyQubits);
}

TEST(StatevectorTest, FromAmplitudesValidates) {
  EXPECT_QCODON_ERROR(Statevector::FromAmplitudes(2, {1.0, 0.0, 0.0}), ErrorCode::kDimensionMismatch);
  EXPECT_QCODON_ERROR(Statevector::FromAmplitudes(1, {1.0, 1.0}), ErrorCode::kInvalidArgument);
  const double h = 1.0 / std::sqrt(2.0);
  const Statevector s = Statevector::FromAmplitudes(1, {h, Amplitude(0.0, h)});
  EXPECT_NEAR(s.Probability(1), 0.5, 1e-15);
}

TEST(StatevectorTest, RyPiFlipsQubit) {
  Statevector s(2);
  s.ApplyRy(0, kPi);
  EXPECT_NEAR(std::abs(s.amplitudes()[2]), 1.0, 1e-12);
  s.ApplyRy(1, kPi);
  EXPECT_NEAR(std::abs(s.amplitudes()[3]), 1.0, 1e-12);
}

TEST(StatevectorTest, RyRotatesAmplitudePair) {
  Statevector s(1);
  s.ApplyRy(0, 0.7);
  EXPECT_NEAR(s.amplitudes()[0].real(), std::cos(0.35), 1e-15);
  EXPECT_NEAR(s.amplitudes()[1].real(), std::sin(0.35), 1e-15);
}

TEST(StatevectorTest, RzAddsRelativePhase) {
  Statevector s(1);
  s.ApplyRy(0, kPi / 2);
  s.ApplyRz(0, kPi / 2);
  const Amplitude ratio = s.amplitudes()[1] / s.amplitudes()[0];
  EXPECT_NEAR(ratio.real(), 0.0, 1e-12);
  EXPECT_NEAR(ratio.imag(), 1.0, 1e-12);
}

TEST(StatevectorTest, CnotFlipsTargetWhenControlSet) {
  Statevector s(2);
  s.ApplyRy(0, kPi);
  s.ApplyCnot(0, 1);
  EXPECT_NEAR(std::abs(s.amplitudes()[3]), 1.0, 1e-12);
  Statevector t(2);
  t.ApplyCnot(0, 1);
  EXPECT_EQ(t.amplitudes()[0], Amplitude(1.0, 0.0));
}

TEST(StatevectorTest, GateArgumentsAreChecked) {
  Statevector s(2);
  EXPECT_QCODON_ERROR(s.ApplyRy(2, 0.1), ErrorCode::kIndexOutOfRange);
  EXPECT_QCODON_ERROR(s.ApplyCnot(1, 1), ErrorCode::kInvalidArgument);
}

TEST(PrepareStateTest, ParameterCount) {
  EXPECT_EQ((Ansatz{4, 2}).ParameterCount(), 12);
  const std::vector<double> wrong(5, 0.0);
  EXPECT_QCODON_ERROR(PrepareState(Ansatz{2, 2}, wrong), ErrorCode::kParameterCountMismatch);
  const std::vector<double> two(2, 0.0);
  EXPECT_QCODON_ERROR(PrepareState(Ansatz{2, 0}, two), ErrorCode::kInvalidArgument);
}

TEST(PrepareStateTest, ZeroParametersGiveBasisZero) {
  for (int n = 1; n <= 8; ++n) {
    const std::vector<double> theta(static_cast<std::size_t>(n * 3), 0.0);
    const Statevector s = PrepareState(Ansatz{n, 2}, theta);
    EXPECT_EQ(s.amplitudes()[0], Amplitude(1.0, 0.0));
    for (std::size_t i = 1; i < s.dimension(); ++i) ASSERT_EQ(s.amplitudes()[i], Amplitude(0.0, 0.0));
  }
}

TEST(PrepareStateTest, SingleQubitPiRotation) {
  const std::vector<double> theta = {kPi, 0.0};
  const Statevector s = PrepareState(Ansatz{1, 1}, theta);
  EXPECT_NEAR(std::abs(s.amplitudes()[1]), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitudes()[0]), 0.0, 1e-12);
}

TEST(PrepareStateTest, MatchesMatrixOracle) {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 6; ++n) {
    for (int layers = 1; layers <= 3; ++layers) {
      const Ansatz ansatz{n, layers};
      const auto theta = RandomAngles(rng, static_cast<std::size_t>(ansatz.ParameterCount()));
      const Statevector s = PrepareState(ansatz, theta);
      const auto ref = testing::RefCircuit(n, layers, theta);
      ASSERT_EQ(ref.size(), s.dimension());
      for (std::size_t i = 0; i < ref.size(); ++i) {
        ASSERT_NEAR(std::abs(s.amplitudes()[i] - ref[i]), 0.0, 1e-12) << n << " " << layers << " " << i;
      }
      EXPECT_NEAR(s.Norm(), 1.0, 1e-12);
    }
  }
}

TEST(ExpectationTest, Examples) {
  Statevector s(2);
  const std::vector<double> diag = {0.0, 1.0, 2.0, 3.0};
  EXPECT_EQ(Expectation(s, diag), 0.0);
  s.ApplyRy(0, kPi / 2);
  s.ApplyRy(1, kPi / 2);
  EXPECT_NEAR(Expectation(s, diag), 1.5, 1e-12);
  const std::vector<double> short_diag = {0.0, 1.0};
  EXPECT_QCODON_ERROR(Expectation(s, short_diag), ErrorCode::kLengthMismatch);
}

TEST(ExpectationTest, BasisStateGivesDiagonalEntryExactly) {
  std::mt19937_64 rng(4);
  const auto diag = RandomDiagonal(rng, 8);
  for (std::size_t b = 0; b < 8; ++b) {
    std::vector<Amplitude> amps(8);
    amps[b] = 1.0;
    EXPECT_EQ(Expectation(Statevector::FromAmplitudes(3, amps), diag), diag[b]);
  }
}

TEST(StatevectorPropertyTest, NormPreservedUnderRandomGates) {
  std::mt19937_64 rng(8);
  constexpr int kQubits = 8;
  std::uniform_int_distribution<int> gate(0, 2);
  std::uniform_int_distribution<int> qubit(0, kQubits - 1);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  Statevector s(kQubits);
  for (int i = 0; i < 10000; ++i) {
    switch (gate(rng)) {
      case 0: s.ApplyRy(qubit(rng), angle(rng)); break;
      case 1: s.ApplyRz(qubit(rng), angle(rng)); break;
      default: {
        const int c = qubit(rng);
        int t = qubit(rng);
        if (t == c) t = (c + 1) % kQubits;
        s.ApplyCnot(c, t);
      }
    }
    ASSERT_LE(std::abs(s.Norm() - 1.0), 1e-10) << i;
  }
}

TEST(StatevectorPropertyTest, ExpectationMatchesOracleAndBounds) {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 10; ++n) {
    const Ansatz ansatz{n, 2};
    const auto theta = RandomAngles(rng, static_cast<std::size_t>(ansatz.ParameterCount()));
    const Statevector s = PrepareState(ansatz, theta);
    const auto diag = RandomDiagonal(rng, s.dimension());
    const testing::Amplitudes amps(s.amplitudes().begin(), s.amplitudes().end());
    const double e = Expectation(s, diag);
    EXPECT_NEAR(e, testing::RefExpectation(amps, diag), 1e-10);
    EXPECT_GE(e, *std::min_element(diag.begin(), diag.end()) - 1e-12);
    EXPECT_LE(e, *std::max_element(diag.begin(), diag.end()) + 1e-12);
  }
}

}  // namespace
}  // namespace qcodon
