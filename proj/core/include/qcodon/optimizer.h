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

#ifndef QCODON_OPTIMIZER_H_
#define QCODON_OPTIMIZER_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qcodon {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
  /// Edge length of the initial simplex along each coordinate axis.
  double initial_step = 0.5;
  /// A simplex whose value spread and diameter both fall below these is
  /// treated as converged and restarted around the best point.
  double value_tolerance = 1e-10;
  double size_tolerance = 1e-8;
  /// Restart simplices are built from random directions of this length.
  double restart_step = 0.5;
};

struct MinimizeResult {
  std::vector<double> theta;
  double value = 0.0;
  /// Best-so-far value after each objective evaluation; non-increasing.
  std::vector<double> trace;
  int evaluations = 0;
};

/// Adaptive Nelder-Mead with restarts from perturbed simplices around the
/// incumbent. Spends at most `budget` objective evaluations; evaluates theta0
/// first, so budget 1 returns theta0. Deterministic for a fixed seed.
/// Throws kNonFiniteObjective if the objective returns NaN or infinity and
/// kInvalidArgument when budget < 1.
MinimizeResult Minimize(const Objective& objective, std::vector<double> theta0, int budget,
                        std::uint64_t seed, const NelderMeadOptions& options = {});

}  // namespace qcodon

#endif  // QCODON_OPTIMIZER_H_
