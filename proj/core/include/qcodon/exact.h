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

// Brute-force ground truth. Both searches are plain enumeration on purpose:
// they are the reference the variational solver is graded against.

#ifndef QCODON_EXACT_H_
#define QCODON_EXACT_H_

#include <cstdint>

#include "qcodon/encoding.h"
#include "qcodon/hamiltonian.h"
#include "qcodon/polynomial.h"

namespace qcodon {

inline constexpr std::uint64_t kMaxExactSearchSpace = 100'000'000;
inline constexpr int kMaxExhaustiveQubits = 24;

struct ExactResult {
  CodonAssignment best_assignment;
  double best_energy = 0.0;
  std::uint64_t search_space_size = 0;
};

/// Product of family sizes. Saturates at UINT64_MAX.
std::uint64_t SearchSpaceSize(const Fragment& fragment, const CodonTable& table);

/// Minimum of DirectEnergy over every valid codon assignment, enumerated in
/// mixed-radix order (position 0 most significant). Ties go to the
/// lexicographically smallest assignment. `workers` > 1 splits the range
/// into contiguous blocks; the result is identical to the serial scan.
/// Throws kSearchSpaceTooLarge above 1e8 assignments.
ExactResult ExactOptimum(const Fragment& fragment, const CodonTable& table,
                         const HamiltonianWeights& weights, unsigned workers = 1);

struct BitstringMinimum {
  Bits bits;
  std::uint64_t index = 0;
  double energy = 0.0;
};

/// argmin over all 2^n basis states of Evaluate(h, b); ties to the smallest
/// basis index. Throws kTooManyVariables for n > 24.
BitstringMinimum ExhaustiveBitstringMin(const Polynomial& h, int n);

}  // namespace qcodon

#endif  // QCODON_EXACT_H_
