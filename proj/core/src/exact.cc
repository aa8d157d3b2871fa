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

#include "qcodon/exact.h"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

#include "qcodon/errors.h"

namespace qcodon {
namespace {

struct Candidate {
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  double energy = std::numeric_limits<double>::infinity();
};

// Lower energy wins; equal energies go to the smaller index.
bool Better(const Candidate& a, const Candidate& b) {
  if (a.energy != b.energy) return a.energy < b.energy;
  return a.index < b.index;
}

CodonAssignment DigitsOf(std::uint64_t index, const std::vector<int>& radix) {
  CodonAssignment digits(radix.size());
  for (std::size_t i = radix.size(); i-- > 0;) {
    const auto r = static_cast<std::uint64_t>(radix[i]);
    digits[i] = static_cast<int>(index % r);
    index /= r;
  }
  return digits;
}

Candidate ScanBlock(std::uint64_t begin, std::uint64_t end, const std::vector<int>& radix,
                    const Fragment& fragment, const CodonTable& table,
                    const HamiltonianWeights& weights) {
  Candidate best;
  if (begin >= end) return best;
  CodonAssignment digits = DigitsOf(begin, radix);
  for (std::uint64_t index = begin; index < end; ++index) {
    const Candidate c{index, DirectEnergy(digits, fragment, table, weights)};
    if (Better(c, best)) best = c;
    // Mixed-radix increment, last position fastest.
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < radix[i]) break;
      digits[i] = 0;
    }
  }
  return best;
}

}  // namespace

std::uint64_t SearchSpaceSize(const Fragment& fragment, const CodonTable& table) {
  std::uint64_t size = 1;
  for (const auto& aa : fragment.residues) {
    const auto c = static_cast<std::uint64_t>(table.FamilySize(aa));
    if (size > std::numeric_limits<std::uint64_t>::max() / c) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    size *= c;
  }
  return size;
}

ExactResult ExactOptimum(const Fragment& fragment, const CodonTable& table,
                         const HamiltonianWeights& weights, unsigned workers) {
  if (fragment.residues.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "fragment is empty");
  }
  weights.Validate();
  const std::uint64_t space = SearchSpaceSize(fragment, table);
  if (space > kMaxExactSearchSpace) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                std::to_string(space) + " assignments exceeds " +
                    std::to_string(kMaxExactSearchSpace));
  }
  std::vector<int> radix;
  radix.reserve(fragment.residues.size());
  for (const auto& aa : fragment.residues) radix.push_back(static_cast<int>(table.FamilySize(aa)));

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(space, 64))));
  std::vector<Candidate> partial(workers);
  if (workers == 1) {
    partial[0] = ScanBlock(0, space, radix, fragment, table, weights);
  } else {
    std::vector<std::jthread> threads;
    const std::uint64_t chunk = (space + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      const std::uint64_t begin = std::min(space, t * chunk);
      const std::uint64_t end = std::min(space, begin + chunk);
      threads.emplace_back([&, t, begin, end] {
        partial[t] = ScanBlock(begin, end, radix, fragment, table, weights);
      });
    }
  }
  Candidate best;
  for (const auto& c : partial) {
    if (Better(c, best)) best = c;
  }
  ExactResult result;
  result.best_assignment = DigitsOf(best.index, radix);
  result.best_energy = best.energy;
  result.search_space_size = space;
  return result;
}

BitstringMinimum ExhaustiveBitstringMin(const Polynomial& h, int n) {
  if (n > kMaxExhaustiveQubits) {
    throw Error(ErrorCode::kTooManyVariables,
                std::to_string(n) + " qubits exceeds " + std::to_string(kMaxExhaustiveQubits));
  }
  const std::vector<double> diagonal = ToDiagonal(h, n);
  std::uint64_t best = 0;
  for (std::uint64_t b = 1; b < diagonal.size(); ++b) {
    if (diagonal[b] < diagonal[best]) best = b;
  }
  return {BitsFromIndex(best, n), best, diagonal[best]};
}

}  // namespace qcodon
