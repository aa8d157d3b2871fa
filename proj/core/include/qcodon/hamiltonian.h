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

// Codon-optimization objective as a pseudo-Boolean polynomial.
//
//   H = H_f + H_gc + H_r + H_p
//
//   H_f  = -c_f  sum_i sum_j log(c_ij + eps_f) Q_ij
//   H_gc =  c_gc (sum_i sum_j s_ij Q_ij - N rho_gc)^2
//   H_r  =  c_r  sum_i sum_jk r(codon_ij, codon_i+1,k) Q_ij Q_i+1,k
//   H_p  =  c_p  sum_i sum_{redundant p} Q_i(p)          (dense)
//           c_p  sum_i (sum_j q_ij - 1)^2                (one-hot)
//
// Q_ij is the indicator that position i holds codon j, c_ij its host usage
// frequency, s_ij its G+C count and r the repeat score. rho_gc is measured in
// G+C per codon, so it lies in [0, 3].

#ifndef QCODON_HAMILTONIAN_H_
#define QCODON_HAMILTONIAN_H_

#include <optional>

#include "qcodon/bio.h"
#include "qcodon/encoding.h"
#include "qcodon/polynomial.h"

namespace qcodon {

struct HamiltonianWeights {
  double c_f = 1.0;
  double c_gc = 1.0;
  double c_r = 1.0;
  /// Empty means "auto": use DominanceBound for the fragment.
  std::optional<double> c_p;
  double eps_f = 1e-6;
  double rho_gc = 1.5;

  /// Throws Error(kInvalidArgument) on negative or non-finite weights,
  /// eps_f <= 0 or rho_gc outside [0, 3].
  void Validate() const;
};

/// Maps a GC fraction in [0, 1] to the per-codon count used by rho_gc.
double RhoFromGcFraction(double fraction);

Polynomial BuildHf(const EncodingLayout& layout, const CodonTable& table,
                   const HamiltonianWeights& w);
Polynomial BuildHgc(const EncodingLayout& layout, const CodonTable& table,
                    const HamiltonianWeights& w);
/// `left_context`, when set, adds the repeat term between that codon and
/// position 0.
Polynomial BuildHr(const EncodingLayout& layout, const HamiltonianWeights& w,
                   const std::optional<Codon>& left_context = std::nullopt);
/// `c_p` must be resolved; use ResolvePenalty first.
Polynomial BuildHp(const EncodingLayout& layout, double c_p);

/// Returns `w` with c_p filled in from DominanceBound when it was "auto".
HamiltonianWeights ResolvePenalty(const Fragment& fragment, const HamiltonianWeights& w);

/// Sum of the four terms for `fragment` (c_p auto-resolved when empty).
Polynomial BuildTotal(const Fragment& fragment, const EncodingLayout& layout,
                      const CodonTable& table, const HamiltonianWeights& w);

/// Objective of a concrete codon choice, computed straight from the codons
/// with no polynomial machinery. Valid assignments carry no penalty.
double DirectEnergy(const CodonAssignment& assignment, const Fragment& fragment,
                    const CodonTable& table, const HamiltonianWeights& w);

/// A penalty weight large enough that every redundant or non-one-hot
/// bitstring costs more than every valid one. It is one plus an upper bound
/// on the spread of the non-penalty terms over all bitstrings.
double DominanceBound(const Fragment& fragment, const HamiltonianWeights& w);

}  // namespace qcodon

#endif  // QCODON_HAMILTONIAN_H_
