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

#include "qcodon/hamiltonian.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcodon/errors.h"

namespace qcodon {
namespace {

// Largest family in the table; bounds how many one-hot indicators of a
// single position can be on at once.
constexpr double kMaxFamilySize = 6.0;

void CheckWeight(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " must be finite and >= 0, got " + std::to_string(value));
  }
}

const std::vector<SynonymousCodon>& FamilyFor(const PositionLayout& pos,
                                              const CodonTable& table) {
  const auto& family = table.Family(pos.residue);
  if (family.size() != pos.codons.size()) {
    throw Error(ErrorCode::kInvalidArgument, "layout was built from a different codon table");
  }
  return family;
}

// indicators[i][j] = Q_ij
std::vector<std::vector<Polynomial>> AllIndicators(const EncodingLayout& layout) {
  std::vector<std::vector<Polynomial>> out(layout.positions.size());
  for (std::size_t i = 0; i < layout.positions.size(); ++i) {
    const int count = static_cast<int>(layout.positions[i].codons.size());
    out[i].reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) out[i].push_back(Indicator(layout, static_cast<int>(i), j));
  }
  return out;
}

void CheckAssignment(const CodonAssignment& assignment, const Fragment& fragment,
                     const CodonTable& table) {
  if (assignment.size() != fragment.residues.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "assignment has " + std::to_string(assignment.size()) + " entries for " +
                    std::to_string(fragment.residues.size()) + " residues");
  }
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const auto count = table.FamilySize(fragment.residues[i]);
    if (assignment[i] < 0 || static_cast<std::size_t>(assignment[i]) >= count) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "codon index " + std::to_string(assignment[i]) + " at position " +
                      std::to_string(i));
    }
  }
}

}  // namespace

void HamiltonianWeights::Validate() const {
  CheckWeight(c_f, "c_f");
  CheckWeight(c_gc, "c_gc");
  CheckWeight(c_r, "c_r");
  if (c_p) CheckWeight(*c_p, "c_p");
  if (!std::isfinite(eps_f) || eps_f <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "eps_f must be finite and > 0");
  }
  if (!std::isfinite(rho_gc) || rho_gc < 0.0 || rho_gc > 3.0) {
    throw Error(ErrorCode::kInvalidArgument, "rho_gc must lie in [0, 3]");
  }
}

double RhoFromGcFraction(double fraction) {
  if (!std::isfinite(fraction) || fraction < 0.0 || fraction > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "GC fraction must lie in [0, 1]");
  }
  return 3.0 * fraction;
}

Polynomial BuildHf(const EncodingLayout& layout, const CodonTable& table,
                   const HamiltonianWeights& w) {
  w.Validate();
  Polynomial h(layout.total_qubits);
  if (w.c_f == 0.0) return h;
  for (std::size_t i = 0; i < layout.positions.size(); ++i) {
    const auto& family = FamilyFor(layout.positions[i], table);
    for (std::size_t j = 0; j < family.size(); ++j) {
      const double weight = -w.c_f * std::log(family[j].frequency + w.eps_f);
      h += Scale(Indicator(layout, static_cast<int>(i), static_cast<int>(j)), weight);
    }
  }
  return h;
}

Polynomial BuildHgc(const EncodingLayout& layout, const CodonTable& table,
                    const HamiltonianWeights& w) {
  w.Validate();
  Polynomial h(layout.total_qubits);
  if (w.c_gc == 0.0) return h;
  const double n = static_cast<double>(layout.positions.size());
  Polynomial deviation = Polynomial::Constant(-n * w.rho_gc, layout.total_qubits);
  for (std::size_t i = 0; i < layout.positions.size(); ++i) {
    FamilyFor(layout.positions[i], table);
    const auto& codons = layout.positions[i].codons;
    for (std::size_t j = 0; j < codons.size(); ++j) {
      const int s = GcCount(codons[j]);
      if (s == 0) continue;
      deviation += Scale(Indicator(layout, static_cast<int>(i), static_cast<int>(j)), s);
    }
  }
  h = Scale(Multiply(deviation, deviation), w.c_gc);
  h.set_num_vars(layout.total_qubits);
  return h;
}

Polynomial BuildHr(const EncodingLayout& layout, const HamiltonianWeights& w,
                   const std::optional<Codon>& left_context) {
  w.Validate();
  Polynomial h(layout.total_qubits);
  if (w.c_r == 0.0 || layout.positions.empty()) return h;
  const auto indicators = AllIndicators(layout);
  if (left_context) {
    const auto& first = layout.positions.front().codons;
    for (std::size_t k = 0; k < first.size(); ++k) {
      const double r = RepeatScore(*left_context, first[k]);
      if (r == 0.0) continue;
      h += Scale(indicators[0][k], w.c_r * r);
    }
  }
  for (std::size_t i = 0; i + 1 < layout.positions.size(); ++i) {
    const auto& left = layout.positions[i].codons;
    const auto& right = layout.positions[i + 1].codons;
    for (std::size_t j = 0; j < left.size(); ++j) {
      for (std::size_t k = 0; k < right.size(); ++k) {
        const double r = RepeatScore(left[j], right[k]);
        if (r == 0.0) continue;
        h += Scale(Multiply(indicators[i][j], indicators[i + 1][k]), w.c_r * r);
      }
    }
  }
  return h;
}

Polynomial BuildHp(const EncodingLayout& layout, double c_p) {
  CheckWeight(c_p, "c_p");
  Polynomial h(layout.total_qubits);
  if (c_p == 0.0) return h;
  for (std::size_t i = 0; i < layout.positions.size(); ++i) {
    const auto& pos = layout.positions[i];
    if (layout.scheme == Scheme::kDense) {
      for (const auto& pattern : RedundantPatterns(layout, static_cast<int>(i))) {
        h += Scale(PatternIndicator(layout, static_cast<int>(i), pattern), c_p);
      }
    } else {
      // (sum_j q_ij - 1)^2, enforcing exactly one codon per position.
      Polynomial excess = Polynomial::Constant(-1.0, layout.total_qubits);
      for (int k = 0; k < pos.width; ++k) {
        excess += Polynomial::Variable(pos.offset + k, layout.total_qubits);
      }
      h += Scale(Multiply(excess, excess), c_p);
    }
  }
  return h;
}

HamiltonianWeights ResolvePenalty(const Fragment& fragment, const HamiltonianWeights& w) {
  HamiltonianWeights resolved = w;
  if (!resolved.c_p) resolved.c_p = DominanceBound(fragment, w);
  return resolved;
}

Polynomial BuildTotal(const Fragment& fragment, const EncodingLayout& layout,
                      const CodonTable& table, const HamiltonianWeights& w) {
  if (layout.positions.size() != fragment.residues.size()) {
    throw Error(ErrorCode::kLengthMismatch, "layout does not match fragment");
  }
  const HamiltonianWeights resolved = ResolvePenalty(fragment, w);
  Polynomial h = BuildHf(layout, table, resolved);
  h += BuildHgc(layout, table, resolved);
  h += BuildHr(layout, resolved, fragment.left_context);
  h += BuildHp(layout, *resolved.c_p);
  h.set_num_vars(layout.total_qubits);
  return h;
}

double DirectEnergy(const CodonAssignment& assignment, const Fragment& fragment,
                    const CodonTable& table, const HamiltonianWeights& w) {
  w.Validate();
  CheckAssignment(assignment, fragment, table);
  const std::size_t n = assignment.size();
  double usage = 0.0;
  int gc = 0;
  double repeats = 0.0;
  const Codon* previous = fragment.left_context ? &*fragment.left_context : nullptr;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& entry =
        table.Family(fragment.residues[i])[static_cast<std::size_t>(assignment[i])];
    usage += std::log(entry.frequency + w.eps_f);
    gc += GcCount(entry.codon);
    if (previous != nullptr) repeats += RepeatScore(*previous, entry.codon);
    previous = &entry.codon;
  }
  const double deviation = static_cast<double>(gc) - static_cast<double>(n) * w.rho_gc;
  return -w.c_f * usage + w.c_gc * deviation * deviation + w.c_r * repeats;
}

double DominanceBound(const Fragment& fragment, const HamiltonianWeights& w) {
  HamiltonianWeights unpenalized = w;
  unpenalized.c_p.reset();
  unpenalized.Validate();
  const double n = static_cast<double>(fragment.residues.size());
  // Per position, -log(c + eps) lies in [-log(1 + eps), max(0, -log eps)] for a
  // chosen codon and is 0 for an unselected slot; a one-hot position may have
  // up to six codons switched on.
  const double usage_span =
      std::max(0.0, -std::log(w.eps_f)) + kMaxFamilySize * std::log1p(w.eps_f);
  const double gc_high = 3.0 * n - n * w.rho_gc;
  const double gc_low = n * w.rho_gc;
  const double gc_span = std::max(gc_high * gc_high, gc_low * gc_low);
  double pairs = std::max(0.0, n - 1.0);
  if (fragment.left_context && n > 0) pairs += 1.0;
  // RepeatScore peaks at 4 (a six-long run).
  return 1.0 + w.c_f * n * usage_span + w.c_gc * gc_span + 4.0 * w.c_r * pairs;
}

}  // namespace qcodon
