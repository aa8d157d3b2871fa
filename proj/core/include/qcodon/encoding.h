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

// Qubit layouts for synonymous-codon choice.
//
// A fragment of N residues is laid out position by position. Position i owns
// the qubits [offset_i, offset_i + width_i). Under the one-hot scheme a
// position with C_i synonymous codons uses C_i qubits and codon k sets only
// the k-th qubit from the left. Under the dense scheme it uses ceil(log2 C_i)
// qubits and codon k is the big-endian binary of k; patterns with value >= C_i
// are redundant and must be penalized by the Hamiltonian.

#ifndef QCODON_ENCODING_H_
#define QCODON_ENCODING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcodon/bio.h"
#include "qcodon/polynomial.h"

namespace qcodon {

enum class Scheme { kOneHot, kDense };

std::string_view SchemeName(Scheme scheme);
/// Accepts "dense", "onehot" and "one-hot".
Scheme ParseScheme(std::string_view name);

/// One bit per qubit, qubit 0 first.
using Bits = std::vector<std::uint8_t>;

Bits BitsFromIndex(std::uint64_t index, int n);
std::uint64_t IndexFromBits(std::span<const std::uint8_t> bits);
std::string BitsToString(std::span<const std::uint8_t> bits);
Bits BitsFromString(std::string_view text);

struct FragmentOrigin {
  std::string protein_id;
  std::size_t start = 0;
  std::size_t length = 0;
};

struct Fragment {
  std::vector<AminoAcid> residues;
  FragmentOrigin origin;
  /// Codon chosen immediately before this fragment, when the caller wants the
  /// first repeat term conditioned on it. Empty for independent fragments.
  std::optional<Codon> left_context;
};

Fragment MakeFragment(std::string_view letters, std::string protein_id = "");

/// One codon index per fragment position.
using CodonAssignment = std::vector<int>;

struct PositionLayout {
  AminoAcid residue;
  int width = 0;
  int offset = 0;
  std::vector<Codon> codons;
};

struct EncodingLayout {
  Scheme scheme = Scheme::kDense;
  std::vector<PositionLayout> positions;
  int total_qubits = 0;
};

int DenseWidth(std::size_t codon_count);

EncodingLayout BuildLayout(const Fragment& fragment, const CodonTable& table,
                           Scheme scheme);
int QubitCount(std::span<const AminoAcid> residues, const CodonTable& table,
               Scheme scheme);

/// The bit pattern (width_i bits) that selects `codon_index` at `position`.
Bits CodonPattern(const EncodingLayout& layout, int position, int codon_index);

/// Multilinear polynomial that is 1 exactly when `position` holds the
/// pattern of `codon_index`. Width-0 positions give the constant 1.
Polynomial Indicator(const EncodingLayout& layout, int position, int codon_index);

/// Indicator of an arbitrary width_i-bit pattern at `position` (dense only).
Polynomial PatternIndicator(const EncodingLayout& layout, int position,
                            std::span<const std::uint8_t> pattern);

/// Dense patterns with big-endian value >= C_i, ascending.
std::vector<Bits> RedundantPatterns(const EncodingLayout& layout, int position);

Bits EncodeAssignment(const EncodingLayout& layout, const CodonAssignment& assignment);

struct DecodeResult {
  /// Set when every position decodes.
  std::optional<CodonAssignment> assignment;
  std::string mrna;
  /// First position whose slice is not a codon pattern.
  std::optional<int> invalid_position;

  bool valid() const { return assignment.has_value(); }
};

DecodeResult DecodeBits(std::span<const std::uint8_t> bits, const EncodingLayout& layout);

std::string AssignmentToMrna(const EncodingLayout& layout, const CodonAssignment& assignment);

/// Layered hardware-efficient ansatz: one rotation per qubit at each of the
/// L + 1 layer boundaries and an L-fold nearest-neighbour entangler chain.
struct GateCountEstimate {
  long long rotations = 0;
  long long entanglers = 0;
  long long total = 0;
  int layers = 0;
  int qubits = 0;
};

GateCountEstimate GateCount(int total_qubits, int layers);
GateCountEstimate GateCount(const EncodingLayout& layout, int layers);

}  // namespace qcodon

#endif  // QCODON_ENCODING_H_
