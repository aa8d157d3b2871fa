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

#include "qcodon/encoding.h"

#include <string>

#include "qcodon/errors.h"

namespace qcodon {
namespace {

const PositionLayout& At(const EncodingLayout& layout, int position) {
  if (position < 0 || static_cast<std::size_t>(position) >= layout.positions.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "position " + std::to_string(position) + " of " +
                    std::to_string(layout.positions.size()));
  }
  return layout.positions[static_cast<std::size_t>(position)];
}

std::uint64_t SliceValue(std::span<const std::uint8_t> bits) {
  std::uint64_t v = 0;
  for (auto b : bits) v = (v << 1) | (b ? 1u : 0u);
  return v;
}

}  // namespace

std::string_view SchemeName(Scheme scheme) {
  return scheme == Scheme::kDense ? "dense" : "onehot";
}

Scheme ParseScheme(std::string_view name) {
  if (name == "dense") return Scheme::kDense;
  if (name == "onehot" || name == "one-hot") return Scheme::kOneHot;
  throw Error(ErrorCode::kInvalidArgument, "unknown scheme '" + std::string(name) + "'");
}

Bits BitsFromIndex(std::uint64_t index, int n) {
  Bits bits(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) bits[static_cast<std::size_t>(k)] = (index >> (n - 1 - k)) & 1u;
  return bits;
}

std::uint64_t IndexFromBits(std::span<const std::uint8_t> bits) {
  if (bits.size() > 64) {
    throw Error(ErrorCode::kTooManyQubits, "bitstring longer than 64");
  }
  return SliceValue(bits);
}

std::string BitsToString(std::span<const std::uint8_t> bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bits BitsFromString(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '|' || c == ' ' || c == '_') continue;
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kInvalidArgument, "bitstring has '" + std::string(1, c) + "'");
    }
    bits.push_back(c == '1');
  }
  return bits;
}

Fragment MakeFragment(std::string_view letters, std::string protein_id) {
  Fragment f;
  f.residues = ParseResidues(letters);
  f.origin = {std::move(protein_id), 0, f.residues.size()};
  return f;
}

int DenseWidth(std::size_t codon_count) {
  int w = 0;
  while ((std::size_t{1} << w) < codon_count) ++w;
  return w;
}

EncodingLayout BuildLayout(const Fragment& fragment, const CodonTable& table,
                           Scheme scheme) {
  EncodingLayout layout;
  layout.scheme = scheme;
  layout.positions.reserve(fragment.residues.size());
  int offset = 0;
  for (std::size_t i = 0; i < fragment.residues.size(); ++i) {
    const AminoAcid aa = fragment.residues[i];
    if (!table.Contains(aa)) throw UnknownResidueError(aa.letter(), i);
    const auto& family = table.Family(aa);
    PositionLayout pos{aa, 0, offset, {}};
    pos.codons.reserve(family.size());
    for (const auto& entry : family) pos.codons.push_back(entry.codon);
    pos.width = scheme == Scheme::kDense ? DenseWidth(family.size())
                                         : static_cast<int>(family.size());
    offset += pos.width;
    layout.positions.push_back(std::move(pos));
  }
  layout.total_qubits = offset;
  return layout;
}

int QubitCount(std::span<const AminoAcid> residues, const CodonTable& table,
               Scheme scheme) {
  int total = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (!table.Contains(residues[i])) throw UnknownResidueError(residues[i].letter(), i);
    const std::size_t c = table.FamilySize(residues[i]);
    total += scheme == Scheme::kDense ? DenseWidth(c) : static_cast<int>(c);
  }
  return total;
}

Bits CodonPattern(const EncodingLayout& layout, int position, int codon_index) {
  const auto& pos = At(layout, position);
  if (codon_index < 0 || static_cast<std::size_t>(codon_index) >= pos.codons.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "codon index " + std::to_string(codon_index) + " at position " +
                    std::to_string(position));
  }
  if (layout.scheme == Scheme::kDense) {
    return BitsFromIndex(static_cast<std::uint64_t>(codon_index), pos.width);
  }
  Bits bits(static_cast<std::size_t>(pos.width), 0);
  bits[static_cast<std::size_t>(codon_index)] = 1;
  return bits;
}

Polynomial PatternIndicator(const EncodingLayout& layout, int position,
                            std::span<const std::uint8_t> pattern) {
  const auto& pos = At(layout, position);
  if (layout.scheme != Scheme::kDense) {
    throw Error(ErrorCode::kSchemeMismatch, "pattern indicators are dense-only");
  }
  if (pattern.size() != static_cast<std::size_t>(pos.width)) {
    throw Error(ErrorCode::kLengthMismatch, "pattern width does not match position");
  }
  Polynomial p = Polynomial::Constant(1.0, layout.total_qubits);
  for (int b = 0; b < pos.width; ++b) {
    const int qubit = pos.offset + b;
    p = p * (pattern[static_cast<std::size_t>(b)]
                 ? Polynomial::Variable(qubit, layout.total_qubits)
                 : Polynomial::Complement(qubit, layout.total_qubits));
  }
  return p;
}

Polynomial Indicator(const EncodingLayout& layout, int position, int codon_index) {
  const Bits pattern = CodonPattern(layout, position, codon_index);
  if (layout.scheme == Scheme::kDense) {
    return PatternIndicator(layout, position, pattern);
  }
  return Polynomial::Variable(At(layout, position).offset + codon_index,
                              layout.total_qubits);
}

std::vector<Bits> RedundantPatterns(const EncodingLayout& layout, int position) {
  const auto& pos = At(layout, position);
  if (layout.scheme != Scheme::kDense) {
    throw Error(ErrorCode::kSchemeMismatch, "redundant patterns exist only for dense layouts");
  }
  std::vector<Bits> out;
  const std::uint64_t states = std::uint64_t{1} << pos.width;
  for (std::uint64_t v = pos.codons.size(); v < states; ++v) {
    out.push_back(BitsFromIndex(v, pos.width));
  }
  return out;
}

Bits EncodeAssignment(const EncodingLayout& layout, const CodonAssignment& assignment) {
  if (assignment.size() != layout.positions.size()) {
    throw Error(ErrorCode::kLengthMismatch, "assignment length does not match layout");
  }
  Bits bits(static_cast<std::size_t>(layout.total_qubits), 0);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const Bits pattern = CodonPattern(layout, static_cast<int>(i), assignment[i]);
    const auto offset = static_cast<std::size_t>(layout.positions[i].offset);
    std::copy(pattern.begin(), pattern.end(), bits.begin() + static_cast<std::ptrdiff_t>(offset));
  }
  return bits;
}

DecodeResult DecodeBits(std::span<const std::uint8_t> bits, const EncodingLayout& layout) {
  if (bits.size() != static_cast<std::size_t>(layout.total_qubits)) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(bits.size()) + " bits for " +
                    std::to_string(layout.total_qubits) + " qubits");
  }
  DecodeResult result;
  CodonAssignment assignment;
  assignment.reserve(layout.positions.size());
  for (std::size_t i = 0; i < layout.positions.size(); ++i) {
    const auto& pos = layout.positions[i];
    const auto slice = bits.subspan(static_cast<std::size_t>(pos.offset),
                                    static_cast<std::size_t>(pos.width));
    int index = -1;
    if (layout.scheme == Scheme::kDense) {
      const std::uint64_t v = SliceValue(slice);
      if (v < pos.codons.size()) index = static_cast<int>(v);
    } else {
      int ones = 0;
      for (std::size_t k = 0; k < slice.size(); ++k) {
        if (slice[k]) {
          ++ones;
          index = static_cast<int>(k);
        }
      }
      if (ones != 1) index = -1;
    }
    if (index < 0) {
      result.invalid_position = static_cast<int>(i);
      return result;
    }
    assignment.push_back(index);
    result.mrna += pos.codons[static_cast<std::size_t>(index)].ToString();
  }
  result.assignment = std::move(assignment);
  return result;
}

std::string AssignmentToMrna(const EncodingLayout& layout, const CodonAssignment& assignment) {
  if (assignment.size() != layout.positions.size()) {
    throw Error(ErrorCode::kLengthMismatch, "assignment length does not match layout");
  }
  std::string mrna;
  mrna.reserve(3 * assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const auto& codons = layout.positions[i].codons;
    if (assignment[i] < 0 || static_cast<std::size_t>(assignment[i]) >= codons.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "codon index at position " + std::to_string(i));
    }
    mrna += codons[static_cast<std::size_t>(assignment[i])].ToString();
  }
  return mrna;
}

GateCountEstimate GateCount(int total_qubits, int layers) {
  if (total_qubits < 1) throw Error(ErrorCode::kZeroQubits, "gate model needs at least one qubit");
  if (layers < 1) throw Error(ErrorCode::kInvalidArgument, "layers must be >= 1");
  GateCountEstimate g;
  g.qubits = total_qubits;
  g.layers = layers;
  g.rotations = static_cast<long long>(total_qubits) * (layers + 1);
  g.entanglers = static_cast<long long>(total_qubits - 1) * layers;
  g.total = g.rotations + g.entanglers;
  return g;
}

GateCountEstimate GateCount(const EncodingLayout& layout, int layers) {
  return GateCount(layout.total_qubits, layers);
}

}  // namespace qcodon
