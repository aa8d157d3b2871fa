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

// Sequence primitives: codons, amino acids, the synonymous codon table,
// host usage frequencies and FASTA ingestion.

#ifndef QCODON_BIO_H_
#define QCODON_BIO_H_

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcodon {

/// Three mRNA nucleotides drawn from {A, C, G, U}.
class Codon {
 public:
  /// Throws Error(kInvalidCodon) unless `text` is exactly three of A/C/G/U.
  static Codon Parse(std::string_view text);

  char operator[](std::size_t i) const { return bases_[i]; }
  std::string ToString() const { return {bases_.begin(), bases_.end()}; }

  auto operator<=>(const Codon&) const = default;

 private:
  explicit Codon(std::array<char, 3> bases) : bases_(bases) {}
  std::array<char, 3> bases_;
};

/// One-letter residue code. Covers the twenty standard residues, the
/// ambiguity codes B (N or D) and Z (Q or E), and '*' for Stop.
class AminoAcid {
 public:
  static constexpr char kStop = '*';

  /// Throws UnknownResidueError(letter, position).
  static AminoAcid FromLetter(char letter, std::size_t position = 0);
  static bool IsKnownLetter(char letter);

  char letter() const { return letter_; }

  auto operator<=>(const AminoAcid&) const = default;

 private:
  explicit AminoAcid(char letter) : letter_(letter) {}
  char letter_;
};

std::vector<AminoAcid> ParseResidues(std::string_view letters);
std::string ResidueLetters(std::span<const AminoAcid> residues);

struct UsageRow {
  Codon codon;
  double frequency;
};

struct SynonymousCodon {
  Codon codon;
  double frequency;  // family-relative, sums to 1 within a family
};

/// Amino acid -> synonymous codons in lexicographic order (A < C < G < U).
class CodonTable {
 public:
  /// Throws UnknownResidueError when `aa` has no family.
  const std::vector<SynonymousCodon>& Family(AminoAcid aa) const;
  bool Contains(AminoAcid aa) const;
  std::size_t FamilySize(AminoAcid aa) const { return Family(aa).size(); }
  std::vector<AminoAcid> AminoAcids() const;

 private:
  friend CodonTable BuiltinCodonTable();
  friend CodonTable LoadUsageFrequencies(std::span<const UsageRow> rows);
  std::array<std::vector<SynonymousCodon>, 128> families_{};
};

/// The standard mRNA codon table with uniform within-family frequencies.
/// The Start row is not represented; Met carries its single codon AUG.
CodonTable BuiltinCodonTable();

/// Returns the builtin table with host frequencies applied. Each family that
/// mentions at least one codon in `rows` is renormalized to sum to one and its
/// unmentioned codons get frequency zero; families not mentioned keep the
/// uniform default. Duplicate rows accumulate.
CodonTable LoadUsageFrequencies(std::span<const UsageRow> rows);

/// Parses `codon,frequency` CSV. '#' starts a comment, blank lines and an
/// optional `codon,frequency` header are skipped, DNA 'T' is read as 'U'.
std::vector<UsageRow> ParseUsageCsv(std::string_view text);

struct ProteinSequence {
  std::string id;
  std::vector<AminoAcid> residues;
};

/// Single-record FASTA. Errors: kMalformedHeader, kEmptySequence,
/// UnknownResidueError (0-based position within the residue string).
ProteinSequence ParseFasta(std::string_view text);

std::string FormatFasta(std::string_view header, std::string_view sequence,
                        std::size_t line_width = 60);

int GcCount(const Codon& codon);

/// Longest single-nucleotide run L over the 6-mer a||b; returns L - 2 for
/// L >= 3 and 0 otherwise.
double RepeatScore(const Codon& a, const Codon& b);

/// Translates an mRNA string with the standard genetic code (Stop as '*').
std::string Translate(std::string_view mrna);

}  // namespace qcodon

#endif  // QCODON_BIO_H_
