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

#include "qcodon/bio.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <string>

#include "qcodon/errors.h"

namespace qcodon {
namespace {

constexpr std::string_view kResidueAlphabet = "ARNDBCQEZGHILKMFPSTWYV*";

struct FamilyRow {
  char letter;
  std::vector<std::string_view> codons;
};

// The standard table. Order within a row does not matter; families are
// sorted on construction.
const std::vector<FamilyRow>& StandardFamilies() {
  static const std::vector<FamilyRow> kRows = {
      {'A', {"GCU", "GCC", "GCA", "GCG"}},
      {'R', {"CGU", "CGC", "CGA", "CGG", "AGA", "AGG"}},
      {'N', {"AAU", "AAC"}},
      {'D', {"GAU", "GAC"}},
      {'B', {"AAU", "AAC", "GAU", "GAC"}},
      {'C', {"UGU", "UGC"}},
      {'Q', {"CAA", "CAG"}},
      {'E', {"GAA", "GAG"}},
      {'Z', {"CAA", "CAG", "GAA", "GAG"}},
      {'G', {"GGU", "GGC", "GGA", "GGG"}},
      {'H', {"CAU", "CAC"}},
      {'I', {"AUU", "AUC", "AUA"}},
      {'L', {"CUU", "CUC", "CUA", "CUG", "UUA", "UUG"}},
      {'K', {"AAA", "AAG"}},
      {'M', {"AUG"}},
      {'F', {"UUU", "UUC"}},
      {'P', {"CCU", "CCC", "CCA", "CCG"}},
      {'S', {"UCU", "UCC", "UCA", "UCG", "AGU", "AGC"}},
      {'T', {"ACU", "ACC", "ACA", "ACG"}},
      {'W', {"UGG"}},
      {'Y', {"UAU", "UAC"}},
      {'V', {"GUU", "GUC", "GUA", "GUG"}},
      {AminoAcid::kStop, {"UAA", "UGA", "UAG"}},
  };
  return kRows;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool IsStandardResidue(char letter) {
  return letter != 'B' && letter != 'Z';
}

}  // namespace

Codon Codon::Parse(std::string_view text) {
  if (text.size() != 3) {
    throw Error(ErrorCode::kInvalidCodon,
                "codon must have 3 bases: '" + std::string(text) + "'");
  }
  std::array<char, 3> bases{};
  for (std::size_t i = 0; i < 3; ++i) {
    const char c = text[i];
    if (c != 'A' && c != 'C' && c != 'G' && c != 'U') {
      throw Error(ErrorCode::kInvalidCodon,
                  "bad base in '" + std::string(text) + "'");
    }
    bases[i] = c;
  }
  return Codon(bases);
}

bool AminoAcid::IsKnownLetter(char letter) {
  return letter != '\0' && kResidueAlphabet.find(letter) != std::string_view::npos;
}

AminoAcid AminoAcid::FromLetter(char letter, std::size_t position) {
  if (!IsKnownLetter(letter)) throw UnknownResidueError(letter, position);
  return AminoAcid(letter);
}

std::vector<AminoAcid> ParseResidues(std::string_view letters) {
  std::vector<AminoAcid> out;
  out.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    out.push_back(AminoAcid::FromLetter(letters[i], i));
  }
  return out;
}

std::string ResidueLetters(std::span<const AminoAcid> residues) {
  std::string s;
  s.reserve(residues.size());
  for (const auto& aa : residues) s.push_back(aa.letter());
  return s;
}

const std::vector<SynonymousCodon>& CodonTable::Family(AminoAcid aa) const {
  const auto& family = families_[static_cast<unsigned char>(aa.letter()) & 0x7f];
  if (family.empty()) throw UnknownResidueError(aa.letter(), 0);
  return family;
}

bool CodonTable::Contains(AminoAcid aa) const {
  return !families_[static_cast<unsigned char>(aa.letter()) & 0x7f].empty();
}

std::vector<AminoAcid> CodonTable::AminoAcids() const {
  std::vector<AminoAcid> out;
  for (char c : kResidueAlphabet) {
    if (!families_[static_cast<unsigned char>(c)].empty()) {
      out.push_back(AminoAcid::FromLetter(c));
    }
  }
  return out;
}

CodonTable BuiltinCodonTable() {
  CodonTable table;
  for (const auto& row : StandardFamilies()) {
    std::vector<Codon> codons;
    for (auto text : row.codons) codons.push_back(Codon::Parse(text));
    std::sort(codons.begin(), codons.end());
    auto& family = table.families_[static_cast<unsigned char>(row.letter)];
    const double uniform = 1.0 / static_cast<double>(codons.size());
    for (const auto& c : codons) family.push_back({c, uniform});
  }
  return table;
}

CodonTable LoadUsageFrequencies(std::span<const UsageRow> rows) {
  CodonTable table = BuiltinCodonTable();
  std::map<Codon, double> raw;
  for (const auto& row : rows) {
    if (!(row.frequency >= 0.0) || !std::isfinite(row.frequency)) {
      throw Error(ErrorCode::kNegativeFrequency,
                  row.codon.ToString() + " has frequency " +
                      std::to_string(row.frequency));
    }
    raw[row.codon] += row.frequency;
  }
  for (char letter : kResidueAlphabet) {
    auto& family = table.families_[static_cast<unsigned char>(letter)];
    bool mentioned = false;
    double total = 0.0;
    for (const auto& entry : family) {
      if (auto it = raw.find(entry.codon); it != raw.end()) {
        mentioned = true;
        total += it->second;
      }
    }
    if (!mentioned) continue;
    if (total <= 0.0) {
      throw Error(ErrorCode::kAllZeroFamily,
                  std::string("family '") + letter + "' has zero total usage");
    }
    for (auto& entry : family) {
      const auto it = raw.find(entry.codon);
      entry.frequency = it == raw.end() ? 0.0 : it->second / total;
    }
  }
  return table;
}

std::vector<UsageRow> ParseUsageCsv(std::string_view text) {
  std::vector<UsageRow> rows;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "usage line " + std::to_string(line_no) + ": expected codon,frequency");
    }
    std::string codon_text(Trim(line.substr(0, comma)));
    std::string_view value_text = Trim(line.substr(comma + 1));
    std::string lowered = codon_text;
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lowered == "codon") continue;
    std::transform(codon_text.begin(), codon_text.end(), codon_text.begin(),
                   [](unsigned char c) {
                     const char u = static_cast<char>(std::toupper(c));
                     return u == 'T' ? 'U' : u;
                   });
    double value = 0.0;
    const auto* begin = value_text.data();
    const auto* end = begin + value_text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw Error(ErrorCode::kInvalidArgument,
                  "usage line " + std::to_string(line_no) + ": bad frequency '" +
                      std::string(value_text) + "'");
    }
    Codon codon = [&] {
      try {
        return Codon::Parse(codon_text);
      } catch (const Error&) {
        throw Error(ErrorCode::kUnknownCodon,
                    "usage line " + std::to_string(line_no) + ": '" + codon_text + "'");
      }
    }();
    rows.push_back({codon, value});
  }
  return rows;
}

ProteinSequence ParseFasta(std::string_view text) {
  const auto lines = SplitLines(text);
  std::size_t i = 0;
  while (i < lines.size() && Trim(lines[i]).empty()) ++i;
  if (i == lines.size()) throw Error(ErrorCode::kMalformedHeader, "no header line");
  const std::string_view header = Trim(lines[i]);
  if (header.front() != '>') {
    throw Error(ErrorCode::kMalformedHeader, "header must start with '>'");
  }
  std::string_view rest = Trim(header.substr(1));
  const auto space = rest.find_first_of(" \t");
  const std::string_view id = rest.substr(0, space);
  if (id.empty()) throw Error(ErrorCode::kMalformedHeader, "empty identifier");

  ProteinSequence seq;
  seq.id = std::string(id);
  for (++i; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (!line.empty() && line.front() == '>') {
      throw Error(ErrorCode::kMalformedHeader, "more than one record");
    }
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      seq.residues.push_back(AminoAcid::FromLetter(up, seq.residues.size()));
    }
  }
  if (seq.residues.empty()) throw Error(ErrorCode::kEmptySequence, seq.id);
  return seq;
}

std::string FormatFasta(std::string_view header, std::string_view sequence,
                        std::size_t line_width) {
  std::string out = ">";
  out += header;
  out += '\n';
  for (std::size_t i = 0; i < sequence.size(); i += line_width) {
    out += sequence.substr(i, line_width);
    out += '\n';
  }
  return out;
}

int GcCount(const Codon& codon) {
  int n = 0;
  for (std::size_t i = 0; i < 3; ++i) n += (codon[i] == 'G' || codon[i] == 'C');
  return n;
}

double RepeatScore(const Codon& a, const Codon& b) {
  const std::array<char, 6> s = {a[0], a[1], a[2], b[0], b[1], b[2]};
  int longest = 1;
  int run = 1;
  for (std::size_t i = 1; i < s.size(); ++i) {
    run = s[i] == s[i - 1] ? run + 1 : 1;
    longest = std::max(longest, run);
  }
  return longest >= 3 ? static_cast<double>(longest - 2) : 0.0;
}

std::string Translate(std::string_view mrna) {
  static const std::map<std::string, char, std::less<>> kCode = [] {
    std::map<std::string, char, std::less<>> code;
    for (const auto& row : StandardFamilies()) {
      if (!IsStandardResidue(row.letter)) continue;
      for (auto c : row.codons) code.emplace(std::string(c), row.letter);
    }
    return code;
  }();
  if (mrna.size() % 3 != 0) {
    throw Error(ErrorCode::kLengthMismatch, "mRNA length is not a multiple of 3");
  }
  std::string protein;
  protein.reserve(mrna.size() / 3);
  for (std::size_t i = 0; i < mrna.size(); i += 3) {
    const auto it = kCode.find(mrna.substr(i, 3));
    if (it == kCode.end()) {
      throw Error(ErrorCode::kInvalidCodon, std::string(mrna.substr(i, 3)));
    }
    protein.push_back(it->second);
  }
  return protein;
}

}  // namespace qcodon
