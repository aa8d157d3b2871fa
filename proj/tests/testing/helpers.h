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

#ifndef QCODON_TESTS_TESTING_HELPERS_H_
#define QCODON_TESTS_TESTING_HELPERS_H_

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcodon/bio.h"
#include "qcodon/encoding.h"
#include "qcodon/errors.h"
#include "qcodon/hamiltonian.h"
#include "testing/oracles.h"

namespace qcodon::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(QCODON_DATA_DIR) + "/" + name;
}

inline std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline ProteinSequence LoadSpike() { return ParseFasta(ReadText(DataPath("P0DTC2.fasta"))); }

inline RefFrequencies FrequenciesOf(const CodonTable& table) {
  RefFrequencies f;
  for (char r : std::string_view("ACDEFGHIKLMNPQRSTVWY*")) {
    for (const auto& entry : table.Family(AminoAcid::FromLetter(r))) {
      f[entry.codon.ToString()] = entry.frequency;
    }
  }
  return f;
}

inline HamiltonianWeights ToWeights(const RefWeights& r) {
  HamiltonianWeights w;
  w.c_f = r.c_f;
  w.c_gc = r.c_gc;
  w.c_r = r.c_r;
  w.eps_f = r.eps_f;
  w.rho_gc = r.rho_gc;
  return w;
}

inline RefWeights RandomRefWeights(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 2.0);
  std::uniform_real_distribution<double> rho(0.0, 3.0);
  RefWeights w;
  w.c_f = unit(rng);
  w.c_gc = unit(rng);
  w.c_r = unit(rng);
  w.eps_f = std::pow(10.0, -std::uniform_real_distribution<double>(1.0, 8.0)(rng));
  w.rho_gc = rho(rng);
  return w;
}

/// Random usage table with strictly positive random frequencies.
inline CodonTable RandomUsageTable(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> f(0.05, 1.0);
  std::vector<UsageRow> rows;
  for (const char* b1 : {"A", "C", "G", "U"})
    for (const char* b2 : {"A", "C", "G", "U"})
      for (const char* b3 : {"A", "C", "G", "U"}) {
        rows.push_back({Codon::Parse(std::string(b1) + b2 + b3), f(rng)});
      }
  return LoadUsageFrequencies(rows);
}

inline CodonAssignment RandomAssignment(std::mt19937_64& rng, const Fragment& fragment,
                                        const CodonTable& table) {
  CodonAssignment a;
  for (const auto& r : fragment.residues) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(table.FamilySize(r)) - 1);
    a.push_back(pick(rng));
  }
  return a;
}

inline std::vector<std::string> CodonStrings(const Fragment& fragment, const CodonTable& table,
                                             const CodonAssignment& a) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(table.Family(fragment.residues[i])[static_cast<std::size_t>(a[i])].codon.ToString());
  }
  return out;
}

#define EXPECT_QCODON_ERROR(statement, expected_code)                   \
  do {                                                                  \
    try {                                                               \
      statement;                                                        \
      ADD_FAILURE() << "expected " << ::qcodon::ErrorCodeName(expected_code); \
    } catch (const ::qcodon::Error& e) {                                \
      EXPECT_EQ(e.code(), expected_code) << e.what();                   \
    }                                                                   \
  } while (false)

}  // namespace qcodon::testing

#endif  // QCODON_TESTS_TESTING_HELPERS_H_
