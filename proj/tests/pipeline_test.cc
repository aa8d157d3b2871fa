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

#include "qcodon/pipeline.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "qcodon/json_io.h"
#include "testing/helpers.h"
#include "testing/oracles.h"

namespace qcodon {
namespace {

namespace fs = std::filesystem;

ProteinSequence Protein(std::string_view letters, std::string id = "test") {
  return {std::move(id), ParseResidues(letters)};
}

VqeConfig QuickVqe() {
  VqeConfig c;
  c.restarts = 2;
  c.max_evaluations = 200;
  return c;
}

std::vector<std::string> Lines(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("qcodon_pipeline_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(FragmentProteinTest, Examples) {
  const FragmentPlan a = FragmentProtein(Protein("MG"), 8, true);
  ASSERT_EQ(a.fragments.size(), 1u);
  EXPECT_EQ(ResidueLetters(a.fragments[0].residues), "G");
  EXPECT_TRUE(a.met_trimmed);
  EXPECT_EQ(a.fragments[0].origin.start, 1u);

  const FragmentPlan b = FragmentProtein(Protein("GSKV"), 2, false);
  ASSERT_EQ(b.fragments.size(), 2u);
  EXPECT_EQ(ResidueLetters(b.fragments[0].residues), "GS");
  EXPECT_EQ(ResidueLetters(b.fragments[1].residues), "KV");
  EXPECT_FALSE(b.met_trimmed);
}

TEST(FragmentProteinTest, KeepsNonMetLeader) {
  const FragmentPlan p = FragmentProtein(Protein("GMK"), 2, true);
  EXPECT_FALSE(p.met_trimmed);
  EXPECT_EQ(ResidueLetters(p.fragments[0].residues), "GM");
  EXPECT_EQ(ResidueLetters(p.fragments[1].residues), "K");
}

TEST(FragmentProteinTest, Errors) {
  EXPECT_QCODON_ERROR(FragmentProtein(Protein("M"), 8, true), ErrorCode::kEmptyAfterTrim);
  EXPECT_QCODON_ERROR(FragmentProtein(Protein("GS"), 0, true), ErrorCode::kInvalidArgument);
}

TEST(FragmentProteinTest, SpikeGives159FragmentsOfEight) {
  const ProteinSequence spike = testing::LoadSpike();
  ASSERT_EQ(spike.residues.size(), 1273u);
  const FragmentPlan plan = FragmentProtein(spike, 8, true);
  ASSERT_EQ(plan.fragments.size(), 159u);
  for (const auto& f : plan.fragments) EXPECT_EQ(f.residues.size(), 8u);
}

TEST(FragmentProteinPropertyTest, Reconstruction) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> length(1, 60);
  std::uniform_int_distribution<int> chunk(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    std::string letters = testing::RandomResidues(rng, length(rng));
    if (trial % 3 == 0) letters.insert(letters.begin(), 'M');
    const int l = chunk(rng);
    const bool skip = trial % 2 == 0;
    const bool trims = skip && letters[0] == 'M';
    if (trims && letters.size() == 1) continue;
    const FragmentPlan plan = FragmentProtein(Protein(letters), l, skip);
    std::string joined = plan.met_trimmed ? "M" : "";
    std::size_t expected_start = plan.met_trimmed ? 1 : 0;
    for (std::size_t i = 0; i < plan.fragments.size(); ++i) {
      const auto& f = plan.fragments[i];
      joined += ResidueLetters(f.residues);
      EXPECT_EQ(f.origin.start, expected_start);
      expected_start += f.residues.size();
      if (i + 1 < plan.fragments.size()) EXPECT_EQ(f.residues.size(), static_cast<std::size_t>(l));
    }
    EXPECT_EQ(joined, letters);
    EXPECT_EQ(plan.met_trimmed, trims);
    const std::size_t remaining = letters.size() - (trims ? 1 : 0);
    EXPECT_EQ(plan.fragments.size(), (remaining + l - 1) / l);
  }
}

TEST(ResourceReportTest, SpikeLengthsSixAndEight) {
  const ResourceReport r = BuildResourceReport(testing::LoadSpike(), BuiltinCodonTable());
  EXPECT_EQ(r.rows.size(), 2u * 15);
  const auto row = [&](int length, Scheme scheme) {
    for (const auto& x : r.rows) {
      if (x.length == length && x.scheme == scheme) return x;
    }
    ADD_FAILURE() << "missing row";
    return ResourceRow{};
  };
  EXPECT_EQ(row(6, Scheme::kDense).max_qubits, 16);
  EXPECT_EQ(row(6, Scheme::kOneHot).max_qubits, 32);
  EXPECT_NEAR(row(6, Scheme::kOneHot).mean_qubits, 21.0, 1.0);
  const ResourceRow d8 = row(8, Scheme::kDense);
  const ResourceRow o8 = row(8, Scheme::kOneHot);
  EXPECT_EQ(d8.fragments, 159);
  EXPECT_EQ(d8.min_qubits, 8);
  EXPECT_EQ(d8.max_qubits, 21);
  EXPECT_EQ(o8.max_qubits, 42);
  EXPECT_EQ(o8.min_qubits, 17);
  for (const auto& x : r.rows) {
    EXPECT_LE(x.min_qubits, x.mean_qubits);
    EXPECT_LE(x.mean_qubits, x.max_qubits);
    EXPECT_LE(x.min_gates, x.max_gates);
  }
  int histogram_total = 0;
  for (const auto& h : r.histogram) {
    if (h.scheme == Scheme::kDense) histogram_total += h.fragments;
  }
  EXPECT_EQ(histogram_total, 159);
}

TEST(ResourceReportTest, QubitsMatchOracleCounts) {
  const ProteinSequence seq = Protein("MRSAGVLKWFHHE");
  ResourceOptions options;
  options.min_length = 3;
  options.max_length = 3;
  const ResourceReport r = BuildResourceReport(seq, BuiltinCodonTable(), options);
  ASSERT_EQ(r.rows.size(), 2u);
  const std::vector<std::string> chunks = {"RSA", "GVL", "KWF", "HHE"};
  for (const auto& row : r.rows) {
    const bool dense = row.scheme == Scheme::kDense;
    int lo = 1000, hi = 0, sum = 0;
    for (const auto& c : chunks) {
      const int q = testing::RefQubits(c, dense);
      lo = std::min(lo, q);
      hi = std::max(hi, q);
      sum += q;
    }
    EXPECT_EQ(row.min_qubits, lo);
    EXPECT_EQ(row.max_qubits, hi);
    EXPECT_DOUBLE_EQ(row.mean_qubits, sum / 4.0);
  }
}

TEST(ResourceReportTest, RejectsLengthsOutOfRange) {
  ResourceOptions options;
  options.max_length = 33;
  EXPECT_QCODON_ERROR(BuildResourceReport(Protein("GSK"), BuiltinCodonTable(), options),
                      ErrorCode::kInvalidArgument);
}

TEST(RelativeGapTest, Definition) {
  EXPECT_EQ(RelativeGap(2.0, 2.0), 0.0);
  EXPECT_NEAR(RelativeGap(2.1, 2.0), 0.05, 1e-15);
  EXPECT_NEAR(RelativeGap(-1.9, -2.0), 0.05, 1e-15);
  EXPECT_DOUBLE_EQ(RelativeGap(0.5, 0.0), 0.5);
  EXPECT_EQ(RelativeGap(2.0 + 1e-12, 2.0), 0.0);
}

TEST(RunPipelineTest, MgskSingleFragment) {
  const CodonTable& table = BuiltinCodonTable();
  const PipelineReport r = RunPipeline(Protein("MGSK"), table, HamiltonianWeights{}, VqeConfig{}, {});
  ASSERT_EQ(r.fragments.size(), 1u);
  EXPECT_TRUE(r.met_trimmed);
  const FragmentReport& f = r.fragments[0];
  EXPECT_EQ(f.residues, "GSK");
  const testing::RefOptimum ref =
      testing::RefExactOptimum("GSK", testing::FrequenciesOf(table), testing::RefWeights{});
  EXPECT_NEAR(f.exact_energy, ref.energy, 1e-9);
  EXPECT_GE(f.vqe_energy, f.exact_energy - kEnergyMatchTolerance);
  EXPECT_EQ(r.stitched_mrna.substr(0, 3), "AUG");
  EXPECT_EQ(r.stitched_mrna.size(), 12u);
  EXPECT_EQ(Translate(r.stitched_mrna), "MGSK");
  EXPECT_EQ(f.dense_qubits, 2 + 3 + 1);
  EXPECT_EQ(f.onehot_qubits, 4 + 6 + 2);
}

TEST(RunPipelineTest, ZeroWeightsGiveZeroGap) {
  HamiltonianWeights w;
  w.c_f = w.c_gc = w.c_r = 0.0;
  const PipelineReport r = RunPipeline(Protein("MRSAGVLKWFHHEQ"), BuiltinCodonTable(), w, QuickVqe(), {});
  ASSERT_EQ(r.fragments.size(), 2u);
  for (const auto& f : r.fragments) EXPECT_EQ(f.relative_gap, 0.0);
  EXPECT_EQ(r.ExactMatches(), 2);
  EXPECT_EQ(r.MaxRelativeGap(), 0.0);
}

TEST(RunPipelineTest, TranslationRoundTripAndInvariants) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    const std::string letters = "M" + testing::RandomResidues(rng, 10);
    PipelineOptions options;
    options.fragment_length = 4;
    const PipelineReport r =
        RunPipeline(Protein(letters), BuiltinCodonTable(), HamiltonianWeights{}, QuickVqe(), options);
    EXPECT_EQ(r.stitched_mrna.size(), 3 * letters.size());
    EXPECT_EQ(Translate(r.stitched_mrna), letters);
    for (const auto& f : r.fragments) {
      EXPECT_GE(f.vqe_energy, f.exact_energy - kEnergyMatchTolerance);
      EXPECT_GE(f.relative_gap, 0.0);
    }
  }
}

TEST(RunPipelineTest, WorkerCountDoesNotChangeReport) {
  const ProteinSequence seq = Protein("MRSAGVLKWFHHEQNPTY");
  PipelineOptions options;
  options.fragment_length = 3;
  const PipelineReport one = RunPipeline(seq, BuiltinCodonTable(), {}, QuickVqe(), options);
  options.workers = 4;
  const PipelineReport many = RunPipeline(seq, BuiltinCodonTable(), {}, QuickVqe(), options);
  ASSERT_EQ(one.fragments.size(), many.fragments.size());
  for (std::size_t i = 0; i < one.fragments.size(); ++i) {
    EXPECT_EQ(one.fragments[i].vqe_energy, many.fragments[i].vqe_energy);
    EXPECT_EQ(one.fragments[i].chosen_mrna, many.fragments[i].chosen_mrna);
  }
  EXPECT_EQ(one.stitched_mrna, many.stitched_mrna);
}

TEST(RunPipelineTest, BoundaryFixConditionsOnPreviousCodon) {
  HamiltonianWeights w;
  w.c_f = w.c_gc = 0.0;
  PipelineOptions options;
  options.fragment_length = 1;
  const ProteinSequence seq = Protein("MKK");
  const PipelineReport plain = RunPipeline(seq, BuiltinCodonTable(), w, QuickVqe(), options);
  ASSERT_EQ(plain.fragments.size(), 2u);
  EXPECT_EQ(plain.stitched_mrna, "AUGAAAAAA");

  options.boundary_fix = true;
  const PipelineReport fixed = RunPipeline(seq, BuiltinCodonTable(), w, QuickVqe(), options);
  // AUG|AAA and AAG|AAA both contain a run of three A's; AAG avoids it.
  EXPECT_EQ(fixed.stitched_mrna, "AUGAAGAAG");
  for (const auto& f : fixed.fragments) EXPECT_EQ(f.exact_energy, 0.0);
}

TEST(RunPipelineTest, RejectsOversizedFragments) {
  PipelineOptions options;
  options.fragment_length = 9;
  EXPECT_QCODON_ERROR(
      RunPipeline(Protein("LLLLLLLLL"), BuiltinCodonTable(), {}, QuickVqe(), options),
      ErrorCode::kTooManyQubits);
}

TEST(EmitReportsTest, EmptyReport) {
  TempDir dir;
  EmitReports(PipelineReport{}, dir.path());
  EXPECT_THAT(Lines(dir.path() / "scatter.csv"),
              ::testing::ElementsAre("fragment_index,exact_energy,vqe_energy"));
  EXPECT_EQ(Lines(dir.path() / "resources.csv").size(), 1u);
  EXPECT_EQ(Lines(dir.path() / "qubit_histogram.csv").size(), 1u);
  std::ifstream in(dir.path() / "summary.json");
  EXPECT_TRUE(Json::parse(in).is_object());
}

TEST(EmitReportsTest, SingleFragmentReport) {
  TempDir dir;
  const PipelineReport r = RunPipeline(Protein("MGSK", "demo"), BuiltinCodonTable(), {}, QuickVqe(), {});
  EmitReports(r, dir.path());
  const auto scatter = Lines(dir.path() / "scatter.csv");
  ASSERT_EQ(scatter.size(), 2u);
  std::stringstream row(scatter[1]);
  std::string index, exact, vqe;
  std::getline(row, index, ',');
  std::getline(row, exact, ',');
  std::getline(row, vqe, ',');
  EXPECT_EQ(index, "0");
  EXPECT_GE(std::stod(vqe), std::stod(exact) - kEnergyMatchTolerance);

  const auto fasta = Lines(dir.path() / "mrna.fasta");
  ASSERT_GE(fasta.size(), 2u);
  EXPECT_EQ(fasta[0], ">demo optimized mRNA");
  std::string sequence;
  for (std::size_t i = 1; i < fasta.size(); ++i) sequence += fasta[i];
  EXPECT_EQ(sequence.size(), 12u);

  std::ifstream in(dir.path() / "summary.json");
  const Json summary = Json::parse(in);
  EXPECT_EQ(summary["fragments"].size(), 1u);
  EXPECT_EQ(summary["stitched_mrna"], r.stitched_mrna);
}

TEST(EmitReportsTest, UnwritableDirectoryIsAnIoError) {
  TempDir dir;
  fs::create_directories(dir.path());
  std::ofstream(dir.path() / "blocker") << "x";
  EXPECT_QCODON_ERROR(EmitReports(PipelineReport{}, dir.path() / "blocker" / "out"),
                      ErrorCode::kIoError);
}

}  // namespace
}  // namespace qcodon
