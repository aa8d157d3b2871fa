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

#include "qcodon/json_io.h"

#include <gtest/gtest.h>

#include "testing/helpers.h"

namespace qcodon {
namespace {

TEST(WeightsJsonTest, RoundTrip) {
  HamiltonianWeights w;
  w.c_f = 0.5;
  w.c_gc = 2.0;
  w.c_r = 0.25;
  w.c_p = 12.0;
  w.rho_gc = 1.2;
  const HamiltonianWeights back = WeightsFromJson(WeightsToJson(w));
  EXPECT_EQ(back.c_f, 0.5);
  EXPECT_EQ(back.c_gc, 2.0);
  EXPECT_EQ(back.c_r, 0.25);
  ASSERT_TRUE(back.c_p);
  EXPECT_EQ(*back.c_p, 12.0);
  EXPECT_EQ(back.rho_gc, 1.2);
  EXPECT_EQ(back.eps_f, w.eps_f);
}

TEST(WeightsJsonTest, AutoPenaltyAndDefaults) {
  const HamiltonianWeights defaults;
  const HamiltonianWeights w = WeightsFromJson(Json::parse(R"({"c_p": "auto"})"));
  EXPECT_FALSE(w.c_p);
  EXPECT_EQ(w.c_f, defaults.c_f);
  EXPECT_EQ(w.rho_gc, defaults.rho_gc);
  EXPECT_EQ(WeightsToJson(w)["c_p"], "auto");
}

TEST(WeightsJsonTest, GcFractionForm) {
  const HamiltonianWeights w = WeightsFromJson(Json::parse(R"({"rho_gc": {"fraction": 0.6}})"));
  EXPECT_DOUBLE_EQ(w.rho_gc, 1.8);
  EXPECT_QCODON_ERROR(WeightsFromJson(Json::parse(R"({"rho_gc": {"fraction": 1.5}})")),
                      ErrorCode::kInvalidArgument);
}

TEST(WeightsJsonTest, RejectsBadValues) {
  EXPECT_QCODON_ERROR(WeightsFromJson(Json::parse(R"({"c_f": "high"})")), ErrorCode::kInvalidArgument);
  EXPECT_QCODON_ERROR(WeightsFromJson(Json::parse(R"({"c_p": "manual"})")), ErrorCode::kInvalidArgument);
  EXPECT_QCODON_ERROR(WeightsFromJson(Json::parse(R"({"c_f": -1})")), ErrorCode::kInvalidArgument);
}

TEST(VqeConfigJsonTest, RoundTripAndSynonyms) {
  VqeConfig c;
  c.layers = 3;
  c.restarts = 4;
  c.max_evaluations = 123;
  c.seed = 99;
  c.tau = 0.01;
  c.scheme = Scheme::kOneHot;
  const Json j = VqeConfigToJson(c);
  EXPECT_EQ(j["budget"], 123);
  const VqeConfig back = VqeConfigFromJson(j);
  EXPECT_EQ(back.layers, 3);
  EXPECT_EQ(back.restarts, 4);
  EXPECT_EQ(back.max_evaluations, 123);
  EXPECT_EQ(back.seed, 99u);
  EXPECT_EQ(back.tau, 0.01);
  EXPECT_EQ(back.scheme, Scheme::kOneHot);
  EXPECT_EQ(VqeConfigFromJson(Json::parse(R"({"max_evaluations": 50})")).max_evaluations, 50);
}

TEST(VqeConfigJsonTest, RejectsInvalid) {
  EXPECT_QCODON_ERROR(VqeConfigFromJson(Json::parse(R"({"tau": 2.0})")), ErrorCode::kInvalidArgument);
  EXPECT_QCODON_ERROR(VqeConfigFromJson(Json::parse(R"({"scheme": 3})")), ErrorCode::kInvalidArgument);
  EXPECT_QCODON_ERROR(VqeConfigFromJson(Json::parse(R"({"layers": 1.5})")), ErrorCode::kInvalidArgument);
}

TEST(LayoutJsonTest, DenseLeucine) {
  const EncodingLayout layout = BuildLayout(MakeFragment("L"), BuiltinCodonTable(), Scheme::kDense);
  const Json j = LayoutToJson(layout);
  EXPECT_EQ(j["scheme"], "dense");
  EXPECT_EQ(j["total_qubits"], 3);
  const Json& pos = j["positions"][0];
  EXPECT_EQ(pos["residue"], "L");
  EXPECT_EQ(pos["codons"].size(), 6u);
  EXPECT_EQ(pos["codons"][0]["codon"], "CUA");
  EXPECT_EQ(pos["codons"][5]["pattern"], "101");
  EXPECT_EQ(pos["redundant_patterns"], Json::parse(R"(["110", "111"])"));
}

TEST(PolynomialJsonTest, Terms) {
  Polynomial p = Polynomial::Constant(1.5, 2);
  p.AddTerm({0, 1}, -2.0);
  const Json j = PolynomialToJson(p);
  EXPECT_EQ(j["num_vars"], 2);
  EXPECT_EQ(j["degree"], 2);
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["vars"], Json::array());
  EXPECT_EQ(j["terms"][0]["coefficient"], 1.5);
  EXPECT_EQ(j["terms"][1]["vars"], Json::parse("[0, 1]"));
}

TEST(ExactJsonTest, Fields) {
  const Fragment f = MakeFragment("GSK");
  const CodonTable& table = BuiltinCodonTable();
  const EncodingLayout layout = BuildLayout(f, table, Scheme::kDense);
  const ExactResult r = ExactOptimum(f, table, HamiltonianWeights{});
  const Json j = ExactResultToJson(r, layout);
  EXPECT_EQ(j["energy"], r.best_energy);
  EXPECT_EQ(j["mrna"], AssignmentToMrna(layout, r.best_assignment));
  EXPECT_EQ(j["codons"].size(), 3u);
  EXPECT_EQ(j["search_space"], 48u);
  EXPECT_EQ(j["bits"].get<std::string>().size(), 6u);
}

TEST(PipelineJsonTest, GapSummary) {
  PipelineReport r;
  r.protein_id = "x";
  r.fragments.resize(2);
  r.fragments[0].relative_gap = 0.0;
  r.fragments[1].relative_gap = 0.04;
  const Json j = PipelineReportToJson(r);
  EXPECT_EQ(j["gap"]["fragments"], 2u);
  EXPECT_EQ(j["gap"]["exact_matches"], 1);
  EXPECT_DOUBLE_EQ(j["gap"]["max"].get<double>(), 0.04);
  EXPECT_DOUBLE_EQ(j["gap"]["mean"].get<double>(), 0.02);
  EXPECT_EQ(j["fragments"].size(), 2u);
}

}  // namespace
}  // namespace qcodon
