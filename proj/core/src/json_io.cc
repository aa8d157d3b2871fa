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

#include <string>

#include "qcodon/errors.h"

namespace qcodon {
namespace {

double NumberAt(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number()) throw Error(ErrorCode::kInvalidArgument, std::string(key) + " must be a number");
  return v.get<double>();
}

template <typename Int>
Int IntegerAt(const Json& j, const char* key, Int fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(key) + " must be an integer");
  }
  return v.get<Int>();
}

Json SampledToJson(const SampledState& s) {
  Json j;
  j["bits"] = BitsToString(s.bits);
  j["index"] = s.index;
  j["probability"] = s.probability;
  j["energy"] = s.energy;
  j["valid"] = s.valid;
  if (s.valid) {
    j["assignment"] = s.assignment;
    j["mrna"] = s.mrna;
  }
  return j;
}

Json FragmentToJson(const FragmentReport& r) {
  Json j;
  j["index"] = r.index;
  j["residues"] = r.residues;
  j["start"] = r.start;
  j["qubits"] = {{"dense", r.dense_qubits}, {"onehot", r.onehot_qubits}};
  j["gates"] = {{"dense", r.dense_gates}, {"onehot", r.onehot_gates}};
  j["c_p"] = r.penalty_weight;
  j["search_space"] = r.search_space;
  j["exact"] = {{"energy", r.exact_energy}, {"assignment", r.exact_assignment}, {"mrna", r.exact_mrna}};
  j["vqe"] = {{"energy", r.vqe_energy},
              {"mrna", r.vqe_mrna},
              {"expectation", r.vqe_expectation},
              {"evaluations", r.vqe_evaluations}};
  j["relative_gap"] = r.relative_gap;
  j["sampling_fallback"] = r.sampling_fallback;
  j["exact_substituted"] = r.exact_substituted;
  j["chosen_mrna"] = r.chosen_mrna;
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

}  // namespace

Json LayoutToJson(const EncodingLayout& layout) {
  Json j;
  j["scheme"] = SchemeName(layout.scheme);
  j["total_qubits"] = layout.total_qubits;
  Json positions = Json::array();
  for (std::size_t i = 0; i < layout.positions.size(); ++i) {
    const PositionLayout& p = layout.positions[i];
    Json codons = Json::array();
    for (std::size_t k = 0; k < p.codons.size(); ++k) {
      Json c;
      c["codon"] = p.codons[k].ToString();
      c["pattern"] = BitsToString(CodonPattern(layout, static_cast<int>(i), static_cast<int>(k)));
      codons.push_back(std::move(c));
    }
    Json pos;
    pos["residue"] = std::string(1, p.residue.letter());
    pos["offset"] = p.offset;
    pos["width"] = p.width;
    pos["codons"] = std::move(codons);
    if (layout.scheme == Scheme::kDense) {
      Json redundant = Json::array();
      for (const Bits& b : RedundantPatterns(layout, static_cast<int>(i))) {
        redundant.push_back(BitsToString(b));
      }
      pos["redundant_patterns"] = std::move(redundant);
    }
    positions.push_back(std::move(pos));
  }
  j["positions"] = std::move(positions);
  return j;
}

Json PolynomialToJson(const Polynomial& p) {
  Json j;
  j["num_vars"] = p.num_vars();
  j["degree"] = p.degree();
  Json terms = Json::array();
  for (const auto& [vars, c] : p.terms()) terms.push_back({{"vars", vars}, {"coefficient", c}});
  j["terms"] = std::move(terms);
  return j;
}

Json WeightsToJson(const HamiltonianWeights& w) {
  Json j;
  j["c_f"] = w.c_f;
  j["c_gc"] = w.c_gc;
  j["c_r"] = w.c_r;
  if (w.c_p) {
    j["c_p"] = *w.c_p;
  } else {
    j["c_p"] = "auto";
  }
  j["eps_f"] = w.eps_f;
  j["rho_gc"] = w.rho_gc;
  return j;
}

HamiltonianWeights WeightsFromJson(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "weights must be a JSON object");
  HamiltonianWeights w;
  w.c_f = NumberAt(j, "c_f", w.c_f);
  w.c_gc = NumberAt(j, "c_gc", w.c_gc);
  w.c_r = NumberAt(j, "c_r", w.c_r);
  w.eps_f = NumberAt(j, "eps_f", w.eps_f);
  if (j.contains("c_p")) {
    const Json& v = j.at("c_p");
    if (v.is_string() && v.get<std::string>() == "auto") {
      w.c_p.reset();
    } else if (v.is_number()) {
      w.c_p = v.get<double>();
    } else {
      throw Error(ErrorCode::kInvalidArgument, "c_p must be a number or \"auto\"");
    }
  }
  if (j.contains("rho_gc")) {
    const Json& v = j.at("rho_gc");
    if (v.is_object()) {
      w.rho_gc = RhoFromGcFraction(NumberAt(v, "fraction", 0.5));
    } else {
      w.rho_gc = NumberAt(j, "rho_gc", w.rho_gc);
    }
  }
  w.Validate();
  return w;
}

Json VqeConfigToJson(const VqeConfig& c) {
  Json j;
  j["layers"] = c.layers;
  j["restarts"] = c.restarts;
  j["budget"] = c.max_evaluations;
  j["seed"] = c.seed;
  j["tau"] = c.tau;
  j["scheme"] = SchemeName(c.scheme);
  j["initial_step"] = c.optimizer.initial_step;
  j["restart_step"] = c.optimizer.restart_step;
  return j;
}

VqeConfig VqeConfigFromJson(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "VQE config must be a JSON object");
  VqeConfig c;
  c.layers = IntegerAt(j, "layers", c.layers);
  c.restarts = IntegerAt(j, "restarts", c.restarts);
  c.max_evaluations = IntegerAt(j, "max_evaluations", c.max_evaluations);
  c.max_evaluations = IntegerAt(j, "budget", c.max_evaluations);
  c.seed = IntegerAt(j, "seed", c.seed);
  c.tau = NumberAt(j, "tau", c.tau);
  if (j.contains("scheme")) {
    if (!j.at("scheme").is_string()) throw Error(ErrorCode::kInvalidArgument, "scheme must be a string");
    c.scheme = ParseScheme(j.at("scheme").get<std::string>());
  }
  c.optimizer.initial_step = NumberAt(j, "initial_step", c.optimizer.initial_step);
  c.optimizer.restart_step = NumberAt(j, "restart_step", c.optimizer.restart_step);
  c.Validate();
  return c;
}

Json ExactResultToJson(const ExactResult& r, const EncodingLayout& layout) {
  Json j;
  j["energy"] = r.best_energy;
  j["assignment"] = r.best_assignment;
  Json codons = Json::array();
  for (std::size_t i = 0; i < r.best_assignment.size(); ++i) {
    codons.push_back(
        layout.positions[i].codons[static_cast<std::size_t>(r.best_assignment[i])].ToString());
  }
  j["codons"] = std::move(codons);
  j["mrna"] = AssignmentToMrna(layout, r.best_assignment);
  j["bits"] = BitsToString(EncodeAssignment(layout, r.best_assignment));
  j["search_space"] = r.search_space_size;
  return j;
}

Json VqeResultToJson(const VqeResult& r) {
  Json j;
  j["num_qubits"] = r.num_qubits;
  j["weights"] = WeightsToJson(r.weights);
  j["config"] = VqeConfigToJson(r.config);
  j["best_expectation"] = r.best_expectation;
  j["best_parameters"] = r.best_parameters;
  j["evaluations"] = r.evaluations;
  j["fallback"] = r.fallback;
  j["best_valid"] = r.best_valid ? SampledToJson(*r.best_valid) : Json(nullptr);
  Json candidates = Json::array();
  for (const auto& c : r.candidates) candidates.push_back(SampledToJson(c));
  j["candidates"] = std::move(candidates);
  j["energy_trace"] = r.energy_trace;
  return j;
}

Json ResourceReportToJson(const ResourceReport& r) {
  Json j;
  j["layers"] = r.layers;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"length", row.length},
                    {"scheme", SchemeName(row.scheme)},
                    {"fragments", row.fragments},
                    {"min_qubits", row.min_qubits},
                    {"mean_qubits", row.mean_qubits},
                    {"max_qubits", row.max_qubits},
                    {"min_gates", row.min_gates},
                    {"mean_gates", row.mean_gates},
                    {"max_gates", row.max_gates}});
  }
  j["rows"] = std::move(rows);
  j["histogram_length"] = r.histogram_length;
  Json histogram = Json::array();
  for (const auto& h : r.histogram) {
    histogram.push_back(
        {{"scheme", SchemeName(h.scheme)}, {"qubits", h.qubits}, {"fragments", h.fragments}});
  }
  j["histogram"] = std::move(histogram);
  return j;
}

Json PipelineReportToJson(const PipelineReport& r) {
  Json j;
  j["protein_id"] = r.protein_id;
  j["protein_length"] = r.protein_length;
  j["fragment_length"] = r.options.fragment_length;
  j["skip_leading_met"] = r.options.skip_leading_met;
  j["met_trimmed"] = r.met_trimmed;
  j["boundary_fix"] = r.options.boundary_fix;
  j["weights"] = WeightsToJson(r.weights);
  j["vqe"] = VqeConfigToJson(r.vqe);
  j["gap"] = {{"fragments", r.fragments.size()},
              {"exact_matches", r.ExactMatches()},
              {"mean", r.MeanRelativeGap()},
              {"max", r.MaxRelativeGap()}};
  Json fragments = Json::array();
  for (const auto& f : r.fragments) fragments.push_back(FragmentToJson(f));
  j["fragments"] = std::move(fragments);
  j["stitched_mrna"] = r.stitched_mrna;
  j["resources"] = ResourceReportToJson(r.resources);
  return j;
}

}  // namespace qcodon
