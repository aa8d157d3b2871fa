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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "qcodon/exact.h"
#include "qcodon/json_io.h"

namespace qcodon {
namespace {

constexpr Scheme kSchemes[] = {Scheme::kDense, Scheme::kOneHot};

long long GatesFor(int qubits, int layers) {
  return qubits == 0 ? 0 : GateCount(qubits, layers).total;
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path.string() + " for writing");
  return out;
}

void CloseChecked(std::ofstream& out, const std::filesystem::path& path) {
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + path.string());
}

PipelineReport Skeleton(const ProteinSequence& seq, const HamiltonianWeights& weights,
                        const VqeConfig& vqe, const PipelineOptions& options) {
  PipelineReport report;
  report.protein_id = seq.id;
  report.protein_length = static_cast<int>(seq.residues.size());
  report.options = options;
  report.weights = weights;
  report.vqe = vqe;
  return report;
}

std::string Stitch(const std::vector<FragmentReport>& rows, bool met_trimmed) {
  std::string mrna = met_trimmed ? "AUG" : "";
  for (const auto& r : rows) mrna += r.chosen_mrna;
  return mrna;
}

}  // namespace

FragmentPlan FragmentProtein(const ProteinSequence& seq, int length, bool skip_leading_met) {
  if (length < 1) throw Error(ErrorCode::kInvalidArgument, "fragment length must be >= 1");
  FragmentPlan plan;
  plan.protein_id = seq.id;
  plan.fragment_length = length;
  plan.skip_leading_met = skip_leading_met;
  std::size_t begin = 0;
  if (skip_leading_met && !seq.residues.empty() && seq.residues.front().letter() == 'M') {
    begin = 1;
    plan.met_trimmed = true;
  }
  if (begin >= seq.residues.size()) {
    throw Error(ErrorCode::kEmptyAfterTrim, "no residues left to fragment");
  }
  const auto step = static_cast<std::size_t>(length);
  for (std::size_t s = begin; s < seq.residues.size(); s += step) {
    const std::size_t e = std::min(s + step, seq.residues.size());
    Fragment f;
    f.residues.assign(seq.residues.begin() + static_cast<std::ptrdiff_t>(s),
                      seq.residues.begin() + static_cast<std::ptrdiff_t>(e));
    f.origin = {seq.id, s, e - s};
    plan.fragments.push_back(std::move(f));
  }
  return plan;
}

ResourceReport BuildResourceReport(const ProteinSequence& seq, const CodonTable& table,
                                   const ResourceOptions& options) {
  const auto in_range = [](int l) { return l >= 1 && l <= 32; };
  if (!in_range(options.min_length) || !in_range(options.max_length) ||
      options.min_length > options.max_length || !in_range(options.histogram_length)) {
    throw Error(ErrorCode::kInvalidArgument, "fragment lengths must lie in [1, 32]");
  }
  if (options.layers < 1) throw Error(ErrorCode::kInvalidArgument, "layers must be >= 1");

  ResourceReport report;
  report.layers = options.layers;
  report.histogram_length = options.histogram_length;
  for (int length = options.min_length; length <= options.max_length; ++length) {
    const FragmentPlan plan = FragmentProtein(seq, length, options.skip_leading_met);
    for (Scheme scheme : kSchemes) {
      ResourceRow row;
      row.length = length;
      row.scheme = scheme;
      row.fragments = static_cast<int>(plan.fragments.size());
      row.min_qubits = std::numeric_limits<int>::max();
      row.min_gates = std::numeric_limits<long long>::max();
      double qubit_sum = 0.0;
      double gate_sum = 0.0;
      for (const auto& f : plan.fragments) {
        const int q = QubitCount(f.residues, table, scheme);
        const long long g = GatesFor(q, options.layers);
        row.min_qubits = std::min(row.min_qubits, q);
        row.max_qubits = std::max(row.max_qubits, q);
        row.min_gates = std::min(row.min_gates, g);
        row.max_gates = std::max(row.max_gates, g);
        qubit_sum += q;
        gate_sum += static_cast<double>(g);
      }
      row.mean_qubits = qubit_sum / row.fragments;
      row.mean_gates = gate_sum / row.fragments;
      report.rows.push_back(row);
    }
  }

  const FragmentPlan plan = FragmentProtein(seq, options.histogram_length, options.skip_leading_met);
  for (Scheme scheme : kSchemes) {
    std::map<int, int> counts;
    for (const auto& f : plan.fragments) ++counts[QubitCount(f.residues, table, scheme)];
    for (const auto& [qubits, n] : counts) report.histogram.push_back({scheme, qubits, n});
  }
  return report;
}

double RelativeGap(double vqe_energy, double exact_energy) {
  const double diff = vqe_energy - exact_energy;
  if (std::abs(diff) <= kEnergyMatchTolerance * std::max(1.0, std::abs(exact_energy))) return 0.0;
  if (exact_energy == 0.0) return std::abs(diff);
  return diff / std::abs(exact_energy);
}

int PipelineReport::ExactMatches() const {
  return static_cast<int>(std::count_if(fragments.begin(), fragments.end(),
                                        [](const FragmentReport& r) { return r.relative_gap == 0.0; }));
}

double PipelineReport::MaxRelativeGap() const {
  double m = 0.0;
  for (const auto& r : fragments) m = std::max(m, r.relative_gap);
  return m;
}

double PipelineReport::MeanRelativeGap() const {
  if (fragments.empty()) return 0.0;
  double s = 0.0;
  for (const auto& r : fragments) s += r.relative_gap;
  return s / static_cast<double>(fragments.size());
}

PipelineError::PipelineError(const Error& cause, PipelineReport partial)
    : Error(cause), partial_(std::move(partial)) {}

FragmentReport SolveFragment(const Fragment& fragment, int index, const CodonTable& table,
                             const HamiltonianWeights& weights, const VqeConfig& vqe) {
  const auto started = std::chrono::steady_clock::now();
  FragmentReport row;
  row.index = index;
  row.residues = ResidueLetters(fragment.residues);
  row.start = fragment.origin.start;
  row.dense_qubits = QubitCount(fragment.residues, table, Scheme::kDense);
  row.onehot_qubits = QubitCount(fragment.residues, table, Scheme::kOneHot);
  row.dense_gates = GatesFor(row.dense_qubits, vqe.layers);
  row.onehot_gates = GatesFor(row.onehot_qubits, vqe.layers);

  const HamiltonianWeights resolved = ResolvePenalty(fragment, weights);
  row.penalty_weight = *resolved.c_p;
  const ExactResult exact = ExactOptimum(fragment, table, resolved);
  const EncodingLayout layout = BuildLayout(fragment, table, vqe.scheme);
  row.search_space = exact.search_space_size;
  row.exact_assignment = exact.best_assignment;
  row.exact_energy = exact.best_energy;
  row.exact_mrna = AssignmentToMrna(layout, exact.best_assignment);

  const VqeResult result = RunVqe(fragment, table, resolved, vqe);
  row.vqe_expectation = result.best_expectation;
  row.vqe_evaluations = result.evaluations;
  row.sampling_fallback = result.fallback;
  if (result.best_valid) {
    row.vqe_energy = result.best_valid->energy;
    row.vqe_mrna = result.best_valid->mrna;
    row.chosen_mrna = row.vqe_mrna;
  } else {
    row.exact_substituted = true;
    row.vqe_energy = row.exact_energy;
    row.chosen_mrna = row.exact_mrna;
  }
  const double slack = kEnergyMatchTolerance * std::max(1.0, std::abs(row.exact_energy));
  if (row.vqe_energy < row.exact_energy - slack) {
    throw std::logic_error("fragment " + std::to_string(index) +
                           ": variational energy below the exact optimum");
  }
  row.relative_gap = RelativeGap(row.vqe_energy, row.exact_energy);
  row.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return row;
}

PipelineReport RunPipeline(const ProteinSequence& seq, const CodonTable& table,
                           const HamiltonianWeights& weights, const VqeConfig& vqe,
                           const PipelineOptions& options) {
  weights.Validate();
  vqe.Validate();
  PipelineReport report = Skeleton(seq, weights, vqe, options);
  FragmentPlan plan = FragmentProtein(seq, options.fragment_length, options.skip_leading_met);
  report.met_trimmed = plan.met_trimmed;
  for (const auto& f : plan.fragments) {
    const int q = QubitCount(f.residues, table, vqe.scheme);
    if (q > kMaxStatevectorQubits) {
      throw Error(ErrorCode::kTooManyQubits,
                  "fragment at residue " + std::to_string(f.origin.start) + " needs " +
                      std::to_string(q) + " qubits, limit is " +
                      std::to_string(kMaxStatevectorQubits));
    }
  }
  ResourceOptions resource_options = options.resources;
  resource_options.skip_leading_met = options.skip_leading_met;
  resource_options.layers = vqe.layers;
  report.resources = BuildResourceReport(seq, table, resource_options);

  const auto config_for = [&](std::size_t i) {
    VqeConfig c = vqe;
    c.seed = DeriveSeed(vqe.seed, i);
    return c;
  };
  const std::size_t n = plan.fragments.size();
  std::vector<std::optional<FragmentReport>> rows(n);

  const auto fail = [&](const Error& cause) {
    for (auto& r : rows) {
      if (r) report.fragments.push_back(std::move(*r));
    }
    report.stitched_mrna = Stitch(report.fragments, report.met_trimmed);
    throw PipelineError(cause, std::move(report));
  };

  if (options.boundary_fix || options.workers <= 1 || n <= 1) {
    std::optional<Codon> previous;
    if (plan.met_trimmed) previous = Codon::Parse("AUG");
    for (std::size_t i = 0; i < n; ++i) {
      Fragment& f = plan.fragments[i];
      if (options.boundary_fix) f.left_context = previous;
      try {
        rows[i] = SolveFragment(f, static_cast<int>(i), table, weights, config_for(i));
      } catch (const Error& e) {
        fail(e);
      }
      const std::string& chosen = rows[i]->chosen_mrna;
      if (chosen.size() >= 3) previous = Codon::Parse(chosen.substr(chosen.size() - 3));
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::optional<std::size_t> failed_index;
    std::exception_ptr failure;
    {
      std::vector<std::jthread> pool;
      const unsigned workers = std::min<unsigned>(options.workers, static_cast<unsigned>(n));
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (;;) {
            {
              std::lock_guard lock(mu);
              if (failure) return;
            }
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
              FragmentReport r = SolveFragment(plan.fragments[i], static_cast<int>(i), table,
                                               weights, config_for(i));
              std::lock_guard lock(mu);
              rows[i] = std::move(r);
            } catch (...) {
              std::lock_guard lock(mu);
              if (!failure || i < *failed_index) {
                failure = std::current_exception();
                failed_index = i;
              }
            }
          }
        });
      }
    }
    if (failure) {
      try {
        std::rethrow_exception(failure);
      } catch (const Error& e) {
        fail(e);
      }
    }
  }

  for (auto& r : rows) report.fragments.push_back(std::move(*r));
  report.stitched_mrna = Stitch(report.fragments, report.met_trimmed);
  return report;
}

void EmitReports(const PipelineReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string() + ": " + ec.message());

  {
    const auto path = dir / "summary.json";
    auto out = OpenForWrite(path);
    out << PipelineReportToJson(report).dump(2) << '\n';
    CloseChecked(out, path);
  }
  {
    const auto path = dir / "scatter.csv";
    auto out = OpenForWrite(path);
    out.precision(17);
    out << "fragment_index,exact_energy,vqe_energy\n";
    for (const auto& r : report.fragments) {
      out << r.index << ',' << r.exact_energy << ',' << r.vqe_energy << '\n';
    }
    CloseChecked(out, path);
  }
  {
    const auto path = dir / "resources.csv";
    auto out = OpenForWrite(path);
    out << "length,scheme,fragments,min_qubits,mean_qubits,max_qubits,min_gates,mean_gates,"
           "max_gates\n";
    for (const auto& r : report.resources.rows) {
      out << r.length << ',' << SchemeName(r.scheme) << ',' << r.fragments << ',' << r.min_qubits
          << ',' << r.mean_qubits << ',' << r.max_qubits << ',' << r.min_gates << ','
          << r.mean_gates << ',' << r.max_gates << '\n';
    }
    CloseChecked(out, path);
  }
  {
    const auto path = dir / "qubit_histogram.csv";
    auto out = OpenForWrite(path);
    out << "length,scheme,qubits,fragments\n";
    for (const auto& h : report.resources.histogram) {
      out << report.resources.histogram_length << ',' << SchemeName(h.scheme) << ',' << h.qubits
          << ',' << h.fragments << '\n';
    }
    CloseChecked(out, path);
  }
  {
    const auto path = dir / "mrna.fasta";
    auto out = OpenForWrite(path);
    const std::string id = report.protein_id.empty() ? "protein" : report.protein_id;
    out << FormatFasta(id + " optimized mRNA", report.stitched_mrna);
    CloseChecked(out, path);
  }
}

}  // namespace qcodon
