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

// Whole-protein orchestration: split into fragments, solve each one with the
// exact oracle and the variational solver, stitch the chosen codons and
// produce the resource and accuracy reports.

#ifndef QCODON_PIPELINE_H_
#define QCODON_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qcodon/bio.h"
#include "qcodon/encoding.h"
#include "qcodon/errors.h"
#include "qcodon/hamiltonian.h"
#include "qcodon/vqe.h"

namespace qcodon {

struct FragmentPlan {
  std::string protein_id;
  std::vector<Fragment> fragments;
  int fragment_length = 8;
  bool skip_leading_met = true;
  /// True when a leading Met was actually removed.
  bool met_trimmed = false;
};

/// Contiguous non-overlapping chunks of `length` residues; the last may be
/// shorter. With `skip_leading_met` a first residue M is dropped (it has one
/// codon and nothing to optimize). Throws kEmptyAfterTrim when nothing is
/// left and kInvalidArgument for length < 1.
FragmentPlan FragmentProtein(const ProteinSequence& seq, int length, bool skip_leading_met);

struct ResourceRow {
  int length = 0;
  Scheme scheme = Scheme::kDense;
  int fragments = 0;
  int min_qubits = 0;
  double mean_qubits = 0.0;
  int max_qubits = 0;
  long long min_gates = 0;
  double mean_gates = 0.0;
  long long max_gates = 0;
};

struct HistogramRow {
  Scheme scheme = Scheme::kDense;
  int qubits = 0;
  int fragments = 0;
};

struct ResourceReport {
  int layers = 2;
  std::vector<ResourceRow> rows;
  /// Fragment-count histogram of qubit requirements at `histogram_length`.
  int histogram_length = 8;
  std::vector<HistogramRow> histogram;
};

struct ResourceOptions {
  int min_length = 6;
  int max_length = 20;
  bool skip_leading_met = true;
  int layers = 2;
  int histogram_length = 8;
};

/// Per fragment length and scheme: qubit and gate statistics over the
/// fragment plan. Lengths must lie in [1, 32]. Fragments that need no qubits
/// count as zero gates.
ResourceReport BuildResourceReport(const ProteinSequence& seq, const CodonTable& table,
                                   const ResourceOptions& options = {});

struct FragmentReport {
  int index = 0;
  std::string residues;
  std::size_t start = 0;
  int dense_qubits = 0;
  int onehot_qubits = 0;
  long long dense_gates = 0;
  long long onehot_gates = 0;
  double penalty_weight = 0.0;
  std::uint64_t search_space = 0;
  CodonAssignment exact_assignment;
  std::string exact_mrna;
  double exact_energy = 0.0;
  double vqe_energy = 0.0;
  std::string vqe_mrna;
  double vqe_expectation = 0.0;
  int vqe_evaluations = 0;
  /// (vqe - exact) / |exact|; the absolute difference when exact is 0.
  double relative_gap = 0.0;
  /// Sampling found no valid candidate above tau and scanned all states.
  bool sampling_fallback = false;
  /// VQE produced no valid state at all; the exact codons were used.
  bool exact_substituted = false;
  /// Chosen codons for the stitched sequence.
  std::string chosen_mrna;
  double wall_seconds = 0.0;
};

struct PipelineOptions {
  int fragment_length = 8;
  bool skip_leading_met = true;
  /// Condition each fragment's first repeat term on the previous fragment's
  /// chosen last codon. Forces sequential processing.
  bool boundary_fix = false;
  unsigned workers = 1;
  ResourceOptions resources;
};

struct PipelineReport {
  std::string protein_id;
  int protein_length = 0;
  PipelineOptions options;
  HamiltonianWeights weights;
  VqeConfig vqe;
  bool met_trimmed = false;
  std::vector<FragmentReport> fragments;
  std::string stitched_mrna;
  ResourceReport resources;

  int ExactMatches() const;
  double MaxRelativeGap() const;
  double MeanRelativeGap() const;
};

/// Energies closer than this are treated as equal when grading VQE results.
inline constexpr double kEnergyMatchTolerance = 1e-9;

double RelativeGap(double vqe_energy, double exact_energy);

/// Thrown when a fragment fails; carries every fragment finished so far.
class PipelineError : public Error {
 public:
  PipelineError(const Error& cause, PipelineReport partial);
  const PipelineReport& partial() const { return partial_; }

 private:
  PipelineReport partial_;
};

/// Solves one fragment with both solvers. `vqe.seed` is used as given.
FragmentReport SolveFragment(const Fragment& fragment, int index, const CodonTable& table,
                             const HamiltonianWeights& weights, const VqeConfig& vqe);

/// Per-fragment seeds are derived from vqe.seed and the fragment index, so
/// results do not depend on the worker count.
PipelineReport RunPipeline(const ProteinSequence& seq, const CodonTable& table,
                           const HamiltonianWeights& weights, const VqeConfig& vqe,
                           const PipelineOptions& options);

/// Writes summary.json, scatter.csv, resources.csv, qubit_histogram.csv and
/// mrna.fasta into `dir`, creating it if needed. Throws kIoError.
void EmitReports(const PipelineReport& report, const std::filesystem::path& dir);

}  // namespace qcodon

#endif  // QCODON_PIPELINE_H_
