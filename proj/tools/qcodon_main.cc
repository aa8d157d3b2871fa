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

// qcodon command-line front end.
//
//   qcodon encode    --sequence GSK [--scheme onehot]
//   qcodon resources --fasta data/P0DTC2.fasta --out reports/
//   qcodon pipeline  --fasta data/P0DTC2.fasta --fragment-length 4 --out run/
//   qcodon fetch P0DTC2 --out data/
//
// Exit codes: 0 success, 2 invalid input, 3 resource limit, 4 I/O failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "qcodon/bio.h"
#include "qcodon/encoding.h"
#include "qcodon/errors.h"
#include "qcodon/exact.h"
#include "qcodon/fetch.h"
#include "qcodon/hamiltonian.h"
#include "qcodon/json_io.h"
#include "qcodon/pipeline.h"
#include "qcodon/vqe.h"

namespace {

using qcodon::Error;
using qcodon::ErrorCode;
using qcodon::Json;

constexpr int kExitValidation = 2;
constexpr int kExitResourceLimit = 3;
constexpr int kExitIo = 4;

struct GlobalOptions {
  std::string codon_usage;
  std::string weights;
  std::string scheme = "dense";
  int fragment_length = 8;
  std::uint64_t seed = 7;
  std::string out;
};

struct InputOptions {
  std::string sequence;
  std::string fasta;
  bool append_stop = false;
};

struct VqeFlags {
  std::string config;
  int layers = 2;
  int restarts = 5;
  int max_evaluations = 500;
  double tau = 1e-3;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "failed reading " + path);
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + path.parent_path().string());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + path.string());
}

Json LoadJson(const std::string& path) {
  try {
    return Json::parse(ReadFile(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument, path + ": " + e.what());
  }
}

qcodon::CodonTable LoadTable(const GlobalOptions& g) {
  if (g.codon_usage.empty()) return qcodon::BuiltinCodonTable();
  const auto rows = qcodon::ParseUsageCsv(ReadFile(g.codon_usage));
  return qcodon::LoadUsageFrequencies(rows);
}

qcodon::HamiltonianWeights LoadWeights(const GlobalOptions& g) {
  if (g.weights.empty()) return {};
  return qcodon::WeightsFromJson(LoadJson(g.weights));
}

qcodon::ProteinSequence LoadProtein(const InputOptions& in) {
  if (!in.fasta.empty()) return qcodon::ParseFasta(ReadFile(in.fasta));
  if (in.sequence.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "provide --sequence or --fasta");
  }
  qcodon::ProteinSequence seq;
  seq.id = "sequence";
  seq.residues = qcodon::ParseResidues(in.sequence);
  if (seq.residues.empty()) throw Error(ErrorCode::kEmptySequence, "sequence is empty");
  return seq;
}

qcodon::ProteinSequence LoadProteinWithStop(const InputOptions& in) {
  qcodon::ProteinSequence seq = LoadProtein(in);
  if (in.append_stop) seq.residues.push_back(qcodon::AminoAcid::FromLetter(qcodon::AminoAcid::kStop));
  return seq;
}

qcodon::Fragment LoadFragment(const InputOptions& in) {
  const qcodon::ProteinSequence seq = LoadProteinWithStop(in);
  qcodon::Fragment f;
  f.residues = seq.residues;
  f.origin = {seq.id, 0, seq.residues.size()};
  return f;
}

// Prints the document and mirrors it to --out/<name> when an output
// directory is set.
void Emit(const GlobalOptions& g, const std::string& name, const Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!g.out.empty()) WriteFile(std::filesystem::path(g.out) / name, text);
}

// A --config file supplies the base values; flags given explicitly on the
// command line override it.
qcodon::VqeConfig MakeVqeConfig(const CLI::App& app, const CLI::App& cmd, const GlobalOptions& g,
                                const VqeFlags& v) {
  const bool from_file = !v.config.empty();
  qcodon::VqeConfig c = from_file ? qcodon::VqeConfigFromJson(LoadJson(v.config)) : qcodon::VqeConfig{};
  const auto take = [&](const CLI::App& owner, const char* flag) {
    return !from_file || owner.count(flag) > 0;
  };
  if (take(cmd, "--layers")) c.layers = v.layers;
  if (take(cmd, "--restarts")) c.restarts = v.restarts;
  if (take(cmd, "--max-evaluations")) c.max_evaluations = v.max_evaluations;
  if (take(cmd, "--tau")) c.tau = v.tau;
  if (take(app, "--seed")) c.seed = g.seed;
  if (take(app, "--scheme")) c.scheme = qcodon::ParseScheme(g.scheme);
  c.Validate();
  return c;
}

void AddInputFlags(CLI::App* cmd, InputOptions& in) {
  auto* seq = cmd->add_option("--sequence", in.sequence, "Amino-acid letters");
  auto* fasta = cmd->add_option("--fasta", in.fasta, "Single-record FASTA file");
  seq->excludes(fasta);
  cmd->add_flag("--append-stop", in.append_stop, "Append a Stop pseudo-residue");
}

void AddVqeFlags(CLI::App* cmd, VqeFlags& v) {
  cmd->add_option("--config", v.config, "VQE config JSON (layers, restarts, budget, seed, tau)");
  cmd->add_option("--layers", v.layers, "Ansatz entangling layers")->capture_default_str();
  cmd->add_option("--restarts", v.restarts, "Independent optimizer restarts")->capture_default_str();
  cmd->add_option("--max-evaluations", v.max_evaluations, "Objective evaluations per restart")
      ->capture_default_str();
  cmd->add_option("--tau", v.tau, "Sampling probability threshold")->capture_default_str();
}

int ExitCodeFor(const Error& e) {
  switch (e.category()) {
    case qcodon::ErrorCategory::kValidation: return kExitValidation;
    case qcodon::ErrorCategory::kResourceLimit: return kExitResourceLimit;
    case qcodon::ErrorCategory::kIo: return kExitIo;
  }
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codon sequence optimization with a variational quantum eigensolver", "qcodon"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--codon-usage", g.codon_usage, "Codon usage CSV (codon,frequency)");
  app.add_option("--weights", g.weights, "Hamiltonian weights JSON");
  app.add_option("--scheme", g.scheme, "Encoding scheme")
      ->check(CLI::IsMember({"dense", "onehot", "one-hot"}))
      ->capture_default_str();
  app.add_option("--fragment-length", g.fragment_length, "Residues per fragment")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Master random seed")->capture_default_str();
  app.add_option("--out", g.out, "Output directory");

  InputOptions input;
  VqeFlags vqe_flags;

  auto* encode = app.add_subcommand("encode", "Print the qubit layout of a fragment");
  AddInputFlags(encode, input);

  auto* resources = app.add_subcommand("resources", "Qubit and gate estimates per fragment length");
  AddInputFlags(resources, input);
  qcodon::ResourceOptions resource_options;
  bool keep_met = false;
  resources->add_option("--min-length", resource_options.min_length)->capture_default_str();
  resources->add_option("--max-length", resource_options.max_length)->capture_default_str();
  resources->add_option("--layers", resource_options.layers)->capture_default_str();
  resources->add_flag("--keep-leading-met", keep_met, "Do not drop a leading M");

  auto* build_ham = app.add_subcommand("build-ham", "Print the Hamiltonian polynomial of a fragment");
  AddInputFlags(build_ham, input);
  bool dump_terms = false;
  build_ham->add_flag("--dump", dump_terms, "Include every polynomial term");

  auto* exact = app.add_subcommand("exact", "Exhaustive optimum of a fragment");
  AddInputFlags(exact, input);
  unsigned exact_workers = 1;
  exact->add_option("--workers", exact_workers, "Worker threads")->capture_default_str();

  auto* vqe = app.add_subcommand("vqe", "Variational optimum of a fragment");
  AddInputFlags(vqe, input);
  AddVqeFlags(vqe, vqe_flags);

  auto* pipeline = app.add_subcommand("pipeline", "Optimize a whole protein fragment by fragment");
  AddInputFlags(pipeline, input);
  AddVqeFlags(pipeline, vqe_flags);
  qcodon::PipelineOptions pipeline_options;
  pipeline_options.workers = std::max(1u, std::thread::hardware_concurrency());
  pipeline->add_option("--workers", pipeline_options.workers, "Worker threads");
  pipeline->add_flag("--boundary-fix", pipeline_options.boundary_fix,
                     "Condition each fragment on the previous fragment's last codon");
  pipeline->add_flag("--keep-leading-met", keep_met, "Do not drop a leading M");

  auto* fetch = app.add_subcommand("fetch", "Download a FASTA record");
  std::string accession;
  std::string endpoint;
  int timeout_seconds = 30;
  fetch->add_option("accession", accession, "Accession, e.g. P0DTC2")->required();
  fetch->add_option("--endpoint", endpoint, "URL template with {accession}");
  fetch->add_option("--timeout", timeout_seconds, "Seconds")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    const qcodon::Scheme scheme = qcodon::ParseScheme(g.scheme);
    if (*encode) {
      const auto table = LoadTable(g);
      const auto layout = qcodon::BuildLayout(LoadFragment(input), table, scheme);
      Json doc = qcodon::LayoutToJson(layout);
      doc["gates"] = layout.total_qubits == 0 ? 0 : qcodon::GateCount(layout, 2).total;
      Emit(g, "layout.json", doc);
    } else if (*resources) {
      const auto table = LoadTable(g);
      const auto seq = LoadProteinWithStop(input);
      resource_options.skip_leading_met = !keep_met;
      resource_options.histogram_length = g.fragment_length;
      const auto report = qcodon::BuildResourceReport(seq, table, resource_options);
      Json doc = qcodon::ResourceReportToJson(report);
      doc["whole_protein_qubits"] = {
          {"dense", qcodon::QubitCount(seq.residues, table, qcodon::Scheme::kDense)},
          {"onehot", qcodon::QubitCount(seq.residues, table, qcodon::Scheme::kOneHot)}};
      Emit(g, "resources.json", doc);
    } else if (*build_ham) {
      const auto table = LoadTable(g);
      const auto fragment = LoadFragment(input);
      const auto weights = qcodon::ResolvePenalty(fragment, LoadWeights(g));
      const auto layout = qcodon::BuildLayout(fragment, table, scheme);
      Json doc;
      doc["weights"] = qcodon::WeightsToJson(weights);
      doc["layout"] = qcodon::LayoutToJson(layout);
      const auto h = qcodon::BuildTotal(fragment, layout, table, weights);
      Json summary = qcodon::PolynomialToJson(h);
      if (!dump_terms) summary.erase("terms");
      summary["term_count"] = h.size();
      doc["hamiltonian"] = std::move(summary);
      Emit(g, "hamiltonian.json", doc);
    } else if (*exact) {
      const auto table = LoadTable(g);
      const auto fragment = LoadFragment(input);
      const auto weights = qcodon::ResolvePenalty(fragment, LoadWeights(g));
      const auto result = qcodon::ExactOptimum(fragment, table, weights, exact_workers);
      Json doc = qcodon::ExactResultToJson(result, qcodon::BuildLayout(fragment, table, scheme));
      doc["weights"] = qcodon::WeightsToJson(weights);
      Emit(g, "exact.json", doc);
    } else if (*vqe) {
      const auto table = LoadTable(g);
      const auto result = qcodon::RunVqe(LoadFragment(input), table, LoadWeights(g),
                                         MakeVqeConfig(app, *vqe, g, vqe_flags));
      Emit(g, "vqe.json", qcodon::VqeResultToJson(result));
    } else if (*pipeline) {
      const auto table = LoadTable(g);
      const auto seq = LoadProteinWithStop(input);
      pipeline_options.fragment_length = g.fragment_length;
      pipeline_options.skip_leading_met = !keep_met;
      pipeline_options.resources.histogram_length = g.fragment_length;
      const std::string out = g.out.empty() ? "qcodon_out" : g.out;
      try {
        const auto report = qcodon::RunPipeline(seq, table, LoadWeights(g),
                                                MakeVqeConfig(app, *pipeline, g, vqe_flags),
                                                pipeline_options);
        qcodon::EmitReports(report, out);
        std::cout << "fragments: " << report.fragments.size()
                  << "  exact matches: " << report.ExactMatches()
                  << "  max relative gap: " << report.MaxRelativeGap() << "\n"
                  << "reports written to " << out << "\n";
      } catch (const qcodon::PipelineError& e) {
        qcodon::EmitReports(e.partial(), out);
        std::cerr << "partial results (" << e.partial().fragments.size()
                  << " fragments) written to " << out << "\n";
        throw;
      }
    } else if (*fetch) {
      const std::string url = qcodon::ResolveFetchEndpoint(
          endpoint.empty() ? std::nullopt : std::optional<std::string>(endpoint));
      const std::string body =
          qcodon::FetchSequence(accession, url, std::chrono::seconds(timeout_seconds));
      if (g.out.empty()) {
        std::cout << body;
      } else {
        WriteFile(std::filesystem::path(g.out) / (accession + ".fasta"), body);
      }
    }
  } catch (const Error& e) {
    std::cerr << "qcodon: " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "qcodon: internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
