// Copyright 2026 The refdesc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// refdesc: command line front end.
//
//   refdesc generate --kind erdos_renyi --n 1000 --p 0.01 --seed 7 > g.json
//   refdesc names --graph g.json --described-per-name 100 --seed 7 > n.json
//   refdesc describe --graph n.json --target 3 --shape flat --seed 1
//   refdesc sweep --config fig6.toml --out fig6.csv --seed 7

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "json.hpp"
#include "refdesc/audit.h"
#include "refdesc/config.h"
#include "refdesc/decode.h"
#include "refdesc/error.h"
#include "refdesc/generators.h"
#include "refdesc/graph.h"
#include "refdesc/measures.h"
#include "refdesc/rng.h"
#include "refdesc/search.h"
#include "refdesc/sweep.h"
#include "refdesc/theory.h"

namespace {

using nlohmann::json;
using namespace refdesc;

json Number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void Emit(const std::string &text, const std::string &path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  out << text;
}

void EmitJson(const json &doc, const std::string &path) {
  Emit(doc.dump(2) + "\n", path);
}

json ReadJson(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  try {
    json doc;
    in >> doc;
    return doc;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

// Graph file with names; a plain graph gets unique names.
struct Loaded {
  Graph graph;
  NameTable names;
};

Loaded Load(const std::string &path) {
  LoadedGraph g = LoadGraphFile(path);
  NameTable names = g.names ? std::move(*g.names)
                            : NameTable::Unique(g.graph.node_count());
  return {std::move(g.graph), std::move(names)};
}

std::vector<Description> ReadDescriptions(const std::string &path,
                                          const Graph &graph) {
  json doc = ReadJson(path);
  std::vector<Description> out;
  if (doc.is_array()) {
    for (const json &d : doc) out.push_back(DescriptionFromJson(d, graph.labels()));
  } else {
    out.push_back(DescriptionFromJson(doc, graph.labels()));
  }
  return out;
}

json PredictionJson(const Prediction &p) {
  return {{"mode", PredictionModeName(p.mode)},
          {"D", Number(p.D)},
          {"L", Number(p.L)},
          {"feasible", p.feasible},
          {"notes", p.notes}};
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Reference by description: graphs, names, descriptions, "
               "measures and size predictions"};
  app.require_subcommand(1);

  // generate
  auto *generate = app.add_subcommand("generate", "Generate a random graph");
  GeneratorConfig gen;
  std::string gen_kind = "erdos_renyi", out_path;
  size_t clusters = 0, inter_pairs = 0;
  generate->add_option("--kind", gen_kind,
                       "erdos_renyi | bipartite | clustered")
      ->capture_default_str();
  generate->add_option("--n", gen.node_count, "Node count")->capture_default_str();
  generate->add_option("--p", gen.arc_probability, "Arc probability")
      ->capture_default_str();
  generate->add_option("--labels", gen.label_count, "Label alphabet size")
      ->capture_default_str();
  auto *clusters_opt =
      generate->add_option("--clusters", clusters, "Cluster count (clustered)");
  auto *pairs_opt = generate->add_option("--inter-pairs", inter_pairs,
                                         "Cross-cluster pairs (clustered)");
  generate->add_option("--seed", gen.seed, "Seed")->required();
  generate->add_option("--out", out_path, "Output file (default stdout)");

  // names
  auto *names_cmd = app.add_subcommand("names", "Assign ambiguous names");
  std::string graph_path;
  NamingConfig naming;
  names_cmd->add_option("--graph", graph_path, "Graph JSON")->required();
  names_cmd->add_option("--described-per-name", naming.described_nodes_per_name)
      ->capture_default_str();
  names_cmd->add_option("--descriptor-per-name", naming.descriptor_nodes_per_name)
      ->capture_default_str();
  names_cmd->add_option("--described-fraction", naming.described_fraction)
      ->capture_default_str();
  names_cmd->add_option("--seed", naming.seed, "Seed")->required();
  names_cmd->add_option("--out", out_path, "Output file (default stdout)");

  // measure
  auto *measure = app.add_subcommand(
      "measure", "Ambiguity, entropy rate and salience of sampled descriptions");
  std::string receiver_path, measure_shape = "flat", measure_strategy = "random";
  size_t measure_d = 1, measure_samples = 200;
  uint64_t measure_seed = 0;
  measure->add_option("--graph", graph_path, "Graph JSON")->required();
  measure->add_option("--receiver", receiver_path,
                      "Receiver view for shared salience");
  measure->add_option("--d", measure_d, "Descriptors per sampled description")
      ->capture_default_str();
  measure->add_option("--samples", measure_samples, "Descriptions sampled")
      ->capture_default_str();
  measure->add_option("--strategy", measure_strategy, "random | salient")
      ->capture_default_str();
  measure->add_option("--shape", measure_shape, "flat | intermediate | deep")
      ->capture_default_str();
  measure->add_option("--seed", measure_seed, "Seed")->required();

  // describe
  auto *describe = app.add_subcommand(
      "describe", "Find the shortest unique description of a node");
  NodeId target = 0;
  std::string shape = "flat", strategy = "salient";
  SearchOptions search;
  bool structural = false, nameless = false, with_truth = false;
  describe->add_option("--graph", graph_path, "Graph JSON")->required();
  describe->add_option("--target", target, "Node id")->required();
  describe->add_option("--shape", shape, "flat | intermediate | deep")
      ->capture_default_str();
  describe->add_option("--strategy", strategy, "salient | random")
      ->capture_default_str();
  describe->add_option("--budget", search.ensemble_size,
                       "Candidates per size (0: ceil(3 log2 N))")
      ->capture_default_str();
  describe->add_option("--max-d", search.max_d)->capture_default_str();
  describe->add_option("--decode-budget", search.decode.budget)
      ->capture_default_str();
  describe->add_flag("--structural", structural, "Use no names at all");
  describe->add_flag("--nameless-target", nameless, "Omit the target's name");
  describe->add_flag("--with-truth", with_truth,
                     "Also print the sender-side binding");
  describe->add_option("--seed", search.seed, "Seed")->required();
  describe->add_option("--out", out_path, "Output file (default stdout)");

  // decode
  auto *decode = app.add_subcommand("decode", "Resolve a description");
  std::string description_path;
  DecodeOptions decode_options;
  decode->add_option("--graph", graph_path, "Graph JSON")->required();
  decode->add_option("--description-file", description_path, "Description JSON")
      ->required();
  decode->add_option("--decode-budget", decode_options.budget)
      ->capture_default_str();

  // predict
  auto *predict = app.add_subcommand("predict", "Predict description size");
  std::string mode_name = "flat";
  PredictorInput in;
  predict->add_option("--mode", mode_name,
                      "basic | flat | deep | structural | flat_landmark | "
                      "deep_landmark | random_landmark")
      ->capture_default_str();
  predict->add_option("--n", in.node_count)->capture_default_str();
  predict->add_option("--ax", in.described_ambiguity, "A_x bits")
      ->capture_default_str();
  predict->add_option("--ad", in.descriptor_ambiguity, "A_d bits")
      ->capture_default_str();
  predict->add_option("--f", in.salience_rate, "F bits per arc")
      ->capture_default_str();
  predict->add_option("--b", in.inter_arc_ratio)->capture_default_str();
  predict->add_option("--s", in.ensemble_size)->capture_default_str();
  predict->add_option("--eps", in.failure_prob)->capture_default_str();
  predict->add_option("--k", in.anonymity_k)->capture_default_str();
  predict->add_option("--hg", in.entropy_rate, "H_g bits")->capture_default_str();

  // sweep
  auto *sweep = app.add_subcommand("sweep", "Run a predicted-vs-observed sweep");
  std::string config_path, sweep_kind, sweep_mode, sweep_variable;
  std::vector<double> sweep_values;
  ExperimentConfig exp;
  uint64_t sweep_seed = 0;
  std::optional<size_t> sweep_n, sweep_instances, sweep_nodes, sweep_s,
      sweep_workers;
  std::optional<double> sweep_p, sweep_x, sweep_dd, sweep_frac;
  sweep->add_option("--config", config_path, "TOML experiment config");
  sweep->add_option("--kind", sweep_kind);
  sweep->add_option("--n", sweep_n);
  sweep->add_option("--p", sweep_p);
  sweep->add_option("--described-per-name", sweep_x);
  sweep->add_option("--descriptor-per-name", sweep_dd);
  sweep->add_option("--described-fraction", sweep_frac);
  sweep->add_option("--mode", sweep_mode, "basic | flat | deep | structural");
  sweep->add_option("--sweep-variable", sweep_variable,
                    "salience | described_ambiguity | descriptor_ambiguity");
  sweep->add_option("--values", sweep_values, "Sweep values")->delimiter(',');
  sweep->add_option("--instances", sweep_instances);
  sweep->add_option("--nodes", sweep_nodes, "Nodes per instance");
  sweep->add_option("--ensemble-size", sweep_s);
  sweep->add_option("--workers", sweep_workers);
  sweep->add_option("--out", out_path, "CSV output (default: config or stdout)");
  sweep->add_option("--seed", sweep_seed, "Master seed")->required();

  // audit
  auto *audit = app.add_subcommand("audit", "K-anonymity audit");
  size_t k = 2;
  std::optional<double> audit_f, audit_ad;
  audit->add_option("--graph", graph_path, "Graph JSON")->required();
  audit->add_option("--descriptions-file", description_path,
                    "Description or list of descriptions")
      ->required();
  audit->add_option("--k", k, "K")->required();
  audit->add_option("--f", audit_f, "Salience rate (default: estimated)");
  audit->add_option("--ad", audit_ad, "Descriptor ambiguity (default: estimated)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      gen.kind = ParseGraphKind(gen_kind);
      if (clusters_opt->count()) gen.cluster_count = clusters;
      if (pairs_opt->count()) gen.inter_cluster_pairs = inter_pairs;
      Graph g = GenerateGraph(gen);
      Emit(SerializeGraph(g, nullptr), out_path);
    } else if (*names_cmd) {
      LoadedGraph g = LoadGraphFile(graph_path);
      NameTable table = AssignNames(g.graph, naming);
      Emit(SerializeGraph(g.graph, &table), out_path);
    } else if (*measure) {
      Loaded g = Load(graph_path);
      GraphStats stats = ComputeGraphStats(g.graph);
      json report;
      report["ambiguities"] = {
          {"described", GroupAmbiguity(g.names, NodeGroup::kDescribed)},
          {"descriptor", GroupAmbiguity(g.names, NodeGroup::kDescriptor)}};
      report["entropy_rate"] = stats.entropy_rate;
      report["average_degree"] = stats.average_degree;
      report["arc_density"] = stats.arc_density;
      CandidateOptions co;
      co.shape = ParseShapeClass(measure_shape);
      co.strategy = ParseStrategy(measure_strategy);
      std::vector<Description> descs;
      Rng rng(DeriveSeed(measure_seed, "measure"));
      for (size_t i = 0; i < measure_samples * 20 && descs.size() < measure_samples;
           ++i) {
        NodeId t = static_cast<NodeId>(rng.UniformInt(g.graph.node_count()));
        try {
          descs.push_back(SampleCandidateDescription(
              g.graph, g.names, t, measure_d, co,
              DeriveSeed(measure_seed, "measure", {i})));
        } catch (const Error &e) {
          if (e.code() != ErrorCode::kNoNeighbors &&
              e.code() != ErrorCode::kNotEnoughNodes) {
            throw;
          }
        }
      }
      if (descs.empty()) {
        report["salience_rate"] = nullptr;
      } else {
        SalienceOptions so;
        so.seed = measure_seed;
        Ensemble ens = BuildEnsemble(std::move(descs), g.graph, so);
        report["salience_rate"] = EnsembleSalienceRate(ens).rate;
        if (!receiver_path.empty()) {
          Loaded r = Load(receiver_path);
          report["shared_salience"] =
              SharedSalience(g.graph, r.graph, ens).shared_rate;
        }
      }
      EmitJson(report, "");
    } else if (*describe) {
      Loaded g = Load(graph_path);
      Description d = [&] {
        if (structural) {
          return ConstructStructural(g.graph, target, search.ensemble_size,
                                     search.max_d, search.seed, search.decode);
        }
        search.candidate.shape = ParseShapeClass(shape);
        search.candidate.strategy = ParseStrategy(strategy);
        search.candidate.nameless_target = nameless;
        return FindShortestUnique(g.graph, g.names, target, search);
      }();
      json doc = DescriptionToJson(d, g.graph.labels());
      if (with_truth && d.truth) {
        doc["truth"] = {{"target", d.truth->target},
                        {"descriptors", d.truth->descriptors}};
      }
      EmitJson(doc, out_path);
    } else if (*decode) {
      Loaded g = Load(graph_path);
      std::vector<Description> descs = ReadDescriptions(description_path, g.graph);
      json results = json::array();
      for (const Description &d : descs) {
        ResolutionResult r = Decode(d, g.graph, g.names, decode_options);
        json doc = {{"status", ResolutionStatusName(r.status)},
                    {"candidates", r.candidates},
                    {"work", r.work}};
        if (r.target) doc["target"] = *r.target;
        if (!r.reason.empty()) doc["reason"] = r.reason;
        results.push_back(std::move(doc));
      }
      EmitJson(results.size() == 1 ? results[0] : results, "");
    } else if (*predict) {
      Prediction p = PredictDescriptionSize(ParsePredictionMode(mode_name), in);
      EmitJson(PredictionJson(p), "");
    } else if (*sweep) {
      if (!config_path.empty()) exp = LoadExperimentConfig(config_path);
      if (!sweep_kind.empty()) exp.graph.kind = ParseGraphKind(sweep_kind);
      if (sweep_n) exp.graph.node_count = *sweep_n;
      if (sweep_p) exp.graph.arc_probability = *sweep_p;
      if (sweep_x) exp.naming.described_nodes_per_name = *sweep_x;
      if (sweep_dd) exp.naming.descriptor_nodes_per_name = *sweep_dd;
      if (sweep_frac) exp.naming.described_fraction = *sweep_frac;
      if (!sweep_mode.empty()) exp.mode = ParsePredictionMode(sweep_mode);
      if (!sweep_variable.empty()) {
        exp.sweep_variable = ParseSweepVariable(sweep_variable);
      }
      if (!sweep_values.empty()) exp.sweep_values = sweep_values;
      if (sweep_instances) exp.instances = *sweep_instances;
      if (sweep_nodes) exp.nodes_per_instance = *sweep_nodes;
      if (sweep_s) exp.ensemble_size = *sweep_s;
      if (sweep_workers) exp.workers = *sweep_workers;
      if (!out_path.empty()) exp.output_path = out_path;
      exp.master_seed = sweep_seed;
      std::vector<SweepRow> rows = RunSweep(exp);
      if (exp.output_path.empty() || exp.output_path == "-") {
        std::cout << SweepCsv(rows);
      } else {
        WriteSweepCsv(rows, exp.output_path);
      }
    } else if (*audit) {
      Loaded g = Load(graph_path);
      std::vector<Description> descs = ReadDescriptions(description_path, g.graph);
      AuditOptions ao;
      ao.salience_rate = audit_f;
      ao.descriptor_ambiguity = audit_ad;
      AuditReport r = KAnonymityAudit(descs, g.graph, g.names, k, ao);
      json entries = json::array();
      for (const AuditEntry &e : r.entries) {
        entries.push_back({{"matches", e.matches}, {"flagged", e.flagged}});
      }
      EmitJson({{"k", r.k},
                {"entries", entries},
                {"flagged", r.flagged_count},
                {"mean_size", r.mean_size},
                {"salience_rate", r.salience_rate},
                {"descriptor_ambiguity", r.descriptor_ambiguity},
                {"bound", r.bound ? json(*r.bound) : json(nullptr)},
                {"batch_flagged", r.batch_flagged},
                {"notes", r.notes}},
               "");
    }
  } catch (const Error &e) {
    std::cerr << "refdesc: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
