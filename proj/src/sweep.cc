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

#include "refdesc/sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <thread>

#include "fmt/format.h"
#include "refdesc/error.h"
#include "refdesc/measures.h"
#include "refdesc/rng.h"
#include "refdesc/search.h"

namespace refdesc {

std::string_view SweepVariableName(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::kSalience: return "salience";
    case SweepVariable::kDescribedAmbiguity: return "described_ambiguity";
    case SweepVariable::kDescriptorAmbiguity: return "descriptor_ambiguity";
  }
  return "salience";
}

SweepVariable ParseSweepVariable(std::string_view name) {
  for (SweepVariable v :
       {SweepVariable::kSalience, SweepVariable::kDescribedAmbiguity,
        SweepVariable::kDescriptorAmbiguity}) {
    if (name == SweepVariableName(v)) return v;
  }
  throw Error(ErrorCode::kConfigError,
              "unknown sweep variable '" + std::string(name) + "'");
}

void ValidateExperimentConfig(const ExperimentConfig &config) {
  auto fail = [](const std::string &msg) {
    throw Error(ErrorCode::kConfigError, msg);
  };
  if (config.sweep_values.empty()) fail("sweep_values is empty");
  if (config.instances < 1) fail("instances must be >= 1");
  if (config.nodes_per_instance < 1) fail("nodes_per_instance must be >= 1");
  switch (config.mode) {
    case PredictionMode::kBasic:
    case PredictionMode::kFlat:
    case PredictionMode::kDeep:
    case PredictionMode::kStructural:
      break;
    default:
      fail(fmt::format("mode {} cannot be swept",
                       PredictionModeName(config.mode)));
  }
  for (double v : config.sweep_values) {
    if (config.sweep_variable == SweepVariable::kSalience) {
      if (!(v > 0.0 && v < 1.0)) fail("swept arc probability outside (0, 1)");
    } else if (!(v >= 1.0)) {
      fail("swept nodes per name must be >= 1");
    }
  }
  try {
    GeneratorConfig g = config.graph;
    if (config.sweep_variable == SweepVariable::kSalience) {
      g.arc_probability = config.sweep_values.front();
    }
    ValidateGeneratorConfig(g);
  } catch (const Error &e) {
    fail(e.what());
  }
}

namespace {

struct Instance {
  Graph graph;
  NameTable names;
  std::vector<NodeId> targets;
};

struct Trial {
  bool ok = false;
  double d = 0.0;
  double l = 0.0;
  double b = 0.0;
};

SweepRow RunPoint(const ExperimentConfig &config, double value) {
  GeneratorConfig gen = config.graph;
  NamingConfig naming = config.naming;
  switch (config.sweep_variable) {
    case SweepVariable::kSalience: gen.arc_probability = value; break;
    case SweepVariable::kDescribedAmbiguity:
      naming.described_nodes_per_name = value;
      break;
    case SweepVariable::kDescriptorAmbiguity:
      naming.descriptor_nodes_per_name = value;
      break;
  }
  const bool structural = config.mode == PredictionMode::kStructural;
  const size_t n = gen.node_count;
  const double log_n = std::log2(static_cast<double>(n));

  std::vector<Instance> instances;
  double ax_sum = 0.0, ad_sum = 0.0;
  for (size_t i = 0; i < config.instances; ++i) {
    GeneratorConfig g = gen;
    g.seed = DeriveSeed(config.master_seed, "graph", {i});
    Graph graph = GenerateGraph(g);
    NamingConfig nc = naming;
    nc.seed = DeriveSeed(config.master_seed, "names", {i});
    NameTable named = AssignNames(graph, nc);
    std::vector<NodeId> pool = named.NodesIn(NodeGroup::kDescribed);
    if (pool.size() < config.nodes_per_instance) {
      throw Error(ErrorCode::kConfigError,
                  fmt::format("{} described nodes, {} requested per instance",
                              pool.size(), config.nodes_per_instance));
    }
    Rng rng(DeriveSeed(config.master_seed, "targets", {i}));
    std::vector<NodeId> targets;
    for (uint64_t k : rng.SampleDistinct(pool.size(), config.nodes_per_instance)) {
      targets.push_back(pool[k]);
    }
    if (structural) {
      ax_sum += log_n;
      ad_sum += log_n;
      instances.push_back({std::move(graph), NameTable::Nameless(n),
                           std::move(targets)});
    } else {
      ax_sum += GroupAmbiguity(named, NodeGroup::kDescribed);
      ad_sum += GroupAmbiguity(named, NodeGroup::kDescriptor);
      instances.push_back({std::move(graph), std::move(named),
                           std::move(targets)});
    }
  }

  SearchOptions search;
  search.ensemble_size = config.ensemble_size;
  search.max_d = config.max_d;
  search.decode.budget = config.decode_budget;
  search.candidate.strategy = Strategy::kSalient;
  if (config.mode == PredictionMode::kDeep || structural) {
    search.candidate.shape = ShapeClass::kDeep;
  }
  if (structural) {
    search.candidate.nameless_target = true;
    search.candidate.variable_slots = true;
  }

  const size_t per = config.nodes_per_instance;
  const size_t total = config.instances * per;
  std::vector<Trial> trials(total);
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t t = next++; t < total; t = next++) {
      const Instance &inst = instances[t / per];
      const NodeId target = inst.targets[t % per];
      SearchOptions opts = search;
      opts.seed = DeriveSeed(config.master_seed, "trial", {t / per, target});
      try {
        Description desc = FindShortestUnique(inst.graph, inst.names, target, opts);
        trials[t] = {true, static_cast<double>(desc.D()),
                     static_cast<double>(desc.L()), desc.b};
      } catch (const Error &e) {
        if (e.code() != ErrorCode::kNoUniqueDescription &&
            e.code() != ErrorCode::kBudgetExceeded) {
          throw;
        }
        trials[t] = {};
      }
    }
  };
  size_t workers = config.workers > 0 ? config.workers
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, total);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        try {
          work();
        } catch (...) {
          errors[w] = std::current_exception();
          next = total;
        }
      });
    }
    for (auto &t : pool) t.join();
    for (auto &e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SweepRow row;
  row.graph_kind = GraphKindName(gen.kind);
  row.N = n;
  row.p = gen.arc_probability;
  row.F_analytic = std::max(-std::log2(gen.arc_probability),
                            -std::log2(1.0 - gen.arc_probability));
  const double inst_count = static_cast<double>(config.instances);
  if (structural) {
    row.A_x_target = row.A_d_target = log_n;
  } else {
    row.A_x_target = std::log2(naming.described_nodes_per_name);
    row.A_d_target = std::log2(naming.descriptor_nodes_per_name);
  }
  row.A_x_realized = ax_sum / inst_count;
  row.A_d_realized = ad_sum / inst_count;
  row.mode = PredictionModeName(config.mode);
  row.S = config.ensemble_size > 0 ? config.ensemble_size : DefaultEnsembleSize(n);
  row.seed = config.master_seed;

  double d_sum = 0.0, l_sum = 0.0, b_sum = 0.0;
  for (const Trial &t : trials) {
    if (!t.ok) {
      ++row.failures;
      continue;
    }
    ++row.nodes_measured;
    d_sum += t.d;
    l_sum += t.l;
    b_sum += t.b;
  }
  if (row.nodes_measured > 0) {
    const double m = static_cast<double>(row.nodes_measured);
    row.observed_mean_D = d_sum / m;
    row.observed_mean_L = l_sum / m;
    row.b_mean = b_sum / m;
    if (row.nodes_measured > 1) {
      double ss = 0.0;
      for (const Trial &t : trials) {
        if (t.ok) ss += (t.d - row.observed_mean_D) * (t.d - row.observed_mean_D);
      }
      row.observed_std_D = std::sqrt(ss / (m - 1.0));
    }
  }

  PredictorInput in;
  in.node_count = static_cast<double>(n);
  in.described_ambiguity = row.A_x_realized;
  in.descriptor_ambiguity = row.A_d_realized;
  in.salience_rate = row.F_analytic;
  in.inter_arc_ratio = config.mode == PredictionMode::kDeep ? row.b_mean : 0.0;
  in.ensemble_size = static_cast<double>(row.S);
  Prediction pred = PredictDescriptionSize(config.mode, in);
  row.predicted_D = pred.D;
  return row;
}

}  // namespace

std::vector<SweepRow> RunSweep(const ExperimentConfig &config) {
  ValidateExperimentConfig(config);
  std::vector<double> values = config.sweep_values;
  std::sort(values.begin(), values.end());
  std::vector<SweepRow> rows;
  for (double v : values) rows.push_back(RunPoint(config, v));
  return rows;
}

std::string SweepCsvHeader() {
  return "graph_kind,N,p,F_analytic,A_x_target,A_x_realized,A_d_target,"
         "A_d_realized,mode,b_mean,S,predicted_D,observed_mean_D,"
         "observed_std_D,observed_mean_L,nodes_measured,failures,seed";
}

std::string SweepCsv(const std::vector<SweepRow> &rows) {
  std::string out = SweepCsvHeader() + "\n";
  for (const SweepRow &r : rows) {
    out += fmt::format(
        "{},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{},{:.6f},{},{:.6f},"
        "{:.6f},{:.6f},{:.6f},{},{},{}\n",
        r.graph_kind, r.N, r.p, r.F_analytic, r.A_x_target, r.A_x_realized,
        r.A_d_target, r.A_d_realized, r.mode, r.b_mean, r.S, r.predicted_D,
        r.observed_mean_D, r.observed_std_D, r.observed_mean_L,
        r.nodes_measured, r.failures, r.seed);
  }
  return out;
}

void WriteSweepCsv(const std::vector<SweepRow> &rows,
                   const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kConfigError, "cannot write " + path.string());
  }
  out << SweepCsv(rows);
  if (!out) {
    throw Error(ErrorCode::kConfigError, "failed writing " + path.string());
  }
}

}  // namespace refdesc
