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

#include "refdesc/config.h"

#include <charconv>
#include <fstream>

#include "CLI11.hpp"
#include "refdesc/error.h"

namespace refdesc {
namespace {

const std::string &Single(const std::string &key,
                          const std::vector<std::string> &values) {
  if (values.size() != 1) {
    throw Error(ErrorCode::kConfigError, key + " expects a single value");
  }
  return values[0];
}

double ToDouble(const std::string &key, const std::string &text) {
  double v = 0.0;
  if (!CLI::detail::lexical_cast(text, v)) {
    throw Error(ErrorCode::kConfigError, key + ": '" + text + "' is not a number");
  }
  return v;
}

uint64_t ToUnsigned(const std::string &key, const std::string &text) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kConfigError,
                key + ": '" + text + "' is not a non-negative integer");
  }
  return v;
}

}  // namespace

void ApplyConfigValue(ExperimentConfig &config, const std::string &key,
                      const std::vector<std::string> &values) {
  auto num = [&] { return ToDouble(key, Single(key, values)); };
  auto uint = [&] { return ToUnsigned(key, Single(key, values)); };
  auto str = [&] { return Single(key, values); };
  try {
    if (key == "graph.kind") {
      config.graph.kind = ParseGraphKind(str());
    } else if (key == "graph.node_count") {
      config.graph.node_count = uint();
    } else if (key == "graph.arc_probability") {
      config.graph.arc_probability = num();
    } else if (key == "graph.label_count") {
      config.graph.label_count = uint();
    } else if (key == "graph.cluster_count") {
      config.graph.cluster_count = uint();
    } else if (key == "graph.inter_cluster_pairs") {
      config.graph.inter_cluster_pairs = uint();
    } else if (key == "naming.described_nodes_per_name") {
      config.naming.described_nodes_per_name = num();
    } else if (key == "naming.descriptor_nodes_per_name") {
      config.naming.descriptor_nodes_per_name = num();
    } else if (key == "naming.described_fraction") {
      config.naming.described_fraction = num();
    } else if (key == "experiment.mode") {
      config.mode = ParsePredictionMode(str());
    } else if (key == "experiment.sweep_variable") {
      config.sweep_variable = ParseSweepVariable(str());
    } else if (key == "experiment.sweep_values") {
      config.sweep_values.clear();
      for (const std::string &v : values) {
        config.sweep_values.push_back(ToDouble(key, v));
      }
    } else if (key == "experiment.instances") {
      config.instances = uint();
    } else if (key == "experiment.nodes_per_instance") {
      config.nodes_per_instance = uint();
    } else if (key == "experiment.ensemble_size") {
      config.ensemble_size = uint();
    } else if (key == "experiment.max_d") {
      config.max_d = uint();
    } else if (key == "experiment.decode_budget") {
      config.decode_budget = uint();
    } else if (key == "experiment.master_seed") {
      config.master_seed = uint();
    } else if (key == "experiment.workers") {
      config.workers = uint();
    } else if (key == "experiment.output_path") {
      config.output_path = str();
    } else {
      throw Error(ErrorCode::kConfigError, "unknown config key '" + key + "'");
    }
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kConfigError) throw;
    throw Error(ErrorCode::kConfigError, key + ": " + e.what());
  }
}

ExperimentConfig ParseExperimentConfig(std::istream &in) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const CLI::Error &e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  ExperimentConfig config;
  for (const CLI::ConfigItem &item : items) {
    // Section headers come through as "++"/"--" markers.
    if (item.name == "++" || item.name == "--") continue;
    ApplyConfigValue(config, item.fullname(), item.inputs);
  }
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfigError, "cannot open " + path.string());
  return ParseExperimentConfig(in);
}

}  // namespace refdesc
