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

// Experiment config files: TOML with [graph], [naming] and [experiment]
// sections of flat key = value pairs, e.g.
//
//   [graph]
//   kind = "erdos_renyi"
//   node_count = 1000
//
//   [naming]
//   described_nodes_per_name = 100
//
//   [experiment]
//   mode = "flat"
//   sweep_variable = "salience"
//   sweep_values = [0.5, 0.2, 0.1]
//   master_seed = 7

#ifndef REFDESC_CONFIG_H_
#define REFDESC_CONFIG_H_

#include <filesystem>
#include <istream>
#include <string>

#include "refdesc/sweep.h"

namespace refdesc {

// Applies `key` (qualified as "section.name") to `config`. Throws
// kConfigError for unknown keys or malformed values.
void ApplyConfigValue(ExperimentConfig &config, const std::string &key,
                      const std::vector<std::string> &values);

// Throws kConfigError.
ExperimentConfig ParseExperimentConfig(std::istream &in);
ExperimentConfig LoadExperimentConfig(const std::filesystem::path &path);

}  // namespace refdesc

#endif  // REFDESC_CONFIG_H_
