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

// Predicted-vs-observed experiments: generate graphs, name them, find the
// shortest unique description of sampled nodes and compare the mean size
// with the matching prediction.

#ifndef REFDESC_SWEEP_H_
#define REFDESC_SWEEP_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "refdesc/generators.h"
#include "refdesc/theory.h"

namespace refdesc {

enum class SweepVariable {
  kSalience,              // values are arc probabilities p
  kDescribedAmbiguity,    // values are described nodes per name
  kDescriptorAmbiguity,   // values are descriptor nodes per name
};

std::string_view SweepVariableName(SweepVariable variable);
SweepVariable ParseSweepVariable(std::string_view name);

struct ExperimentConfig {
  GeneratorConfig graph;
  NamingConfig naming;
  PredictionMode mode = PredictionMode::kFlat;
  SweepVariable sweep_variable = SweepVariable::kSalience;
  std::vector<double> sweep_values;
  size_t instances = 10;
  size_t nodes_per_instance = 100;
  size_t ensemble_size = 0;  // 0: ceil(3 log2 N)
  size_t max_d = 64;
  uint64_t decode_budget = 10'000'000;
  uint64_t master_seed = 0;
  size_t workers = 0;  // 0: hardware concurrency
  std::string output_path;
};

// Throws kConfigError.
void ValidateExperimentConfig(const ExperimentConfig &config);

struct SweepRow {
  std::string graph_kind;
  size_t N = 0;
  double p = 0.0;
  double F_analytic = 0.0;
  double A_x_target = 0.0;
  double A_x_realized = 0.0;
  double A_d_target = 0.0;
  double A_d_realized = 0.0;
  std::string mode;
  double b_mean = 0.0;
  size_t S = 0;
  double predicted_D = 0.0;
  double observed_mean_D = 0.0;
  double observed_std_D = 0.0;
  double observed_mean_L = 0.0;
  size_t nodes_measured = 0;
  size_t failures = 0;
  uint64_t seed = 0;
};

// One row per sweep value, ascending.
std::vector<SweepRow> RunSweep(const ExperimentConfig &config);

std::string SweepCsvHeader();
std::string SweepCsv(const std::vector<SweepRow> &rows);
void WriteSweepCsv(const std::vector<SweepRow> &rows,
                   const std::filesystem::path &path);

}  // namespace refdesc

#endif  // REFDESC_SWEEP_H_
