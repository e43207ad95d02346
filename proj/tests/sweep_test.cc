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

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace refdesc {
namespace {

ExperimentConfig Small() {
  ExperimentConfig c;
  c.graph.node_count = 200;
  c.naming.described_nodes_per_name = 10;
  c.sweep_values = {0.1};
  c.instances = 2;
  c.nodes_per_instance = 10;
  c.master_seed = 3;
  c.workers = 1;
  return c;
}

TEST(SweepTest, SinglePointAccounting) {
  ExperimentConfig c = Small();
  c.instances = 1;
  c.nodes_per_instance = 1;
  std::vector<SweepRow> rows = RunSweep(c);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].nodes_measured + rows[0].failures, 1u);
  EXPECT_EQ(rows[0].graph_kind, "erdos_renyi");
  EXPECT_EQ(rows[0].N, 200u);
  EXPECT_EQ(rows[0].S, 23u);
}

TEST(SweepTest, RowFields) {
  ExperimentConfig c = Small();
  c.sweep_values = {0.2, 0.05};
  std::vector<SweepRow> rows = RunSweep(c);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_DOUBLE_EQ(rows[0].p, 0.05);
  EXPECT_DOUBLE_EQ(rows[1].p, 0.2);
  for (const SweepRow &r : rows) {
    EXPECT_EQ(r.mode, "flat");
    EXPECT_NEAR(r.F_analytic, -std::log2(r.p), 1e-12);
    EXPECT_NEAR(r.A_x_target, std::log2(10.0), 1e-12);
    EXPECT_NEAR(r.A_x_realized, std::log2(10.0), 1e-9);
    EXPECT_NEAR(r.predicted_D, std::log2(10.0) / r.F_analytic, 1e-9);
    EXPECT_EQ(r.nodes_measured + r.failures, 20u);
    EXPECT_GE(r.observed_mean_D, 1.0);
    EXPECT_DOUBLE_EQ(r.observed_mean_L, r.observed_mean_D);
  }
}

TEST(SweepTest, IndependentOfWorkerCount) {
  ExperimentConfig c = Small();
  c.sweep_values = {0.1, 0.3};
  c.mode = PredictionMode::kDeep;
  c.naming.descriptor_nodes_per_name = 4;
  std::string one = SweepCsv(RunSweep(c));
  c.workers = 4;
  EXPECT_EQ(SweepCsv(RunSweep(c)), one);
  c.master_seed = 4;
  EXPECT_NE(SweepCsv(RunSweep(c)), one);
}

TEST(SweepTest, AmbiguitySweep) {
  ExperimentConfig c = Small();
  c.sweep_variable = SweepVariable::kDescriptorAmbiguity;
  c.sweep_values = {1, 4};
  std::vector<SweepRow> rows = RunSweep(c);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(rows[0].A_d_realized, 0.0, 1e-12);
  EXPECT_NEAR(rows[1].A_d_realized, 2.0, 1e-9);
  EXPECT_GT(rows[1].predicted_D, rows[0].predicted_D);
}

TEST(SweepTest, CsvLayout) {
  SweepRow r;
  r.graph_kind = "erdos_renyi";
  r.N = 1000;
  r.p = 0.01;
  r.mode = "flat";
  r.S = 30;
  r.predicted_D = 1.0;
  r.nodes_measured = 100;
  r.seed = 42;
  std::string csv = SweepCsv({r});
  EXPECT_EQ(csv,
            "graph_kind,N,p,F_analytic,A_x_target,A_x_realized,A_d_target,"
            "A_d_realized,mode,b_mean,S,predicted_D,observed_mean_D,"
            "observed_std_D,observed_mean_L,nodes_measured,failures,seed\n"
            "erdos_renyi,1000,0.010000,0.000000,0.000000,0.000000,0.000000,"
            "0.000000,flat,0.000000,30,1.000000,0.000000,0.000000,0.000000,"
            "100,0,42\n");
}

TEST(SweepTest, InvalidConfigs) {
  ExperimentConfig c = Small();
  c.sweep_values.clear();
  EXPECT_EQ(CodeOf([&] { RunSweep(c); }), ErrorCode::kConfigError);
  c = Small();
  c.mode = PredictionMode::kFlatLandmark;
  EXPECT_EQ(CodeOf([&] { ValidateExperimentConfig(c); }), ErrorCode::kConfigError);
  c = Small();
  c.sweep_values = {1.5};
  EXPECT_EQ(CodeOf([&] { ValidateExperimentConfig(c); }), ErrorCode::kConfigError);
  c = Small();
  c.nodes_per_instance = 500;
  EXPECT_EQ(CodeOf([&] { RunSweep(c); }), ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf([] { ParseSweepVariable("temperature"); }),
            ErrorCode::kConfigError);
}

}  // namespace
}  // namespace refdesc
