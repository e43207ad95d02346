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

#include "refdesc/measures.h"

#include <cmath>

#include "gtest/gtest.h"
#include "refdesc/generators.h"
#include "refdesc/rng.h"
#include "refdesc/search.h"
#include "test_util.h"

namespace refdesc {
namespace {

constexpr double kLog2Of100 = 6.643856189774724;

NameTable MixedTable() {
  std::map<std::string, std::vector<NameCandidate>> e;
  e["a"] = {{0, 1.0}};
  e["b"] = {{1, 0.5}, {2, 0.25}, {3, 0.25}};
  std::vector<NameCandidate> hundred;
  for (NodeId v = 4; v < 104; ++v) hundred.push_back({v, 0.01});
  e["c"] = hundred;
  for (int i = 0; i < 3; ++i) {
    std::vector<NameCandidate> four;
    for (NodeId v = 0; v < 4; ++v) {
      four.push_back({static_cast<NodeId>(104 + 4 * i + v), 0.25});
    }
    e["q" + std::to_string(i)] = four;
  }
  return NameTable::Build(116, e);
}

TEST(AmbiguityTest, PerName) {
  NameTable t = MixedTable();
  EXPECT_NEAR(NameAmbiguity(t, "a"), 0.0, 1e-9);
  EXPECT_NEAR(NameAmbiguity(t, "b"), 1.5, 1e-9);
  EXPECT_NEAR(NameAmbiguity(t, "c"), kLog2Of100, 1e-9);
  EXPECT_EQ(CodeOf([&] { NameAmbiguity(t, "nope"); }), ErrorCode::kUnknownName);
}

TEST(AmbiguityTest, Rate) {
  NameTable t = MixedTable();
  AmbiguityRate r = ComputeAmbiguityRate(t, {"q0", "q1", "q2"});
  EXPECT_NEAR(r.rate, 2.0, 1e-9);
  EXPECT_NEAR(r.interpretations, 64.0, 1e-9);
  EXPECT_EQ(CodeOf([&] { ComputeAmbiguityRate(t, {}); }),
            ErrorCode::kEmptyInput);
}

TEST(AmbiguityTest, UniformMaximizesEntropy) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t n = 2 + rng.UniformInt(30);
    std::vector<NameCandidate> c(n);
    double sum = 0.0;
    for (auto &x : c) sum += x.weight = 0.01 + rng.Uniform();
    for (auto &x : c) x.weight /= sum;
    EXPECT_LT(CandidateEntropy(c), std::log2(static_cast<double>(n)) + 1e-12);
    for (auto &x : c) x.weight = 1.0 / static_cast<double>(n);
    EXPECT_NEAR(CandidateEntropy(c), std::log2(static_cast<double>(n)), 1e-9);
  }
}

Graph WithErMetadata(Graph g, double p) {
  GraphMetadata m;
  m.kind = GraphKind::kErdosRenyi;
  m.arc_probability = p;
  return Graph::Build(g.node_count(), g.labels(), g.Arcs(), m);
}

Description Flat(std::vector<LabelId> labels) {
  Description d;
  d.target_name = "n0";
  std::vector<NodeId> descriptors;
  for (size_t i = 0; i < labels.size(); ++i) {
    d.slots.push_back({"n" + std::to_string(i + 1)});
    d.target_arcs.push_back({labels[i], static_cast<uint32_t>(i)});
    descriptors.push_back(static_cast<NodeId>(i + 1));
  }
  d.truth = GroundTruth{0, descriptors};
  return d;
}

TEST(SalienceTest, AnalyticPresentArc) {
  Graph g = WithErMetadata(FromPairs(10, {{0, 1}}), 0.01);
  SalienceEstimate e = DescriptionSalience(Flat({0}), g);
  EXPECT_EQ(e.method, SalienceMethod::kAnalytic);
  EXPECT_NEAR(e.total, kLog2Of100, 1e-9);
  EXPECT_NEAR(e.rate, kLog2Of100, 1e-9);
  EXPECT_NEAR(e.probability, 0.01, 1e-12);
}

TEST(SalienceTest, AnalyticAbsentArc) {
  Graph g = WithErMetadata(FromPairs(10, {}), 0.5);
  EXPECT_NEAR(DescriptionSalience(Flat({kAbsent}), g).rate, 1.0, 1e-9);
}

TEST(SalienceTest, AnalyticThreeArcs) {
  Graph g = WithErMetadata(FromPairs(10, {{0, 1}, {0, 2}, {0, 3}}), 0.1);
  SalienceEstimate e = DescriptionSalience(Flat({0, 0, 0}), g);
  EXPECT_NEAR(e.total, 9.965784284662087, 1e-9);
  EXPECT_NEAR(e.rate, 9.965784284662087 / 3, 1e-9);
}

TEST(SalienceTest, MonteCarloAgreesWithAnalytic) {
  Graph g = ErdosRenyi(3000, 0.1, 5);
  NameTable names = NameTable::Unique(g.node_count());
  Rng rng(2);
  for (size_t d : {1, 2}) {
    CandidateOptions o;
    Description desc = SampleCandidateDescription(g, names, 17, d, o, 3);
    SalienceEstimate analytic = DescriptionSalience(desc, g);
    SalienceOptions mc;
    mc.force_monte_carlo = true;
    mc.samples = 20000;
    mc.seed = 9;
    SalienceEstimate sampled = DescriptionSalience(desc, g, mc);
    EXPECT_EQ(sampled.method, SalienceMethod::kMonteCarlo);
    EXPECT_NEAR(sampled.rate, analytic.rate, 0.05 * analytic.rate) << d;
    EXPECT_GT(sampled.std_error, 0.0);
    EXPECT_LT(sampled.std_error, 0.2);
  }
}

TEST(SalienceTest, MonteCarloStandardErrorShrinks) {
  Graph g = ErdosRenyi(2000, 0.1, 6);
  NameTable names = NameTable::Unique(g.node_count());
  Description desc =
      SampleCandidateDescription(g, names, 3, 1, CandidateOptions{}, 1);
  double previous = 1e9;
  for (size_t samples : {1000, 4000, 16000}) {
    SalienceOptions mc;
    mc.force_monte_carlo = true;
    mc.samples = samples;
    SalienceEstimate e = DescriptionSalience(desc, g, mc);
    EXPECT_LT(e.std_error, previous);
    previous = e.std_error;
  }
}

TEST(SalienceTest, FlooredWhenNothingMatches) {
  // Only node 0 points at 1; all other nodes fail the shape.
  Graph g = FromPairs(50, {{0, 1}});
  SalienceOptions mc;
  mc.samples = 100;
  SalienceEstimate e = DescriptionSalience(Flat({0}), g, mc);
  EXPECT_TRUE(e.floored);
  EXPECT_NEAR(e.total, std::log2(1000.0), 1e-9);
}

TEST(SalienceTest, NeedsTruth) {
  Graph g = FromPairs(3, {{0, 1}});
  Description d = Flat({0});
  d.truth.reset();
  EXPECT_EQ(CodeOf([&] { DescriptionSalience(d, g); }),
            ErrorCode::kUnboundDescriptor);
}

TEST(EnsembleTest, SingleShape) {
  Graph g = ErdosRenyi(1000, 0.01, 3);
  NameTable names = NameTable::Unique(g.node_count());
  std::vector<Description> ds;
  for (NodeId t = 0; t < 50; ++t) {
    if (g.Out(t).empty()) continue;
    ds.push_back(SampleCandidateDescription(g, names, t, 1, {}, t));
  }
  Ensemble e = BuildEnsemble(ds, g);
  ASSERT_EQ(e.shapes.size(), 1u);
  EXPECT_NEAR(EnsembleSalienceRate(e).rate, kLog2Of100, 1e-9);
}

TEST(EnsembleTest, RandomDescriptionsApproachEntropyRate) {
  Graph g = ErdosRenyi(1000, 0.1, 4);
  NameTable names = NameTable::Unique(g.node_count());
  CandidateOptions o;
  o.strategy = Strategy::kRandom;
  std::vector<Description> ds;
  for (NodeId t = 0; t < 1000; ++t) {
    ds.push_back(SampleCandidateDescription(g, names, t, 10, o, t));
  }
  const double h = ComputeGraphStats(g).entropy_rate;
  EXPECT_NEAR(EnsembleSalienceRate(BuildEnsemble(ds, g)).rate, h, 0.1 * h);
}

TEST(EnsembleTest, Arithmetic) {
  Ensemble e;
  e.descriptions = {Flat({0}), Flat({kAbsent})};
  e.shapes = {{ShapeOf(e.descriptions[0]), 1, 0.5, 1.0 / 16},
              {ShapeOf(e.descriptions[1]), 1, 0.5, 1.0 / 64}};
  EXPECT_NEAR(EnsembleSalienceRate(e).rate, 5.0, 1e-12);
  EXPECT_EQ(CodeOf([] { EnsembleSalienceRate(Ensemble{}); }),
            ErrorCode::kEmptyEnsemble);
  Graph g = FromPairs(3, {});
  EXPECT_EQ(CodeOf([&] { BuildEnsemble({}, g); }), ErrorCode::kEmptyEnsemble);
}

class SharedSalienceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    sender_ = ErdosRenyi(1000, 0.01, 11);
    NameTable names = NameTable::Unique(1000);
    std::vector<Description> ds;
    for (NodeId t = 0; t < 300; ++t) {
      if (g().Out(t).size() < 2) continue;
      ds.push_back(SampleCandidateDescription(g(), names, t, 2, {}, t));
    }
    ensemble_ = BuildEnsemble(ds, g());
  }
  const Graph &g() const { return *sender_; }

  std::optional<Graph> sender_;
  Ensemble ensemble_;
};

TEST_F(SharedSalienceTest, IdenticalViews) {
  SharedSalienceReport r = SharedSalience(g(), g(), ensemble_);
  EXPECT_NEAR(r.shared_rate, r.sender_rate, 1e-9);
  EXPECT_NEAR(r.sender_rate, kLog2Of100, 1e-9);
}

TEST_F(SharedSalienceTest, IndependentViews) {
  Graph other = ErdosRenyi(1000, 0.01, 12);
  SharedSalienceReport r = SharedSalience(g(), other, ensemble_);
  EXPECT_GE(r.shared_rate, 0.0);
  EXPECT_LT(r.shared_rate, 0.2);
}

TEST_F(SharedSalienceTest, DecreasesWithDivergence) {
  double previous = SharedSalience(g(), g(), ensemble_).shared_rate;
  for (double flip : {0.001, 0.01, 0.1}) {
    Graph receiver = FlipArcs(g(), flip, 5);
    double rate = SharedSalience(g(), receiver, ensemble_).shared_rate;
    EXPECT_LT(rate, previous) << flip;
    EXPECT_GT(rate, 0.0) << flip;
    previous = rate;
  }
}

TEST_F(SharedSalienceTest, NodeSetMismatch) {
  Graph small = ErdosRenyi(10, 0.1, 1);
  EXPECT_EQ(CodeOf([&] { SharedSalience(g(), small, ensemble_); }),
            ErrorCode::kNodeSetMismatch);
}

}  // namespace
}  // namespace refdesc
