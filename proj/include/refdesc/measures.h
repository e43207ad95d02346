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

// Information measures, all in bits: ambiguity of names, salience of single
// descriptions, the salience rate of an ensemble and its shared analogue
// between two views of a graph.

#ifndef REFDESC_MEASURES_H_
#define REFDESC_MEASURES_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "refdesc/description.h"
#include "refdesc/graph.h"

namespace refdesc {

// -sum w log2 w.
double CandidateEntropy(std::span<const NameCandidate> candidates);

// Throws kUnknownName.
double NameAmbiguity(const NameTable &table, std::string_view name);

struct AmbiguityRate {
  double rate = 0.0;
  // Expected number of joint interpretations of the names, 2^(D rate).
  double interpretations = 1.0;
};

// Throws kEmptyInput or kUnknownName.
AmbiguityRate ComputeAmbiguityRate(const NameTable &table,
                                   const std::vector<std::string> &names);

// Mean ambiguity of the names carried by the nodes of `group`, weighted by
// node. 0 for an empty group.
double GroupAmbiguity(const NameTable &table, NodeGroup group);

enum class SalienceMethod { kAnalytic, kMonteCarlo };

std::string_view SalienceMethodName(SalienceMethod method);

struct SalienceEstimate {
  double rate = 0.0;   // bits per arc
  double total = 0.0;  // bits
  SalienceMethod method = SalienceMethod::kAnalytic;
  size_t sample_count = 0;
  double std_error = 0.0;  // bits
  // Estimated probability of the shape; 2^-total.
  double probability = 1.0;
  // Set when a zero estimate was floored.
  bool floored = false;
};

struct SalienceOptions {
  size_t samples = 10000;
  uint64_t seed = 0;
  // Sample even when the graph carries independent-arc metadata.
  bool force_monte_carlo = false;
};

// The shape probability is the chance that a random node other than the
// target and descriptors has the description's target arcs to the bound
// descriptors, times the chance that a random tuple of distinct nodes has
// its inter-descriptor arcs. Analytic for Erdos-Renyi metadata, sampled
// otherwise. Throws kUnboundDescriptor without a ground truth.
SalienceEstimate DescriptionSalience(const Description &desc,
                                     const Graph &graph,
                                     const SalienceOptions &options = {});

struct ShapeStat {
  Shape shape;
  size_t count = 0;
  double frequency = 0.0;  // q_i
  double prior = 0.0;      // p_i
};

struct Ensemble {
  std::vector<Description> descriptions;
  // Sorted by shape.
  std::vector<ShapeStat> shapes;
};

// Groups descriptions by shape; a shape's prior is the mean estimated
// probability of its descriptions.
Ensemble BuildEnsemble(std::vector<Description> descriptions,
                       const Graph &graph, const SalienceOptions &options = {});

// (1/mean L) sum -q_i log2 p_i. Throws kEmptyEnsemble.
SalienceEstimate EnsembleSalienceRate(const Ensemble &ensemble);

struct AgreementRow {
  Shape shape;
  double q_x = 0.0;          // ensemble frequency
  double q_y_given_x = 0.0;  // share of its descriptions that still hold
  double p_x = 0.0;          // sender prior
  double p_y_given_x = 0.0;  // graph-wide rate at which the receiver agrees
};

struct SharedSalienceReport {
  double shared_rate = 0.0;
  double sender_rate = 0.0;
  std::vector<AgreementRow> agreement;
};

// sum_i -Q(x_i) Q(y_i|x_i) log2 P(x_i) P(y_i|x_i) per arc, where y_i is the
// receiver seeing the same shape. P(y|x) multiplies per-label agreement
// rates counted over all ordered pairs. Throws kNodeSetMismatch,
// kEmptyEnsemble or kUnboundDescriptor.
SharedSalienceReport SharedSalience(const Graph &sender, const Graph &receiver,
                                    const Ensemble &ensemble);

}  // namespace refdesc

#endif  // REFDESC_MEASURES_H_
