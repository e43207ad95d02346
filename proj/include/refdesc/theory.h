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

// Closed-form predictions of description size. All quantities in bits
// except N, S and K. Infeasible inputs yield a Prediction with
// feasible = false and an explanatory note, never an exception.

#ifndef REFDESC_THEORY_H_
#define REFDESC_THEORY_H_

#include <string>
#include <string_view>
#include <vector>

namespace refdesc {

enum class PredictionMode {
  kBasic,
  kFlat,
  kDeep,
  kStructural,
  kFlatLandmark,
  kDeepLandmark,
  kRandomLandmark,
};

std::string_view PredictionModeName(PredictionMode mode);
// Accepts the names above in lower or upper case. Throws kParseError.
PredictionMode ParsePredictionMode(std::string_view name);

struct PredictorInput {
  double node_count = 1000;           // N
  double described_ambiguity = 0.0;   // A_x
  double descriptor_ambiguity = 0.0;  // A_d
  double salience_rate = 1.0;         // F, bits per arc
  double inter_arc_ratio = 0.0;       // b
  double ensemble_size = 1;           // S
  double failure_prob = 0.01;         // epsilon
  double anonymity_k = 2;             // K
  double entropy_rate = 0.0;          // H_g
};

struct Prediction {
  double D = 0.0;
  double L = 0.0;
  PredictionMode mode = PredictionMode::kBasic;
  bool feasible = true;
  std::vector<std::string> notes;
};

// Throws kInvalidInput for negative quantities, N < 1, S < 1 or epsilon
// outside (0, 1).
Prediction PredictDescriptionSize(PredictionMode mode,
                                  const PredictorInput &input);

// Smallest per-description salience giving failure probability epsilon
// with S candidates: A_x - log2(epsilon) / S.
double MinRequiredSalience(double described_ambiguity, double failure_prob,
                           double ensemble_size);

// min(1, 2^(delta S)), delta = D - A_x / F.
double UniqueProbability(double delta, double ensemble_size);

// Largest description that keeps a target among K look-alikes:
// (log2 N - log2 K) / (F - A_d). Throws kInfeasibleBound when F <= A_d.
double KAnonymityMaxSize(double node_count, double k, double salience_rate,
                         double descriptor_ambiguity);

struct SelfDescribingSize {
  double min_d = 0.0;   // 2A / F
  double safe_d = 0.0;  // log2 N / F
};

SelfDescribingSize SelfDescribingMessageSize(double ambiguity,
                                             double salience_rate,
                                             double node_count);

enum class OverheadMode {
  kUniqueNames,
  kRandomLandmark,
  kStructural,
  kSelfDescribing,
};

std::string_view OverheadModeName(OverheadMode mode);
OverheadMode ParseOverheadMode(std::string_view name);

struct Overhead {
  double bits = 0.0;
  double factor = 1.0;  // relative to W log2 N
};

// Cost of referring to W nodes of an N-node graph.
Overhead OverheadFactor(OverheadMode mode, double node_count,
                        double entropy_rate, double message_nodes);

struct SharedBound {
  double D = 0.0;
  bool feasible = true;
  std::vector<std::string> notes;
};

// A_x / M. Throws kInvalidInput for M <= 0. When node_count > 0, a bound of
// N nodes or more is marked infeasible.
SharedBound SharedDecodeBound(double described_ambiguity, double shared_rate,
                              double node_count = 0);

}  // namespace refdesc

#endif  // REFDESC_THEORY_H_
