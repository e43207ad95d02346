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

#include "refdesc/theory.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "fmt/format.h"
#include "refdesc/error.h"

namespace refdesc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void RequireNonNegative(double v, const char *what) {
  if (!(v >= 0.0)) {
    throw Error(ErrorCode::kInvalidInput, fmt::format("{} must be >= 0", what));
  }
}

void Validate(const PredictorInput &in) {
  if (!(in.node_count >= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "node_count must be >= 1");
  }
  RequireNonNegative(in.described_ambiguity, "described_ambiguity");
  RequireNonNegative(in.descriptor_ambiguity, "descriptor_ambiguity");
  RequireNonNegative(in.salience_rate, "salience_rate");
  RequireNonNegative(in.inter_arc_ratio, "inter_arc_ratio");
  RequireNonNegative(in.entropy_rate, "entropy_rate");
  if (!(in.ensemble_size >= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "ensemble_size must be >= 1");
  }
  if (!(in.failure_prob > 0.0 && in.failure_prob < 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "failure_prob must lie in (0, 1)");
  }
  if (!(in.anonymity_k >= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "anonymity_k must be >= 1");
  }
}

// numerator / denominator with the feasibility rules applied.
void Solve(double numerator, double denominator, double n, const char *why,
           Prediction &out) {
  if (!(denominator > 0.0)) {
    out.D = kInf;
    out.feasible = false;
    out.notes.push_back(why);
    return;
  }
  out.D = numerator / denominator;
  if (out.D >= n) {
    out.feasible = false;
    out.notes.push_back(fmt::format(
        "D = {:.4g} is not below N = {:.0f}; reference cannot be communicated",
        out.D, n));
  }
}

}  // namespace

std::string_view PredictionModeName(PredictionMode mode) {
  switch (mode) {
    case PredictionMode::kBasic: return "basic";
    case PredictionMode::kFlat: return "flat";
    case PredictionMode::kDeep: return "deep";
    case PredictionMode::kStructural: return "structural";
    case PredictionMode::kFlatLandmark: return "flat_landmark";
    case PredictionMode::kDeepLandmark: return "deep_landmark";
    case PredictionMode::kRandomLandmark: return "random_landmark";
  }
  return "basic";
}

PredictionMode ParsePredictionMode(std::string_view name) {
  const std::string s = Lower(name);
  for (PredictionMode m :
       {PredictionMode::kBasic, PredictionMode::kFlat, PredictionMode::kDeep,
        PredictionMode::kStructural, PredictionMode::kFlatLandmark,
        PredictionMode::kDeepLandmark, PredictionMode::kRandomLandmark}) {
    if (s == PredictionModeName(m)) return m;
  }
  throw Error(ErrorCode::kParseError,
              "unknown prediction mode '" + std::string(name) + "'");
}

Prediction PredictDescriptionSize(PredictionMode mode,
                                  const PredictorInput &in) {
  Validate(in);
  Prediction out;
  out.mode = mode;
  const double n = in.node_count;
  const double log_n = std::log2(n);
  const double ax = in.described_ambiguity;
  const double ad = in.descriptor_ambiguity;
  const double f = in.salience_rate;
  const double b = in.inter_arc_ratio;

  // Inter-descriptor arcs only help until the descriptors are unambiguous.
  auto effective_b = [&]() {
    if (f <= 0.0) return b;
    const double cap = ad / f;
    if (b > cap) {
      out.notes.push_back(
          fmt::format("b = {:.4g} clamped to A_d/F = {:.4g}", b, cap));
      return cap;
    }
    return b;
  };

  switch (mode) {
    case PredictionMode::kBasic: {
      Solve(ax, f - std::max(0.0, ad - b * f), n,
            "F does not exceed the residual descriptor ambiguity", out);
      out.L = out.D * (b + 1.0);
      break;
    }
    case PredictionMode::kFlat: {
      Solve(ax, f - ad, n, "F <= A_d: flat descriptions cannot be used", out);
      out.L = out.D;
      break;
    }
    case PredictionMode::kDeep: {
      const double be = effective_b();
      Solve(ax, (be + 1.0) * f - ad, n,
            "(b+1)F <= A_d: communication is not possible", out);
      out.L = out.D * (be + 1.0);
      if (out.feasible && f > 0.0) {
        const bool main_text = ad < ax / 2.0;
        const bool appendix = ad < 2.0 * ax;
        const bool depth_ok = ad / f < out.D / 2.0;
        if (main_text && depth_ok) {
          out.notes.push_back(fmt::format(
              "short-deep condition holds; A_x/F = {:.4g}", ax / f));
        }
        if (main_text != appendix && depth_ok) {
          out.notes.push_back(
              "short-deep conditions A_d < A_x/2 and A_d < 2A_x disagree");
        }
      }
      break;
    }
    case PredictionMode::kStructural: {
      Solve(2.0 * log_n, f, n, "F = 0: structure carries no information", out);
      out.L = out.D * (out.D / 2.0 + 1.0);
      break;
    }
    case PredictionMode::kFlatLandmark: {
      Solve(log_n + ax, f - ad, n,
            "F <= A_d: flat descriptions cannot be used", out);
      out.L = out.D;
      break;
    }
    case PredictionMode::kDeepLandmark: {
      const double be = effective_b();
      Solve(log_n + ax, (be + 1.0) * f - ad, n,
            "(b+1)F <= A_d: communication is not possible", out);
      out.L = out.D * (be + 1.0);
      break;
    }
    case PredictionMode::kRandomLandmark: {
      Solve(log_n + ax, in.entropy_rate - ad, n,
            "H_g <= A_d: random statements cannot identify", out);
      out.L = out.D;
      break;
    }
  }
  if (out.feasible && out.D == 0.0) {
    out.notes.push_back("zero size: the target name is already unambiguous");
  }
  if (!out.feasible) out.L = out.D;
  return out;
}

double MinRequiredSalience(double described_ambiguity, double failure_prob,
                           double ensemble_size) {
  RequireNonNegative(described_ambiguity, "described_ambiguity");
  if (!(failure_prob > 0.0 && failure_prob < 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "failure_prob must lie in (0, 1)");
  }
  if (!(ensemble_size >= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "ensemble_size must be >= 1");
  }
  return described_ambiguity - std::log2(failure_prob) / ensemble_size;
}

double UniqueProbability(double delta, double ensemble_size) {
  if (!(ensemble_size >= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "ensemble_size must be >= 1");
  }
  return std::min(1.0, std::exp2(delta * ensemble_size));
}

double KAnonymityMaxSize(double node_count, double k, double salience_rate,
                         double descriptor_ambiguity) {
  if (!(node_count >= 1.0) || !(k >= 1.0) || k > node_count) {
    throw Error(ErrorCode::kInvalidInput, "need 1 <= K <= N");
  }
  RequireNonNegative(descriptor_ambiguity, "descriptor_ambiguity");
  if (!(salience_rate > descriptor_ambiguity)) {
    throw Error(ErrorCode::kInfeasibleBound,
                "F <= A_d: every description hides the target");
  }
  return (std::log2(node_count) - std::log2(k)) /
         (salience_rate - descriptor_ambiguity);
}

SelfDescribingSize SelfDescribingMessageSize(double ambiguity,
                                             double salience_rate,
                                             double node_count) {
  RequireNonNegative(ambiguity, "ambiguity");
  if (!(salience_rate > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "salience_rate must be > 0");
  }
  if (!(node_count >= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "node_count must be >= 1");
  }
  return {2.0 * ambiguity / salience_rate,
          std::log2(node_count) / salience_rate};
}

std::string_view OverheadModeName(OverheadMode mode) {
  switch (mode) {
    case OverheadMode::kUniqueNames: return "unique_names";
    case OverheadMode::kRandomLandmark: return "random_landmark";
    case OverheadMode::kStructural: return "structural";
    case OverheadMode::kSelfDescribing: return "self_describing";
  }
  return "unique_names";
}

OverheadMode ParseOverheadMode(std::string_view name) {
  const std::string s = Lower(name);
  for (OverheadMode m :
       {OverheadMode::kUniqueNames, OverheadMode::kRandomLandmark,
        OverheadMode::kStructural, OverheadMode::kSelfDescribing}) {
    if (s == OverheadModeName(m)) return m;
  }
  throw Error(ErrorCode::kParseError,
              "unknown overhead mode '" + std::string(name) + "'");
}

Overhead OverheadFactor(OverheadMode mode, double node_count,
                        double entropy_rate, double message_nodes) {
  if (!(node_count >= 2.0)) {
    throw Error(ErrorCode::kInvalidInput, "node_count must be >= 2");
  }
  RequireNonNegative(message_nodes, "message_nodes");
  const double log_n = std::log2(node_count);
  const double base = message_nodes * log_n;
  switch (mode) {
    case OverheadMode::kUniqueNames:
      return {base, 1.0};
    case OverheadMode::kRandomLandmark:
      return {2.0 * base, 2.0};
    case OverheadMode::kStructural: {
      if (!(entropy_rate > 0.0)) {
        throw Error(ErrorCode::kInvalidInput, "entropy_rate must be > 0");
      }
      const double factor = 2.0 * log_n / entropy_rate;
      return {base * factor, factor};
    }
    case OverheadMode::kSelfDescribing:
      return {base, 1.0};
  }
  return {base, 1.0};
}

SharedBound SharedDecodeBound(double described_ambiguity, double shared_rate,
                              double node_count) {
  RequireNonNegative(described_ambiguity, "described_ambiguity");
  if (!(shared_rate > 0.0)) {
    throw Error(ErrorCode::kInvalidInput,
                "shared salience must be > 0; no reference can be communicated");
  }
  SharedBound out;
  out.D = described_ambiguity / shared_rate;
  if (node_count > 0.0 && out.D >= node_count) {
    out.feasible = false;
    out.notes.push_back(fmt::format("D = {:.4g} is not below N = {:.0f}",
                                    out.D, node_count));
  }
  return out;
}

}  // namespace refdesc
