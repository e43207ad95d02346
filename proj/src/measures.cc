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

#include <algorithm>
#include <cmath>
#include <map>

#include "refdesc/error.h"
#include "refdesc/rng.h"

namespace refdesc {

double CandidateEntropy(std::span<const NameCandidate> candidates) {
  double h = 0.0;
  for (const NameCandidate &c : candidates) {
    if (c.weight > 0.0) h -= c.weight * std::log2(c.weight);
  }
  return h;
}

double NameAmbiguity(const NameTable &table, std::string_view name) {
  auto index = table.IndexOf(name);
  if (!index) {
    throw Error(ErrorCode::kUnknownName,
                "unknown name '" + std::string(name) + "'");
  }
  return CandidateEntropy(table.candidates(*index));
}

AmbiguityRate ComputeAmbiguityRate(const NameTable &table,
                                   const std::vector<std::string> &names) {
  if (names.empty()) {
    throw Error(ErrorCode::kEmptyInput, "ambiguity rate of no names");
  }
  double sum = 0.0;
  for (const std::string &name : names) sum += NameAmbiguity(table, name);
  AmbiguityRate r;
  r.rate = sum / static_cast<double>(names.size());
  r.interpretations = std::exp2(sum);
  return r;
}

double GroupAmbiguity(const NameTable &table, NodeGroup group) {
  std::vector<double> per_name(table.name_count(), -1.0);
  double sum = 0.0;
  size_t count = 0;
  for (NodeId v = 0; v < table.node_count(); ++v) {
    if (table.GroupOf(v) != group) continue;
    const size_t index = table.NameIndexOf(v);
    if (per_name[index] < 0.0) {
      per_name[index] = CandidateEntropy(table.candidates(index));
    }
    sum += per_name[index];
    ++count;
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

std::string_view SalienceMethodName(SalienceMethod method) {
  return method == SalienceMethod::kAnalytic ? "analytic" : "monte_carlo";
}

namespace {

// Probability of one arc kind under the independent-arc model.
double ArcProbability(LabelId label, double p, size_t labels) {
  if (label == kAbsent) return 1.0 - p;
  return p / static_cast<double>(labels);
}

struct Fraction {
  double value = 1.0;
  double std_error = 0.0;  // bits
  bool floored = false;
};

Fraction Estimate(size_t hits, size_t samples) {
  Fraction f;
  if (samples == 0) return f;
  const double n = static_cast<double>(samples);
  f.value = static_cast<double>(hits) / n;
  if (hits == 0) {
    f.value = 1.0 / (10.0 * n);
    f.floored = true;
  }
  f.std_error =
      std::sqrt(f.value * (1.0 - f.value) / n) / (f.value * std::log(2.0));
  return f;
}

}  // namespace

SalienceEstimate DescriptionSalience(const Description &desc,
                                     const Graph &graph,
                                     const SalienceOptions &options) {
  ValidateDescription(desc);
  if (!desc.truth) {
    throw Error(ErrorCode::kUnboundDescriptor,
                "salience needs bound descriptor slots");
  }
  const GroundTruth &truth = *desc.truth;
  for (NodeId v : truth.descriptors) {
    if (v >= graph.node_count()) {
      throw Error(ErrorCode::kUnboundDescriptor, "descriptor outside graph");
    }
  }
  SalienceEstimate est;
  const GraphMetadata &meta = graph.metadata();
  const bool analytic = !options.force_monte_carlo &&
                        meta.kind == GraphKind::kErdosRenyi &&
                        meta.arc_probability > 0.0;
  if (analytic) {
    est.method = SalienceMethod::kAnalytic;
    const double p = meta.arc_probability;
    const size_t labels = graph.labels().size();
    double bits = 0.0;
    for (const TargetArc &a : desc.target_arcs) {
      bits -= std::log2(ArcProbability(a.label, p, labels));
    }
    for (const InterArc &a : desc.inter_arcs) {
      bits -= std::log2(ArcProbability(a.label, p, labels));
    }
    est.total = bits;
  } else {
    est.method = SalienceMethod::kMonteCarlo;
    est.sample_count = options.samples;
    Rng rng(DeriveSeed(options.seed, "salience"));
    Fraction target_part, inter_part;
    if (!desc.target_arcs.empty()) {
      std::vector<bool> excluded(graph.node_count(), false);
      excluded[truth.target] = true;
      for (NodeId v : truth.descriptors) excluded[v] = true;
      std::vector<NodeId> pool;
      for (NodeId v = 0; v < graph.node_count(); ++v) {
        if (!excluded[v]) pool.push_back(v);
      }
      if (pool.empty()) {
        throw Error(ErrorCode::kNotEnoughNodes, "no node left to sample");
      }
      size_t hits = 0;
      for (size_t i = 0; i < options.samples; ++i) {
        NodeId x = pool[rng.UniformInt(pool.size())];
        bool match = true;
        for (const TargetArc &a : desc.target_arcs) {
          if (!graph.Holds(x, a.label, truth.descriptors[a.slot])) {
            match = false;
            break;
          }
        }
        hits += match;
      }
      target_part = Estimate(hits, options.samples);
    }
    if (!desc.inter_arcs.empty()) {
      if (desc.D() > graph.node_count()) {
        throw Error(ErrorCode::kNotEnoughNodes, "description larger than graph");
      }
      size_t hits = 0;
      for (size_t i = 0; i < options.samples; ++i) {
        std::vector<uint64_t> tuple =
            rng.SampleDistinct(graph.node_count(), desc.D());
        bool match = true;
        for (const InterArc &a : desc.inter_arcs) {
          if (!graph.Holds(static_cast<NodeId>(tuple[a.from]), a.label,
                           static_cast<NodeId>(tuple[a.to]))) {
            match = false;
            break;
          }
        }
        hits += match;
      }
      inter_part = Estimate(hits, options.samples);
    }
    est.total = -std::log2(target_part.value) - std::log2(inter_part.value);
    est.std_error = std::hypot(target_part.std_error, inter_part.std_error);
    est.floored = target_part.floored || inter_part.floored;
  }
  est.probability = std::exp2(-est.total);
  est.rate = desc.L() == 0 ? 0.0 : est.total / static_cast<double>(desc.L());
  return est;
}

Ensemble BuildEnsemble(std::vector<Description> descriptions,
                       const Graph &graph, const SalienceOptions &options) {
  if (descriptions.empty()) {
    throw Error(ErrorCode::kEmptyEnsemble, "ensemble has no descriptions");
  }
  std::map<Shape, ShapeStat> by_shape;
  for (size_t i = 0; i < descriptions.size(); ++i) {
    SalienceOptions o = options;
    o.seed = DeriveSeed(options.seed, "ensemble", {i});
    SalienceEstimate est = DescriptionSalience(descriptions[i], graph, o);
    Shape shape = ShapeOf(descriptions[i]);
    ShapeStat &stat = by_shape[shape];
    stat.shape = std::move(shape);
    ++stat.count;
    stat.prior += est.probability;
  }
  Ensemble ensemble;
  const double total = static_cast<double>(descriptions.size());
  for (auto &[shape, stat] : by_shape) {
    stat.prior /= static_cast<double>(stat.count);
    stat.frequency = static_cast<double>(stat.count) / total;
    ensemble.shapes.push_back(std::move(stat));
  }
  ensemble.descriptions = std::move(descriptions);
  return ensemble;
}

namespace {

double MeanArcs(const Ensemble &ensemble) {
  double arcs = 0.0;
  for (const Description &d : ensemble.descriptions) {
    arcs += static_cast<double>(d.L());
  }
  return arcs / static_cast<double>(ensemble.descriptions.size());
}

}  // namespace

SalienceEstimate EnsembleSalienceRate(const Ensemble &ensemble) {
  if (ensemble.descriptions.empty() || ensemble.shapes.empty()) {
    throw Error(ErrorCode::kEmptyEnsemble, "ensemble has no descriptions");
  }
  SalienceEstimate est;
  for (const ShapeStat &s : ensemble.shapes) {
    if (!(s.prior > 0.0)) {
      throw Error(ErrorCode::kInvalidInput, "shape prior must be positive");
    }
    est.total -= s.frequency * std::log2(s.prior);
  }
  const double arcs = MeanArcs(ensemble);
  est.rate = arcs > 0.0 ? est.total / arcs : 0.0;
  est.probability = std::exp2(-est.total);
  return est;
}

SharedSalienceReport SharedSalience(const Graph &sender, const Graph &receiver,
                                    const Ensemble &ensemble) {
  if (sender.node_count() != receiver.node_count()) {
    throw Error(ErrorCode::kNodeSetMismatch,
                "sender and receiver cover different node sets");
  }
  if (ensemble.descriptions.empty()) {
    throw Error(ErrorCode::kEmptyEnsemble, "ensemble has no descriptions");
  }
  // Per-label agreement rates over all ordered pairs.
  const size_t labels = sender.labels().size();
  std::vector<double> sent(labels, 0.0), kept(labels, 0.0);
  double sender_pairs = 0.0, shared_pairs = 0.0;
  for (NodeId u = 0; u < sender.node_count(); ++u) {
    auto out = sender.Out(u);
    for (size_t i = 0; i < out.size(); ++i) {
      sent[out[i].label] += 1.0;
      if (out[i].label < receiver.labels().size() &&
          receiver.HasArc(u, out[i].label, out[i].node)) {
        kept[out[i].label] += 1.0;
      }
      if (i == 0 || out[i].node != out[i - 1].node) {
        sender_pairs += 1.0;
        if (receiver.HasAnyArc(u, out[i].node)) shared_pairs += 1.0;
      }
    }
  }
  double receiver_pairs = 0.0;
  for (NodeId u = 0; u < receiver.node_count(); ++u) {
    auto out = receiver.Out(u);
    for (size_t i = 0; i < out.size(); ++i) {
      if (i == 0 || out[i].node != out[i - 1].node) receiver_pairs += 1.0;
    }
  }
  const double n = static_cast<double>(sender.node_count());
  const double pairs = n * (n - 1.0);
  const double absent = pairs - sender_pairs;
  const double both_absent = pairs - (sender_pairs + receiver_pairs - shared_pairs);
  auto agreement = [&](LabelId label) {
    if (label == kAbsent) return absent > 0.0 ? both_absent / absent : 1.0;
    return sent[label] > 0.0 ? kept[label] / sent[label] : 1.0;
  };

  std::map<Shape, std::pair<size_t, size_t>> holds;  // shape -> (held, total)
  for (const Description &d : ensemble.descriptions) {
    auto &h = holds[ShapeOf(d)];
    h.first += TruthHolds(d, receiver);
    ++h.second;
  }

  SharedSalienceReport report;
  report.sender_rate = EnsembleSalienceRate(ensemble).rate;
  double total = 0.0;
  for (const ShapeStat &s : ensemble.shapes) {
    AgreementRow row;
    row.shape = s.shape;
    row.q_x = s.frequency;
    row.p_x = s.prior;
    auto it = holds.find(s.shape);
    if (it != holds.end() && it->second.second > 0) {
      row.q_y_given_x = static_cast<double>(it->second.first) /
                        static_cast<double>(it->second.second);
    }
    row.p_y_given_x = 1.0;
    for (const ShapeArc &a : s.shape) row.p_y_given_x *= agreement(a.label);
    const double joint = row.p_x * row.p_y_given_x;
    if (row.q_y_given_x > 0.0 && joint > 0.0) {
      total -= row.q_x * row.q_y_given_x * std::log2(joint);
    }
    report.agreement.push_back(std::move(row));
  }
  const double arcs = MeanArcs(ensemble);
  report.shared_rate = arcs > 0.0 ? total / arcs : 0.0;
  return report;
}

}  // namespace refdesc
