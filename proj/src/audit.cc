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

#include "refdesc/audit.h"

#include <cmath>

#include "fmt/format.h"
#include "refdesc/error.h"
#include "refdesc/measures.h"
#include "refdesc/theory.h"

namespace refdesc {

AuditReport KAnonymityAudit(const std::vector<Description> &descriptions,
                            const Graph &graph, const NameTable &names,
                            size_t k, const AuditOptions &options) {
  if (k < 1 || k > graph.node_count()) {
    throw Error(ErrorCode::kInvalidInput, "need 1 <= K <= N");
  }
  AuditReport report;
  report.k = k;
  if (descriptions.empty()) return report;
  DecodeOptions decode = options.decode;
  decode.candidate_cap = 0;
  double size_sum = 0.0;
  for (const Description &desc : descriptions) {
    ResolutionResult r = Decode(desc, graph, names, decode);
    AuditEntry entry;
    entry.matches = r.candidates.size();
    entry.flagged = entry.matches < k;
    report.flagged_count += entry.flagged;
    report.entries.push_back(entry);
    size_sum += static_cast<double>(desc.D());
  }
  report.mean_size = size_sum / static_cast<double>(descriptions.size());

  if (options.salience_rate) {
    report.salience_rate = *options.salience_rate;
  } else {
    bool bound_truth = true;
    for (const Description &d : descriptions) bound_truth &= d.truth.has_value();
    if (bound_truth) {
      SalienceOptions so;
      so.seed = options.seed;
      report.salience_rate =
          EnsembleSalienceRate(BuildEnsemble(descriptions, graph, so)).rate;
    } else {
      report.notes.push_back("no ground truth; salience rate taken as 0");
    }
  }
  if (options.descriptor_ambiguity) {
    report.descriptor_ambiguity = *options.descriptor_ambiguity;
  } else {
    double sum = 0.0;
    size_t slots = 0;
    const double log_n = std::log2(static_cast<double>(graph.node_count()));
    for (const Description &d : descriptions) {
      for (const Slot &s : d.slots) {
        if (s.variable()) {
          sum += log_n;
        } else {
          auto cands = names.Lookup(*s.name);
          sum += cands.empty() ? log_n : CandidateEntropy(cands);
        }
        ++slots;
      }
    }
    report.descriptor_ambiguity = slots ? sum / static_cast<double>(slots) : 0.0;
  }
  if (report.salience_rate > report.descriptor_ambiguity) {
    report.bound = KAnonymityMaxSize(static_cast<double>(graph.node_count()),
                                     static_cast<double>(k),
                                     report.salience_rate,
                                     report.descriptor_ambiguity);
    report.batch_flagged = report.mean_size >= *report.bound && report.mean_size > 0;
    if (report.batch_flagged) {
      report.notes.push_back(fmt::format(
          "mean size {:.3f} reaches the bound {:.3f}; some targets are likely "
          "identified",
          report.mean_size, *report.bound));
    }
  } else {
    report.notes.push_back("F <= A_d: no size bound applies");
  }
  return report;
}

}  // namespace refdesc
