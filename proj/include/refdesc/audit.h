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

// K-anonymity audit of released descriptions. Passing is necessary, not
// sufficient, for privacy.

#ifndef REFDESC_AUDIT_H_
#define REFDESC_AUDIT_H_

#include <optional>
#include <string>
#include <vector>

#include "refdesc/decode.h"
#include "refdesc/description.h"
#include "refdesc/graph.h"

namespace refdesc {

struct AuditEntry {
  size_t matches = 0;
  bool flagged = false;  // fewer than K matches
};

struct AuditReport {
  size_t k = 0;
  std::vector<AuditEntry> entries;
  size_t flagged_count = 0;
  double mean_size = 0.0;  // mean D
  double salience_rate = 0.0;
  double descriptor_ambiguity = 0.0;
  // Largest safe mean size; missing when F <= A_d.
  std::optional<double> bound;
  // Mean size reached the bound: some targets are likely identified.
  bool batch_flagged = false;
  std::vector<std::string> notes;
};

struct AuditOptions {
  // Estimated from the descriptions when missing.
  std::optional<double> salience_rate;
  std::optional<double> descriptor_ambiguity;
  DecodeOptions decode;
  uint64_t seed = 0;
};

AuditReport KAnonymityAudit(const std::vector<Description> &descriptions,
                            const Graph &graph, const NameTable &names,
                            size_t k, const AuditOptions &options = {});

}  // namespace refdesc

#endif  // REFDESC_AUDIT_H_
