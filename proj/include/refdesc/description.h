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

// A description is an anchored pattern: a target slot, D descriptor slots,
// arcs from the target to descriptors and (for intermediate and deep shapes)
// arcs among descriptors.

#ifndef REFDESC_DESCRIPTION_H_
#define REFDESC_DESCRIPTION_H_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "refdesc/graph.h"

namespace refdesc {

enum class ShapeClass { kFlat, kIntermediate, kDeep };

std::string_view ShapeClassName(ShapeClass shape);
ShapeClass ParseShapeClass(std::string_view name);

// A descriptor slot. A missing name makes the slot VARIABLE: any node.
struct Slot {
  std::optional<std::string> name;

  bool variable() const { return !name.has_value(); }
};

struct TargetArc {
  LabelId label = 0;
  uint32_t slot = 0;

  friend auto operator<=>(const TargetArc &, const TargetArc &) = default;
};

struct InterArc {
  uint32_t from = 0;
  LabelId label = 0;
  uint32_t to = 0;

  friend auto operator<=>(const InterArc &, const InterArc &) = default;
};

// Sender-side binding of the slots; never serialized.
struct GroundTruth {
  NodeId target = 0;
  std::vector<NodeId> descriptors;
};

struct Description {
  // Missing target name: the receiver considers every node.
  std::optional<std::string> target_name;
  std::vector<Slot> slots;
  std::vector<TargetArc> target_arcs;
  std::vector<InterArc> inter_arcs;
  ShapeClass shape = ShapeClass::kFlat;
  double b = 0.0;
  std::optional<GroundTruth> truth;

  size_t D() const { return slots.size(); }
  size_t L() const { return target_arcs.size() + inter_arcs.size(); }
};

// Throws kInvalidInput for slot references out of range, inter arcs in a
// flat description, or a ground truth of the wrong arity.
void ValidateDescription(const Description &desc);

// Canonical arc configuration with names erased. Target arcs use
// kTargetSlot as their source.
inline constexpr uint32_t kTargetSlot = 0xFFFFFFFF;

struct ShapeArc {
  uint32_t from = 0;
  LabelId label = 0;
  uint32_t to = 0;

  friend auto operator<=>(const ShapeArc &, const ShapeArc &) = default;
};

using Shape = std::vector<ShapeArc>;

Shape ShapeOf(const Description &desc);

// True if the ground-truth binding of `desc` satisfies all of its arcs in
// `graph`. Throws kUnboundDescriptor without a ground truth.
bool TruthHolds(const Description &desc, const Graph &graph);

// Labels are written by name; "ABSENT" stands for kAbsent.
nlohmann::json DescriptionToJson(const Description &desc,
                                 const std::vector<std::string> &labels);
// Throws kParseError.
Description DescriptionFromJson(const nlohmann::json &doc,
                                const std::vector<std::string> &labels);

}  // namespace refdesc

#endif  // REFDESC_DESCRIPTION_H_
