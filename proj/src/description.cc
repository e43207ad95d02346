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

#include "refdesc/description.h"

#include <algorithm>

#include "refdesc/error.h"

namespace refdesc {

using nlohmann::json;

std::string_view ShapeClassName(ShapeClass shape) {
  switch (shape) {
    case ShapeClass::kFlat: return "flat";
    case ShapeClass::kIntermediate: return "intermediate";
    case ShapeClass::kDeep: return "deep";
  }
  return "flat";
}

ShapeClass ParseShapeClass(std::string_view name) {
  if (name == "flat") return ShapeClass::kFlat;
  if (name == "intermediate") return ShapeClass::kIntermediate;
  if (name == "deep") return ShapeClass::kDeep;
  throw Error(ErrorCode::kParseError,
              "unknown shape '" + std::string(name) + "'");
}

void ValidateDescription(const Description &desc) {
  const size_t d = desc.D();
  for (const TargetArc &a : desc.target_arcs) {
    if (a.slot >= d) {
      throw Error(ErrorCode::kInvalidInput,
                  "target arc references slot " + std::to_string(a.slot));
    }
  }
  for (const InterArc &a : desc.inter_arcs) {
    if (a.from >= d || a.to >= d) {
      throw Error(ErrorCode::kInvalidInput, "inter arc references a bad slot");
    }
    if (a.from == a.to) {
      throw Error(ErrorCode::kInvalidInput, "inter arc is a self-loop");
    }
  }
  if (desc.shape == ShapeClass::kFlat && !desc.inter_arcs.empty()) {
    throw Error(ErrorCode::kInvalidInput, "flat description with inter arcs");
  }
  if (desc.truth && desc.truth->descriptors.size() != d) {
    throw Error(ErrorCode::kInvalidInput, "ground truth arity mismatch");
  }
}

Shape ShapeOf(const Description &desc) {
  Shape shape;
  shape.reserve(desc.L());
  for (const TargetArc &a : desc.target_arcs) {
    shape.push_back({kTargetSlot, a.label, a.slot});
  }
  for (const InterArc &a : desc.inter_arcs) {
    shape.push_back({a.from, a.label, a.to});
  }
  std::sort(shape.begin(), shape.end());
  return shape;
}

bool TruthHolds(const Description &desc, const Graph &graph) {
  if (!desc.truth) {
    throw Error(ErrorCode::kUnboundDescriptor, "description has no binding");
  }
  const GroundTruth &t = *desc.truth;
  for (const TargetArc &a : desc.target_arcs) {
    if (!graph.Holds(t.target, a.label, t.descriptors[a.slot])) return false;
  }
  for (const InterArc &a : desc.inter_arcs) {
    if (!graph.Holds(t.descriptors[a.from], a.label, t.descriptors[a.to])) {
      return false;
    }
  }
  return true;
}

namespace {

json LabelToJson(LabelId label, const std::vector<std::string> &labels) {
  if (label == kAbsent) return "ABSENT";
  if (label >= labels.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "label " + std::to_string(label) + " not in alphabet");
  }
  return labels[label];
}

LabelId LabelFromJson(const json &j, const std::vector<std::string> &labels) {
  const std::string s = j.get<std::string>();
  if (s == "ABSENT") return kAbsent;
  auto it = std::find(labels.begin(), labels.end(), s);
  if (it == labels.end()) {
    throw Error(ErrorCode::kParseError, "unknown label '" + s + "'");
  }
  return static_cast<LabelId>(it - labels.begin());
}

}  // namespace

json DescriptionToJson(const Description &desc,
                       const std::vector<std::string> &labels) {
  json doc;
  doc["target"] = {{"name", desc.target_name ? json(*desc.target_name)
                                             : json(nullptr)}};
  json slots = json::array();
  for (const Slot &s : desc.slots) {
    if (s.variable()) {
      slots.push_back({{"var", true}});
    } else {
      slots.push_back({{"name", *s.name}});
    }
  }
  doc["slots"] = std::move(slots);
  json arcs = json::array();
  for (const TargetArc &a : desc.target_arcs) {
    arcs.push_back({"T", LabelToJson(a.label, labels), a.slot});
  }
  doc["arcs"] = std::move(arcs);
  json inter = json::array();
  for (const InterArc &a : desc.inter_arcs) {
    inter.push_back({a.from, LabelToJson(a.label, labels), a.to});
  }
  doc["inter"] = std::move(inter);
  doc["shape"] = ShapeClassName(desc.shape);
  doc["b"] = desc.b;
  return doc;
}

Description DescriptionFromJson(const json &doc,
                                const std::vector<std::string> &labels) {
  Description desc;
  try {
    const json &target = doc.at("target");
    if (target.contains("name") && !target["name"].is_null()) {
      desc.target_name = target["name"].get<std::string>();
    }
    for (const json &s : doc.at("slots")) {
      if (s.contains("name") && !s["name"].is_null()) {
        desc.slots.push_back({s["name"].get<std::string>()});
      } else if (s.value("var", false)) {
        desc.slots.push_back({std::nullopt});
      } else {
        throw Error(ErrorCode::kParseError, "slot needs a name or var:true");
      }
    }
    for (const json &a : doc.at("arcs")) {
      if (!a.is_array() || a.size() != 3 || a[0] != "T") {
        throw Error(ErrorCode::kParseError, "arc must be [\"T\",label,slot]");
      }
      desc.target_arcs.push_back(
          {LabelFromJson(a[1], labels), a[2].get<uint32_t>()});
    }
    if (doc.contains("inter")) {
      for (const json &a : doc["inter"]) {
        if (!a.is_array() || a.size() != 3) {
          throw Error(ErrorCode::kParseError, "inter arc must be [s,label,s]");
        }
        desc.inter_arcs.push_back({a[0].get<uint32_t>(),
                                   LabelFromJson(a[1], labels),
                                   a[2].get<uint32_t>()});
      }
    }
    desc.shape = ParseShapeClass(doc.value("shape", std::string("flat")));
    desc.b = doc.value("b", 0.0);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  try {
    ValidateDescription(desc);
  } catch (const Error &e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return desc;
}

}  // namespace refdesc
