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

#include "gtest/gtest.h"
#include "test_util.h"

namespace refdesc {
namespace {

Description TwoSlotDeep() {
  Description d;
  d.target_name = "x";
  d.slots = {{"a"}, {std::nullopt}};
  d.target_arcs = {{0, 0}, {kAbsent, 1}};
  d.inter_arcs = {{0, 0, 1}};
  d.shape = ShapeClass::kDeep;
  d.b = 0.5;
  return d;
}

TEST(DescriptionTest, SizeCounts) {
  Description d = TwoSlotDeep();
  EXPECT_EQ(d.D(), 2u);
  EXPECT_EQ(d.L(), 3u);
  EXPECT_TRUE(d.slots[1].variable());
}

TEST(DescriptionTest, JsonRoundTrip) {
  const std::vector<std::string> labels = {"L"};
  Description d = TwoSlotDeep();
  nlohmann::json doc = DescriptionToJson(d, labels);
  EXPECT_EQ(doc["arcs"][1][1], "ABSENT");
  Description back = DescriptionFromJson(doc, labels);
  EXPECT_EQ(back.target_name, d.target_name);
  ASSERT_EQ(back.slots.size(), 2u);
  EXPECT_EQ(back.slots[0].name, d.slots[0].name);
  EXPECT_TRUE(back.slots[1].variable());
  EXPECT_EQ(back.target_arcs, d.target_arcs);
  EXPECT_EQ(back.inter_arcs, d.inter_arcs);
  EXPECT_EQ(back.shape, ShapeClass::kDeep);
  EXPECT_DOUBLE_EQ(back.b, 0.5);
  EXPECT_EQ(DescriptionToJson(back, labels).dump(), doc.dump());
}

TEST(DescriptionTest, NamelessTargetRoundTrip) {
  Description d = TwoSlotDeep();
  d.target_name.reset();
  Description back = DescriptionFromJson(DescriptionToJson(d, {"L"}), {"L"});
  EXPECT_FALSE(back.target_name.has_value());
}

TEST(DescriptionTest, MalformedJson) {
  const std::vector<std::string> labels = {"L"};
  auto parse = [&](const char *text) {
    DescriptionFromJson(nlohmann::json::parse(text), labels);
  };
  EXPECT_EQ(CodeOf([&] { parse(R"({"slots":[]})"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([&] {
              parse(R"({"target":{"name":"x"},"slots":[{"name":"a"}],)"
                    R"("arcs":[["T","Q",0]]})");
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([&] {
              parse(R"({"target":{"name":"x"},"slots":[{"name":"a"}],)"
                    R"("arcs":[["T","L",3]]})");
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([&] {
              parse(R"({"target":{"name":"x"},"slots":[{}],"arcs":[]})");
            }),
            ErrorCode::kParseError);
}

TEST(DescriptionTest, Validation) {
  Description d = TwoSlotDeep();
  d.inter_arcs.push_back({1, 0, 1});
  EXPECT_EQ(CodeOf([&] { ValidateDescription(d); }), ErrorCode::kInvalidInput);
  d = TwoSlotDeep();
  d.shape = ShapeClass::kFlat;
  EXPECT_EQ(CodeOf([&] { ValidateDescription(d); }), ErrorCode::kInvalidInput);
  d = TwoSlotDeep();
  d.truth = GroundTruth{0, {1}};
  EXPECT_EQ(CodeOf([&] { ValidateDescription(d); }), ErrorCode::kInvalidInput);
}

TEST(DescriptionTest, ShapeIgnoresArcOrderAndNames) {
  Description a = TwoSlotDeep();
  Description b = a;
  std::reverse(b.target_arcs.begin(), b.target_arcs.end());
  b.slots[0].name = "zzz";
  b.target_name = "other";
  EXPECT_EQ(ShapeOf(a), ShapeOf(b));
  b.target_arcs[0].label = 0;
  b.target_arcs[1].label = 0;
  EXPECT_NE(ShapeOf(a), ShapeOf(b));
}

TEST(DescriptionTest, TruthHolds) {
  Graph g = FromPairs(3, {{0, 1}, {1, 2}});
  Description d = TwoSlotDeep();
  d.target_arcs = {{0, 0}};
  d.truth = GroundTruth{0, {1, 2}};
  EXPECT_TRUE(TruthHolds(d, g));
  d.truth = GroundTruth{0, {2, 1}};
  EXPECT_FALSE(TruthHolds(d, g));
  d.truth.reset();
  EXPECT_EQ(CodeOf([&] { TruthHolds(d, g); }), ErrorCode::kUnboundDescriptor);
}

TEST(DescriptionTest, ShapeNames) {
  for (ShapeClass s :
       {ShapeClass::kFlat, ShapeClass::kIntermediate, ShapeClass::kDeep}) {
    EXPECT_EQ(ParseShapeClass(ShapeClassName(s)), s);
  }
  EXPECT_EQ(CodeOf([] { ParseShapeClass("round"); }), ErrorCode::kParseError);
}

}  // namespace
}  // namespace refdesc
