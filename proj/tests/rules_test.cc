/* Copyright 2026 The FashionTag Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <string>

#include "fashiontag/errors.h"
#include "fashiontag/io.h"
#include "fashiontag/rules.h"
#include "fashiontag/vocabulary.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "test_util.h"

namespace fashiontag {
namespace {

nlohmann::json DefaultDoc() {
  return nlohmann::json::parse(ReadFile(DataPath("label_rules.json")));
}

// Returns the RuleLoadError raised by loading `doc`; fails if none is.
RuleLoadError LoadError(const nlohmann::json& doc) {
  try {
    LoadRuleSet(doc.dump(), Vocabulary::Default());
  } catch (const RuleLoadError& e) {
    return e;
  }
  ADD_FAILURE() << "document loaded without error";
  return RuleLoadError("", -1, "");
}

TEST(NormalizeNameTest, TrimsAndLowercases) {
  EXPECT_EQ(NormalizeName("  Suits & Blazers\t"), "suits & blazers");
  EXPECT_EQ(NormalizeName(""), "");
}

TEST(PatternTest, WholeNameVersusSubstring) {
  Pattern cap{"cap", true};
  EXPECT_TRUE(cap.Matches(" Cap "));
  EXPECT_FALSE(cap.Matches("Capris"));
  Pattern dress{"dress", false};
  EXPECT_TRUE(dress.Matches("Clubbing DRESSES"));
  EXPECT_FALSE(dress.Matches(""));
}

TEST(LoadRuleSetTest, DefaultFile) {
  const RuleSet& rules = testing::DefaultRules();
  EXPECT_EQ(rules.occasion_default, std::vector<std::string>{"everyday"});
  EXPECT_EQ(rules.source_colors.size(), 19u);
  EXPECT_EQ(rules.checksum.size(), 64u);
  EXPECT_FALSE(rules.category_map.empty());
}

TEST(LoadRuleSetTest, OutOfVocabularyStyleTag) {
  auto doc = DefaultDoc();
  doc["style_rules"][3]["output"] = {"futuristic"};
  RuleLoadError e = LoadError(doc);
  EXPECT_EQ(e.section(), "style_rules");
  EXPECT_EQ(e.rule_index(), 3);
  EXPECT_NE(std::string(e.what()).find("futuristic"), std::string::npos);
}

TEST(LoadRuleSetTest, EmptyDocument) {
  EXPECT_THROW(LoadRuleSet("", Vocabulary::Default()), RuleLoadError);
  RuleLoadError e = LoadError(nlohmann::json::object());
  EXPECT_EQ(e.section(), "category_map");
}

TEST(LoadRuleSetTest, ColorMapMustBeTotal) {
  auto doc = DefaultDoc();
  auto& colors = doc["color_map"];
  for (size_t i = 0; i < colors.size(); ++i) {
    if (colors[i]["pattern"] == "burgundy") {
      colors.erase(i);
      break;
    }
  }
  RuleLoadError e = LoadError(doc);
  EXPECT_EQ(e.section(), "color_map");
  EXPECT_NE(std::string(e.what()).find("burgundy"), std::string::npos);
}

TEST(LoadRuleSetTest, ColorOutputOutsideVocabulary) {
  auto doc = DefaultDoc();
  doc["color_map"][0]["output"] = "charcoal";
  EXPECT_EQ(LoadError(doc).section(), "color_map");
}

TEST(LoadRuleSetTest, CategoryOutputOutsideVocabulary) {
  auto doc = DefaultDoc();
  doc["category_map"][8]["output"] = "outerwear";
  RuleLoadError e = LoadError(doc);
  EXPECT_EQ(e.section(), "category_map");
  EXPECT_EQ(e.rule_index(), 8);
}

TEST(LoadRuleSetTest, OccasionDefaultMustBeEveryday) {
  auto doc = DefaultDoc();
  doc["occasion_default"] = {"work"};
  EXPECT_EQ(LoadError(doc).section(), "occasion_default");
}

TEST(LoadRuleSetTest, MalformedRules) {
  auto doc = DefaultDoc();
  doc["occasion_rules"][0].erase("pattern");
  EXPECT_EQ(LoadError(doc).rule_index(), 0);
  doc = DefaultDoc();
  doc["style_rules"][1]["pattern"] = "   ";
  EXPECT_EQ(LoadError(doc).rule_index(), 1);
  doc = DefaultDoc();
  doc["style_rules"][2]["output"] = "classic";
  EXPECT_EQ(LoadError(doc).rule_index(), 2);
}

}  // namespace
}  // namespace fashiontag
