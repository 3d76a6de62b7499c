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

#ifndef FASHIONTAG_EXPANSION_H_
#define FASHIONTAG_EXPANSION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fashiontag/record.h"
#include "fashiontag/rules.h"
#include "fashiontag/vocabulary.h"

namespace fashiontag {

// A rule keyed on an optional category and an optional pattern over the
// record's style tags; at least one of the two is present.
struct StyleKeyedRule {
  std::optional<std::string> category;
  std::optional<Pattern> style_pattern;

  bool Matches(const AttributeRecord& record) const;
};

struct OccasionOverrideRule {
  StyleKeyedRule key;
  std::vector<std::string> tags;
};

struct StyleValueRule {
  StyleKeyedRule key;
  std::string value;
};

// Production-schema derivation rules. Occasion rules are unioned over all
// matches; season, fit and formality take the first matching rule. Every
// mapping has a declared default.
struct ExpansionRules {
  std::string version;
  std::string checksum;
  std::vector<std::string> fit_vocabulary;
  std::vector<std::string> formality_vocabulary;

  std::vector<OccasionOverrideRule> occasion_rules;
  std::vector<std::string> occasion_default;
  std::vector<TagRule> material_season;
  std::vector<std::string> season_default;
  std::vector<StyleValueRule> style_fit;
  std::string fit_default;
  std::vector<StyleValueRule> formality_rules;
  std::string formality_default;
};

// spring, summer, fall, winter, all-season
const std::vector<std::string>& SeasonVocabulary();

// Throws RuleLoadError when any output or default falls outside its
// vocabulary or a default is missing.
ExpansionRules LoadExpansionRules(std::string_view document, const Vocabulary& vocab);
ExpansionRules LoadExpansionRulesFile(const std::string& path, const Vocabulary& vocab);

// Replaces the model's occasion tags with rule-derived ones and derives
// season, fit and formality. Pure and deterministic.
ExpandedRecord Expand(const AttributeRecord& record, const ExpansionRules& rules);

}  // namespace fashiontag

#endif  // FASHIONTAG_EXPANSION_H_
