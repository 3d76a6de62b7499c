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

#ifndef FASHIONTAG_RULES_H_
#define FASHIONTAG_RULES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fashiontag/vocabulary.h"
#include "json.hpp"

namespace fashiontag {

// ASCII lowercase with surrounding whitespace removed.
std::string NormalizeName(std::string_view name);

// Case-insensitive literal match: whole-name equality when `whole_name`,
// substring containment otherwise. `text` is stored normalized and is never
// empty, so an empty name matches nothing.
struct Pattern {
  std::string text;
  bool whole_name = false;

  bool Matches(std::string_view name) const;
};

// Fine category -> coarse category. A rule without a category is an
// explicit discard.
struct CategoryRule {
  Pattern pattern;
  std::optional<std::string> category;
  std::string reason;
};

struct ValueRule {
  Pattern pattern;
  std::string value;
};

struct TagRule {
  Pattern pattern;
  std::vector<std::string> tags;
};

// Declarative label-engineering rules. Category rules are first-match-wins;
// tag rules are unioned over every match.
struct RuleSet {
  std::string version;
  std::string checksum;
  std::vector<std::string> source_colors;
  std::vector<CategoryRule> category_map;
  std::vector<ValueRule> color_map;
  std::vector<TagRule> style_rules;
  std::vector<TagRule> occasion_rules;
  std::vector<std::string> occasion_default;
};

// Parses and validates a rules document. Throws RuleLoadError naming the
// section, rule index and violation.
RuleSet LoadRuleSet(std::string_view document, const Vocabulary& vocab);
RuleSet LoadRuleSetFile(const std::string& path, const Vocabulary& vocab);

namespace rules_internal {

// Building blocks shared with the expansion rules loader. Each throws
// RuleLoadError tagged with `section` and `index`.
const nlohmann::json& RequireArray(const nlohmann::json& doc, const char* section);
Pattern ReadPattern(const nlohmann::json& rule, const char* section, int index);
std::string ReadStringOutput(const nlohmann::json& rule, const char* section, int index);
std::vector<std::string> ReadStringList(const nlohmann::json& value, const char* section,
                                        int index);

}  // namespace rules_internal
}  // namespace fashiontag

#endif  // FASHIONTAG_RULES_H_
