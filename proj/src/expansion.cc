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

#include "fashiontag/expansion.h"

#include <algorithm>
#include <set>

#include "fashiontag/checksum.h"
#include "fashiontag/errors.h"
#include "fashiontag/io.h"
#include "json.hpp"

namespace fashiontag {
namespace {

using rules_internal::ReadPattern;
using rules_internal::ReadStringList;
using rules_internal::ReadStringOutput;
using rules_internal::RequireArray;

bool Contains(const std::vector<std::string>& set, const std::string& v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

StyleKeyedRule ReadKey(const nlohmann::json& rule, const char* section, int index,
                       const Vocabulary& vocab) {
  if (!rule.is_object()) throw RuleLoadError(section, index, "rule is not an object");
  StyleKeyedRule key;
  if (rule.contains("category") && !rule["category"].is_null()) {
    if (!rule["category"].is_string()) {
      throw RuleLoadError(section, index, "'category' must be a string or null");
    }
    key.category = rule["category"].get<std::string>();
    if (!vocab.IsCategory(*key.category)) {
      throw RuleLoadError(section, index,
                          "category '" + *key.category + "' not in vocabulary");
    }
  }
  if (rule.contains("pattern")) key.style_pattern = ReadPattern(rule, section, index);
  if (!key.category && !key.style_pattern) {
    throw RuleLoadError(section, index, "rule needs a 'pattern', a 'category' or both");
  }
  return key;
}

std::vector<std::string> ReadDefaultList(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw RuleLoadError(key, -1, "required default missing");
  auto out = ReadStringList(doc[key], key, -1);
  if (out.empty()) throw RuleLoadError(key, -1, "default must be nonempty");
  return out;
}

std::string ReadDefaultValue(const nlohmann::json& doc, const char* key,
                             const std::vector<std::string>& allowed) {
  if (!doc.contains(key) || !doc[key].is_string()) {
    throw RuleLoadError(key, -1, "required string default missing");
  }
  std::string value = doc[key].get<std::string>();
  if (!Contains(allowed, value)) {
    throw RuleLoadError(key, -1, "'" + value + "' not in its vocabulary");
  }
  return value;
}

std::vector<StyleValueRule> ReadValueRules(const nlohmann::json& doc, const char* section,
                                           const std::vector<std::string>& allowed,
                                           const Vocabulary& vocab) {
  std::vector<StyleValueRule> rules;
  int index = 0;
  for (const auto& rule : RequireArray(doc, section)) {
    StyleValueRule value_rule{ReadKey(rule, section, index, vocab),
                              ReadStringOutput(rule, section, index)};
    if (!Contains(allowed, value_rule.value)) {
      throw RuleLoadError(section, index, "'" + value_rule.value + "' not in its vocabulary");
    }
    rules.push_back(std::move(value_rule));
    ++index;
  }
  return rules;
}

std::vector<std::string> ReadVocabularyList(const nlohmann::json& doc, const char* key) {
  auto out = ReadDefaultList(doc, key);
  std::set<std::string> unique(out.begin(), out.end());
  if (unique.size() != out.size()) throw RuleLoadError(key, -1, "duplicate entries");
  return out;
}

}  // namespace

bool StyleKeyedRule::Matches(const AttributeRecord& record) const {
  if (category && *category != record.category) return false;
  if (!style_pattern) return true;
  return std::any_of(record.style_tags.begin(), record.style_tags.end(),
                     [&](const std::string& tag) { return style_pattern->Matches(tag); });
}

const std::vector<std::string>& SeasonVocabulary() {
  static const std::vector<std::string> kSeasons = {"spring", "summer", "fall", "winter",
                                                    "all-season"};
  return kSeasons;
}

ExpansionRules LoadExpansionRules(std::string_view document, const Vocabulary& vocab) {
  auto doc = nlohmann::json::parse(document, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw RuleLoadError("expansion_rules", -1, "document is not a JSON object");
  }
  ExpansionRules rules;
  if (doc.contains("version") && doc["version"].is_string()) {
    rules.version = doc["version"].get<std::string>();
  }
  rules.fit_vocabulary = ReadVocabularyList(doc, "fit_vocabulary");
  rules.formality_vocabulary = ReadVocabularyList(doc, "formality_vocabulary");

  int index = 0;
  for (const auto& rule : RequireArray(doc, "occasion_rules")) {
    OccasionOverrideRule occasion{ReadKey(rule, "occasion_rules", index, vocab), {}};
    if (!rule.contains("output")) throw RuleLoadError("occasion_rules", index, "missing 'output'");
    occasion.tags = ReadStringList(rule["output"], "occasion_rules", index);
    for (const auto& tag : occasion.tags) {
      if (!vocab.IsOccasionTag(tag)) {
        throw RuleLoadError("occasion_rules", index, "tag '" + tag + "' not in vocabulary");
      }
    }
    rules.occasion_rules.push_back(std::move(occasion));
    ++index;
  }
  rules.occasion_default = ReadDefaultList(doc, "occasion_default");
  for (const auto& tag : rules.occasion_default) {
    if (!vocab.IsOccasionTag(tag)) {
      throw RuleLoadError("occasion_default", -1, "tag '" + tag + "' not in vocabulary");
    }
  }
  Canonicalize(rules.occasion_default);

  index = 0;
  for (const auto& rule : RequireArray(doc, "material_season")) {
    TagRule season{ReadPattern(rule, "material_season", index), {}};
    if (!rule.contains("output")) throw RuleLoadError("material_season", index, "missing 'output'");
    season.tags = ReadStringList(rule["output"], "material_season", index);
    if (season.tags.empty()) throw RuleLoadError("material_season", index, "empty output");
    for (const auto& tag : season.tags) {
      if (!Contains(SeasonVocabulary(), tag)) {
        throw RuleLoadError("material_season", index, "season '" + tag + "' not allowed");
      }
    }
    Canonicalize(season.tags);
    rules.material_season.push_back(std::move(season));
    ++index;
  }
  rules.season_default = ReadDefaultList(doc, "season_default");
  for (const auto& tag : rules.season_default) {
    if (!Contains(SeasonVocabulary(), tag)) {
      throw RuleLoadError("season_default", -1, "season '" + tag + "' not allowed");
    }
  }
  Canonicalize(rules.season_default);

  rules.style_fit = ReadValueRules(doc, "style_fit", rules.fit_vocabulary, vocab);
  rules.fit_default = ReadDefaultValue(doc, "fit_default", rules.fit_vocabulary);
  rules.formality_rules =
      ReadValueRules(doc, "formality_rules", rules.formality_vocabulary, vocab);
  rules.formality_default =
      ReadDefaultValue(doc, "formality_default", rules.formality_vocabulary);

  rules.checksum = Sha256Hex(document);
  return rules;
}

ExpansionRules LoadExpansionRulesFile(const std::string& path, const Vocabulary& vocab) {
  return LoadExpansionRules(ReadFile(path), vocab);
}

ExpandedRecord Expand(const AttributeRecord& record, const ExpansionRules& rules) {
  ExpandedRecord out;
  out.base = record;
  Canonicalize(out.base.style_tags);

  std::set<std::string> occasions;
  for (const auto& rule : rules.occasion_rules) {
    if (rule.key.Matches(out.base)) occasions.insert(rule.tags.begin(), rule.tags.end());
  }
  out.base.occasion_tags = occasions.empty()
                               ? rules.occasion_default
                               : std::vector<std::string>(occasions.begin(), occasions.end());

  out.season_tags = rules.season_default;
  for (const auto& rule : rules.material_season) {
    if (rule.pattern.Matches(out.base.material)) {
      out.season_tags = rule.tags;
      break;
    }
  }

  out.fit = rules.fit_default;
  for (const auto& rule : rules.style_fit) {
    if (rule.key.Matches(out.base)) {
      out.fit = rule.value;
      break;
    }
  }

  out.formality = rules.formality_default;
  for (const auto& rule : rules.formality_rules) {
    if (rule.key.Matches(out.base)) {
      out.formality = rule.value;
      break;
    }
  }
  return out;
}

}  // namespace fashiontag
