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

#include "fashiontag/rules.h"

#include <algorithm>

#include "fashiontag/checksum.h"
#include "fashiontag/errors.h"
#include "fashiontag/io.h"

namespace fashiontag {

std::string NormalizeName(std::string_view name) {
  const auto first = name.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = name.find_last_not_of(" \t\r\n");
  std::string out(name.substr(first, last - first + 1));
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool Pattern::Matches(std::string_view name) const {
  const std::string normalized = NormalizeName(name);
  if (normalized.empty() || text.empty()) return false;
  if (whole_name) return normalized == text;
  return normalized.find(text) != std::string::npos;
}

namespace rules_internal {

const nlohmann::json& RequireArray(const nlohmann::json& doc, const char* section) {
  if (!doc.contains(section)) throw RuleLoadError(section, -1, "required section missing");
  const auto& value = doc[section];
  if (!value.is_array()) throw RuleLoadError(section, -1, "section is not an array");
  return value;
}

Pattern ReadPattern(const nlohmann::json& rule, const char* section, int index) {
  if (!rule.is_object()) throw RuleLoadError(section, index, "rule is not an object");
  if (!rule.contains("pattern") || !rule["pattern"].is_string()) {
    throw RuleLoadError(section, index, "rule needs a string 'pattern'");
  }
  Pattern pattern;
  pattern.text = NormalizeName(rule["pattern"].get<std::string>());
  if (pattern.text.empty()) throw RuleLoadError(section, index, "empty pattern");
  if (rule.contains("whole_name")) {
    if (!rule["whole_name"].is_boolean()) {
      throw RuleLoadError(section, index, "'whole_name' must be a boolean");
    }
    pattern.whole_name = rule["whole_name"].get<bool>();
  }
  return pattern;
}

std::string ReadStringOutput(const nlohmann::json& rule, const char* section, int index) {
  if (!rule.contains("output") || !rule["output"].is_string()) {
    throw RuleLoadError(section, index, "'output' must be a string");
  }
  return rule["output"].get<std::string>();
}

std::vector<std::string> ReadStringList(const nlohmann::json& value, const char* section,
                                        int index) {
  if (!value.is_array()) throw RuleLoadError(section, index, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : value) {
    if (!e.is_string()) throw RuleLoadError(section, index, "expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace rules_internal

namespace {

using rules_internal::ReadPattern;
using rules_internal::ReadStringList;
using rules_internal::ReadStringOutput;
using rules_internal::RequireArray;

std::vector<TagRule> ReadTagRules(const nlohmann::json& doc, const char* section,
                                  bool (Vocabulary::*in_vocab)(std::string_view) const,
                                  const Vocabulary& vocab) {
  std::vector<TagRule> rules;
  int index = 0;
  for (const auto& rule : RequireArray(doc, section)) {
    TagRule tag_rule{ReadPattern(rule, section, index), {}};
    if (!rule.contains("output")) throw RuleLoadError(section, index, "missing 'output'");
    tag_rule.tags = ReadStringList(rule["output"], section, index);
    for (const auto& tag : tag_rule.tags) {
      if (!(vocab.*in_vocab)(tag)) {
        throw RuleLoadError(section, index, "tag '" + tag + "' not in vocabulary");
      }
    }
    rules.push_back(std::move(tag_rule));
    ++index;
  }
  return rules;
}

}  // namespace

RuleSet LoadRuleSet(std::string_view document, const Vocabulary& vocab) {
  auto doc = nlohmann::json::parse(document, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw RuleLoadError("rules", -1, "document is not a JSON object");
  }
  RuleSet rules;
  if (doc.contains("version") && doc["version"].is_string()) {
    rules.version = doc["version"].get<std::string>();
  }

  int index = 0;
  for (const auto& rule : RequireArray(doc, "category_map")) {
    CategoryRule category_rule{ReadPattern(rule, "category_map", index), std::nullopt, ""};
    if (!rule.contains("output")) {
      throw RuleLoadError("category_map", index, "missing 'output' (null to discard)");
    }
    if (rule["output"].is_null()) {
      category_rule.reason = rule.value("reason", std::string("discarded"));
    } else if (rule["output"].is_string()) {
      category_rule.category = rule["output"].get<std::string>();
      if (!vocab.IsCategory(*category_rule.category)) {
        throw RuleLoadError("category_map", index,
                            "category '" + *category_rule.category + "' not in vocabulary");
      }
    } else {
      throw RuleLoadError("category_map", index, "'output' must be a string or null");
    }
    rules.category_map.push_back(std::move(category_rule));
    ++index;
  }
  if (rules.category_map.empty()) {
    throw RuleLoadError("category_map", -1, "at least one rule is required");
  }

  if (!doc.contains("source_colors")) {
    throw RuleLoadError("source_colors", -1, "required section missing");
  }
  for (const auto& color : ReadStringList(doc["source_colors"], "source_colors", -1)) {
    rules.source_colors.push_back(NormalizeName(color));
  }
  index = 0;
  for (const auto& rule : RequireArray(doc, "color_map")) {
    ValueRule color_rule{ReadPattern(rule, "color_map", index),
                         ReadStringOutput(rule, "color_map", index)};
    if (!vocab.IsColor(color_rule.value)) {
      throw RuleLoadError("color_map", index,
                          "color '" + color_rule.value + "' not in vocabulary");
    }
    rules.color_map.push_back(std::move(color_rule));
    ++index;
  }
  for (const auto& source : rules.source_colors) {
    const bool covered = std::any_of(rules.color_map.begin(), rules.color_map.end(),
                                     [&](const ValueRule& r) { return r.pattern.Matches(source); });
    if (!covered) {
      throw RuleLoadError("color_map", -1, "source color '" + source + "' is not mapped");
    }
  }

  rules.style_rules = ReadTagRules(doc, "style_rules", &Vocabulary::IsStyleTag, vocab);
  rules.occasion_rules =
      ReadTagRules(doc, "occasion_rules", &Vocabulary::IsOccasionTag, vocab);

  if (!doc.contains("occasion_default")) {
    throw RuleLoadError("occasion_default", -1, "required section missing");
  }
  rules.occasion_default = ReadStringList(doc["occasion_default"], "occasion_default", -1);
  if (rules.occasion_default != std::vector<std::string>{"everyday"}) {
    throw RuleLoadError("occasion_default", -1, "must be [\"everyday\"]");
  }

  rules.checksum = Sha256Hex(document);
  return rules;
}

RuleSet LoadRuleSetFile(const std::string& path, const Vocabulary& vocab) {
  return LoadRuleSet(ReadFile(path), vocab);
}

}  // namespace fashiontag
