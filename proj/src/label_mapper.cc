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

#include "fashiontag/label_mapper.h"

#include <set>
#include <unordered_set>

#include "fashiontag/errors.h"

namespace fashiontag {
namespace {

std::string RequireString(const nlohmann::json& value, const char* key) {
  if (!value.contains(key) || !value[key].is_string()) {
    throw DataError(std::string("raw annotation field '") + key + "' must be a string");
  }
  return value[key].get<std::string>();
}

std::optional<std::string> OptionalString(const nlohmann::json& value, const char* key) {
  if (!value.contains(key) || value[key].is_null()) return std::nullopt;
  if (!value[key].is_string()) {
    throw DataError(std::string("raw annotation field '") + key +
                    "' must be a string or null");
  }
  return value[key].get<std::string>();
}

void UnionMatches(const std::vector<TagRule>& rules, std::string_view name,
                  std::set<std::string>& out) {
  for (const auto& rule : rules) {
    if (rule.pattern.Matches(name)) out.insert(rule.tags.begin(), rule.tags.end());
  }
}

}  // namespace

nlohmann::ordered_json ToJson(const RawAnnotation& raw) {
  nlohmann::ordered_json out;
  out["item_id"] = raw.item_id;
  out["image_ref"] = raw.image_ref;
  out["fine_category"] = raw.fine_category;
  out["color_label"] = raw.color_label ? nlohmann::ordered_json(*raw.color_label) : nullptr;
  out["material_label"] =
      raw.material_label ? nlohmann::ordered_json(*raw.material_label) : nullptr;
  out["style_labels"] = raw.style_labels;
  return out;
}

RawAnnotation RawAnnotationFromJson(const nlohmann::json& value) {
  if (!value.is_object()) throw DataError("raw annotation is not a JSON object");
  RawAnnotation raw;
  raw.item_id = RequireString(value, "item_id");
  if (raw.item_id.empty()) throw DataError("raw annotation has an empty item_id");
  raw.image_ref = value.contains("image_ref") ? RequireString(value, "image_ref") : "";
  raw.fine_category = RequireString(value, "fine_category");
  if (raw.fine_category.empty()) {
    throw DataError("raw annotation '" + raw.item_id + "' has an empty fine_category");
  }
  raw.color_label = OptionalString(value, "color_label");
  raw.material_label = OptionalString(value, "material_label");
  if (value.contains("style_labels") && !value["style_labels"].is_null()) {
    const auto& labels = value["style_labels"];
    if (!labels.is_array()) throw DataError("style_labels must be an array");
    for (const auto& label : labels) {
      if (!label.is_string()) throw DataError("style_labels must hold strings");
      raw.style_labels.push_back(label.get<std::string>());
    }
  }
  return raw;
}

nlohmann::ordered_json ToJson(const MappedExample& example) {
  nlohmann::ordered_json out;
  out["raw"] = ToJson(example.raw);
  out["record"] = ToJson(example.record);
  return out;
}

MappedExample MappedExampleFromJson(const nlohmann::json& value, const Vocabulary& vocab) {
  if (!value.is_object() || !value.contains("raw") || !value.contains("record")) {
    throw DataError("mapped example needs 'raw' and 'record' objects");
  }
  MappedExample example;
  example.raw = RawAnnotationFromJson(value["raw"]);
  ParseReport report = ParseStrictValue(value["record"], vocab, ParseMode::kVocabularyChecked);
  if (!report.valid()) {
    throw DataError("item '" + example.raw.item_id + "': invalid record (" +
                    std::string(ToString(report.outcome)) + ": " + report.detail + ")");
  }
  example.record = std::move(*report.record);
  return example;
}

const CategoryRule* FindCategoryRule(std::string_view fine_category, const RuleSet& rules) {
  for (const auto& rule : rules.category_map) {
    if (rule.pattern.Matches(fine_category)) return &rule;
  }
  return nullptr;
}

std::optional<std::string> MapCategory(std::string_view fine_category, const RuleSet& rules) {
  const CategoryRule* rule = FindCategoryRule(fine_category, rules);
  if (rule == nullptr) return std::nullopt;
  return rule->category;
}

std::string MapColor(const std::optional<std::string>& color_label, const RuleSet& rules) {
  if (!color_label) return "unknown";
  for (const auto& rule : rules.color_map) {
    if (rule.pattern.Matches(*color_label)) return rule.value;
  }
  return "unknown";
}

DerivedTags DeriveTags(std::string_view fine_category,
                       const std::vector<std::string>& style_labels, const RuleSet& rules) {
  std::set<std::string> style;
  std::set<std::string> occasion;
  UnionMatches(rules.style_rules, fine_category, style);
  UnionMatches(rules.occasion_rules, fine_category, occasion);
  for (const auto& label : style_labels) {
    UnionMatches(rules.style_rules, label, style);
    UnionMatches(rules.occasion_rules, label, occasion);
  }
  DerivedTags tags{{style.begin(), style.end()}, {occasion.begin(), occasion.end()}};
  if (tags.occasion_tags.empty()) {
    tags.occasion_tags = rules.occasion_default;
    Canonicalize(tags.occasion_tags);
  }
  return tags;
}

std::string NormalizeMaterial(const std::optional<std::string>& material_label) {
  if (!material_label) return "unknown";
  std::string material = NormalizeName(*material_label);
  return material.empty() ? "unknown" : material;
}

MappingOutcome BuildRecord(const RawAnnotation& raw, const RuleSet& rules,
                           const Vocabulary& vocab) {
  MappingOutcome outcome;
  const CategoryRule* rule = FindCategoryRule(raw.fine_category, rules);
  if (rule == nullptr) {
    outcome.discard_reason = "category not covered by any rule";
    outcome.uncovered = true;
    return outcome;
  }
  if (!rule->category) {
    outcome.discard_reason = "category unmapped";
    return outcome;
  }
  DerivedTags tags = DeriveTags(raw.fine_category, raw.style_labels, rules);
  AttributeRecord record{*rule->category, MapColor(raw.color_label, rules),
                         NormalizeMaterial(raw.material_label), std::move(tags.style_tags),
                         std::move(tags.occasion_tags)};
  // Rules are validated against the vocabulary at load time, so a
  // violation here means the rules and vocabulary disagree.
  if (std::string violation = ValidateRecord(record, vocab); !violation.empty()) {
    throw DataError("rule set produced an invalid record: " + violation);
  }
  outcome.status = MappingStatus::kMapped;
  outcome.record = std::move(record);
  return outcome;
}

std::vector<std::string> AuditCategoryCoverage(const std::vector<RawAnnotation>& rows,
                                               const RuleSet& rules) {
  std::vector<std::string> uncovered;
  std::unordered_set<std::string> seen;
  for (const auto& row : rows) {
    if (!seen.insert(row.fine_category).second) continue;
    if (FindCategoryRule(row.fine_category, rules) == nullptr) {
      uncovered.push_back(row.fine_category);
    }
  }
  return uncovered;
}

IngestResult Ingest(const std::vector<RawAnnotation>& rows, const RuleSet& rules,
                    const Vocabulary& vocab) {
  IngestResult result;
  std::unordered_set<std::string> ids;
  std::unordered_set<std::string> uncovered_seen;
  for (const auto& row : rows) {
    if (!ids.insert(row.item_id).second) {
      throw DataError("duplicate item_id '" + row.item_id + "'");
    }
    MappingOutcome outcome = BuildRecord(row, rules, vocab);
    if (outcome.status == MappingStatus::kMapped) {
      result.mapped.push_back({row, std::move(*outcome.record)});
      continue;
    }
    ++result.discarded;
    if (outcome.uncovered && uncovered_seen.insert(row.fine_category).second) {
      result.uncovered_categories.push_back(row.fine_category);
    }
  }
  return result;
}

}  // namespace fashiontag
