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

#include "fashiontag/record.h"

#include <algorithm>
#include <array>

namespace fashiontag {
namespace {

constexpr std::array<const char*, 5> kRequiredKeys = {
    "category", "primary_color", "material", "style_tags", "occasion_tags"};

std::string Dump(const nlohmann::ordered_json& value) {
  return value.dump(-1, ' ', /*ensure_ascii=*/true,
                    nlohmann::json::error_handler_t::replace);
}

bool IsStringArray(const nlohmann::json& v) {
  return v.is_array() &&
         std::all_of(v.begin(), v.end(), [](const auto& e) { return e.is_string(); });
}

std::vector<std::string> ReadTags(const nlohmann::json& v) {
  std::vector<std::string> tags;
  tags.reserve(v.size());
  for (const auto& e : v) tags.push_back(e.get<std::string>());
  Canonicalize(tags);
  return tags;
}

}  // namespace

std::string_view ToString(ParseOutcome outcome) {
  switch (outcome) {
    case ParseOutcome::kValid:
      return "valid";
    case ParseOutcome::kInvalidJson:
      return "invalid_json";
    case ParseOutcome::kMissingField:
      return "missing_field";
    case ParseOutcome::kWrongType:
      return "wrong_type";
    case ParseOutcome::kVocabularyViolation:
      return "vocabulary_violation";
  }
  return "unknown";
}

void Canonicalize(std::vector<std::string>& tags) {
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
}

nlohmann::ordered_json ToJson(const AttributeRecord& record) {
  nlohmann::ordered_json out;
  out["category"] = record.category;
  out["primary_color"] = record.primary_color;
  out["material"] = record.material;
  out["style_tags"] = record.style_tags;
  out["occasion_tags"] = record.occasion_tags;
  return out;
}

nlohmann::ordered_json ToJson(const ExpandedRecord& record) {
  nlohmann::ordered_json out = ToJson(record.base);
  out["season_tags"] = record.season_tags;
  out["fit"] = record.fit;
  out["formality"] = record.formality;
  return out;
}

std::string SerializeCompact(const AttributeRecord& record) { return Dump(ToJson(record)); }

std::string SerializeCompact(const ExpandedRecord& record) { return Dump(ToJson(record)); }

ParseReport ParseStrict(std::string_view text, const Vocabulary& vocab, ParseMode mode) {
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  } catch (const std::exception& e) {
    // Only reachable on resource exhaustion inside the parser.
    return {ParseOutcome::kInvalidJson, std::nullopt, e.what()};
  }
  if (value.is_discarded()) {
    return {ParseOutcome::kInvalidJson, std::nullopt, "not parseable as JSON"};
  }
  return ParseStrictValue(value, vocab, mode);
}

ParseReport ParseStrictValue(const nlohmann::json& value, const Vocabulary& vocab,
                        ParseMode mode) {
  if (!value.is_object()) {
    return {ParseOutcome::kWrongType, std::nullopt,
            std::string("top-level value is ") + value.type_name() + ", not an object"};
  }
  std::string missing;
  for (const char* key : kRequiredKeys) {
    if (!value.contains(key)) {
      if (!missing.empty()) missing += ", ";
      missing += key;
    }
  }
  if (!missing.empty()) {
    return {ParseOutcome::kMissingField, std::nullopt, "missing: " + missing};
  }
  for (const char* key : {"category", "primary_color", "material"}) {
    if (!value[key].is_string()) {
      return {ParseOutcome::kWrongType, std::nullopt,
              std::string(key) + " is " + value[key].type_name() + ", not a string"};
    }
  }
  for (const char* key : {"style_tags", "occasion_tags"}) {
    if (!IsStringArray(value[key])) {
      return {ParseOutcome::kWrongType, std::nullopt,
              std::string(key) + " is not an array of strings"};
    }
  }

  AttributeRecord record;
  record.category = value["category"].get<std::string>();
  record.primary_color = value["primary_color"].get<std::string>();
  record.material = value["material"].get<std::string>();
  record.style_tags = ReadTags(value["style_tags"]);
  record.occasion_tags = ReadTags(value["occasion_tags"]);

  if (mode == ParseMode::kVocabularyChecked) {
    std::string violation = ValidateRecord(record, vocab);
    if (!violation.empty()) {
      return {ParseOutcome::kVocabularyViolation, std::move(record), violation};
    }
  }
  return {ParseOutcome::kValid, std::move(record), ""};
}

std::string ValidateRecord(const AttributeRecord& record, const Vocabulary& vocab) {
  if (!vocab.IsCategory(record.category)) {
    return "category '" + record.category + "' not in vocabulary";
  }
  if (!vocab.IsColor(record.primary_color)) {
    return "primary_color '" + record.primary_color + "' not in vocabulary";
  }
  for (const auto& tag : record.style_tags) {
    if (!vocab.IsStyleTag(tag)) return "style tag '" + tag + "' not in vocabulary";
  }
  for (const auto& tag : record.occasion_tags) {
    if (!vocab.IsOccasionTag(tag)) return "occasion tag '" + tag + "' not in vocabulary";
  }
  return "";
}

}  // namespace fashiontag
