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

#ifndef FASHIONTAG_RECORD_H_
#define FASHIONTAG_RECORD_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fashiontag/vocabulary.h"
#include "json.hpp"

namespace fashiontag {

// The five trained attribute fields. Tag lists are kept in canonical form:
// sorted ascending, no duplicates.
struct AttributeRecord {
  std::string category;
  std::string primary_color;
  std::string material;
  std::vector<std::string> style_tags;
  std::vector<std::string> occasion_tags;

  friend bool operator==(const AttributeRecord&, const AttributeRecord&) = default;
};

// The 8-field production schema: the trained fields plus rule-derived
// season, fit and formality.
struct ExpandedRecord {
  AttributeRecord base;
  std::vector<std::string> season_tags;
  std::string fit;
  std::string formality;

  friend bool operator==(const ExpandedRecord&, const ExpandedRecord&) = default;
};

enum class ParseOutcome {
  kValid,
  kInvalidJson,
  kMissingField,
  kWrongType,
  kVocabularyViolation,
};

enum class ParseMode { kSchemaOnly, kVocabularyChecked };

// Result of ParseStrict. `record` is set iff outcome is kValid or
// kVocabularyViolation.
struct ParseReport {
  ParseOutcome outcome = ParseOutcome::kInvalidJson;
  std::optional<AttributeRecord> record;
  std::string detail;

  bool valid() const { return outcome == ParseOutcome::kValid; }
};

std::string_view ToString(ParseOutcome outcome);

// Sorts and deduplicates in place.
void Canonicalize(std::vector<std::string>& tags);

// Single-line JSON, keys in schema order, "," and ":" separators, non-ASCII
// escaped as \uXXXX. Byte-identical to a compact-separator dump.
std::string SerializeCompact(const AttributeRecord& record);
std::string SerializeCompact(const ExpandedRecord& record);

// Key-ordered JSON value of a record, for embedding in larger documents.
nlohmann::ordered_json ToJson(const AttributeRecord& record);
nlohmann::ordered_json ToJson(const ExpandedRecord& record);

// Total over arbitrary bytes: every failure is reported through the
// outcome, never thrown. Extra keys are ignored.
ParseReport ParseStrict(std::string_view text, const Vocabulary& vocab,
                        ParseMode mode = ParseMode::kSchemaOnly);

// Same rules applied to an already-parsed JSON value.
ParseReport ParseStrictValue(const nlohmann::json& value, const Vocabulary& vocab,
                        ParseMode mode = ParseMode::kSchemaOnly);

// Checks the AttributeRecord invariants against `vocab`; returns an empty
// string when they hold, otherwise a description of the first violation.
std::string ValidateRecord(const AttributeRecord& record, const Vocabulary& vocab);

}  // namespace fashiontag

#endif  // FASHIONTAG_RECORD_H_
