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

#ifndef FASHIONTAG_LABEL_MAPPER_H_
#define FASHIONTAG_LABEL_MAPPER_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fashiontag/record.h"
#include "fashiontag/rules.h"
#include "fashiontag/vocabulary.h"
#include "json.hpp"

namespace fashiontag {

// One row of the fine-grained source dataset.
struct RawAnnotation {
  std::string item_id;
  std::string image_ref;
  std::string fine_category;
  std::optional<std::string> color_label;
  std::optional<std::string> material_label;
  std::vector<std::string> style_labels;

  friend bool operator==(const RawAnnotation&, const RawAnnotation&) = default;
};

nlohmann::ordered_json ToJson(const RawAnnotation& raw);
// Throws DataError on missing/mistyped fields or an empty item_id or
// fine_category.
RawAnnotation RawAnnotationFromJson(const nlohmann::json& value);

enum class MappingStatus { kMapped, kDiscarded };

struct MappingOutcome {
  MappingStatus status = MappingStatus::kDiscarded;
  std::optional<AttributeRecord> record;
  std::optional<std::string> discard_reason;
  // True when no category rule (mapping or discard) matched the name.
  bool uncovered = false;
};

// A raw row paired with the record it mapped to.
struct MappedExample {
  RawAnnotation raw;
  AttributeRecord record;

  friend bool operator==(const MappedExample&, const MappedExample&) = default;
};

nlohmann::ordered_json ToJson(const MappedExample& example);
MappedExample MappedExampleFromJson(const nlohmann::json& value, const Vocabulary& vocab);

// First matching category rule, or nullptr.
const CategoryRule* FindCategoryRule(std::string_view fine_category, const RuleSet& rules);

// Coarse category, or nullopt for explicit discards and unmatched names.
std::optional<std::string> MapCategory(std::string_view fine_category, const RuleSet& rules);

// Target color for a source label; "unknown" when absent or unmapped.
std::string MapColor(const std::optional<std::string>& color_label, const RuleSet& rules);

struct DerivedTags {
  std::vector<std::string> style_tags;
  std::vector<std::string> occasion_tags;
};

// Union of every matching style/occasion rule over the fine category and
// each style label; occasions fall back to the rule set default.
DerivedTags DeriveTags(std::string_view fine_category,
                       const std::vector<std::string>& style_labels, const RuleSet& rules);

// Lowercased, trimmed material; "unknown" when absent or blank.
std::string NormalizeMaterial(const std::optional<std::string>& material_label);

MappingOutcome BuildRecord(const RawAnnotation& raw, const RuleSet& rules,
                           const Vocabulary& vocab);

// Distinct fine category names (in first-seen order) that match no
// category rule at all.
std::vector<std::string> AuditCategoryCoverage(const std::vector<RawAnnotation>& rows,
                                               const RuleSet& rules);

struct IngestResult {
  std::vector<MappedExample> mapped;
  size_t discarded = 0;
  std::vector<std::string> uncovered_categories;
};

// Maps every row, preserving input order. Throws DataError on duplicate
// item ids.
IngestResult Ingest(const std::vector<RawAnnotation>& rows, const RuleSet& rules,
                    const Vocabulary& vocab);

}  // namespace fashiontag

#endif  // FASHIONTAG_LABEL_MAPPER_H_
