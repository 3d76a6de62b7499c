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

#ifndef FASHIONTAG_BASELINE_H_
#define FASHIONTAG_BASELINE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fashiontag/record.h"
#include "fashiontag/scoring.h"
#include "fashiontag/vocabulary.h"
#include "json.hpp"

namespace fashiontag {

// Category-then-defaults ablation: per category, the most frequent style
// and occasion tags of the training set stand in for the model's tags.
struct DefaultTags {
  std::vector<std::string> top_style;     // at most kTopStyle
  std::vector<std::string> top_occasion;  // at most kTopOccasion
  std::map<std::string, size_t> style_counts;
  std::map<std::string, size_t> occasion_counts;
};

class DefaultTagTable {
 public:
  static constexpr size_t kTopStyle = 3;
  static constexpr size_t kTopOccasion = 2;

  // Counts tags per category over `train`. Ties in frequency break by
  // ascending tag name. Every vocabulary category gets an entry, empty
  // for categories absent from training. Throws DataError on empty input.
  static DefaultTagTable Build(const std::vector<AttributeRecord>& train,
                               const Vocabulary& vocab);

  // Entry for `category`; an empty entry for unknown categories.
  const DefaultTags& For(const std::string& category) const;
  const std::map<std::string, DefaultTags>& entries() const { return entries_; }

  nlohmann::ordered_json ToJson(const Vocabulary& vocab) const;

 private:
  std::map<std::string, DefaultTags> entries_;
};

// Top `k` keys by descending count then ascending key.
std::vector<std::string> TopByFrequency(const std::map<std::string, size_t>& counts, size_t k);

// Scores the baseline: each sample's predicted tags are the table defaults
// for `categories[i]` (model-predicted or gold/oracle). A missing category
// (the model output was not valid JSON) makes the sample invalid. Throws
// DataError when the inputs are misaligned or empty.
MetricsReport EvaluateBaseline(const std::vector<EvalSample>& samples,
                               const std::vector<std::optional<std::string>>& categories,
                               const DefaultTagTable& table, const Vocabulary& vocab,
                               double confidence = 0.95);

}  // namespace fashiontag

#endif  // FASHIONTAG_BASELINE_H_
