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

#include "fashiontag/baseline.h"

#include <algorithm>

#include "fashiontag/errors.h"

namespace fashiontag {

std::vector<std::string> TopByFrequency(const std::map<std::string, size_t>& counts,
                                        size_t k) {
  std::vector<std::pair<std::string, size_t>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> out;
  for (size_t i = 0; i < ranked.size() && i < k; ++i) out.push_back(ranked[i].first);
  return out;
}

DefaultTagTable DefaultTagTable::Build(const std::vector<AttributeRecord>& train,
                                       const Vocabulary& vocab) {
  if (train.empty()) throw DataError("default tag table needs training records");
  DefaultTagTable table;
  for (const auto& category : vocab.categories) table.entries_[category];
  for (const auto& record : train) {
    auto& entry = table.entries_[record.category];
    std::vector<std::string> style = record.style_tags;
    std::vector<std::string> occasion = record.occasion_tags;
    Canonicalize(style);
    Canonicalize(occasion);
    for (const auto& tag : style) ++entry.style_counts[tag];
    for (const auto& tag : occasion) ++entry.occasion_counts[tag];
  }
  for (auto& [category, entry] : table.entries_) {
    entry.top_style = TopByFrequency(entry.style_counts, kTopStyle);
    entry.top_occasion = TopByFrequency(entry.occasion_counts, kTopOccasion);
  }
  return table;
}

const DefaultTags& DefaultTagTable::For(const std::string& category) const {
  static const DefaultTags kEmpty;
  auto it = entries_.find(category);
  return it == entries_.end() ? kEmpty : it->second;
}

nlohmann::ordered_json DefaultTagTable::ToJson(const Vocabulary& vocab) const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  std::vector<std::string> order = vocab.categories;
  for (const auto& [category, entry] : entries_) {
    if (std::find(order.begin(), order.end(), category) == order.end()) {
      order.push_back(category);
    }
  }
  for (const auto& category : order) {
    const DefaultTags& entry = For(category);
    out[category] = {{"top_style", entry.top_style},
                     {"top_occasion", entry.top_occasion},
                     {"style_counts", entry.style_counts},
                     {"occasion_counts", entry.occasion_counts}};
  }
  return out;
}

MetricsReport EvaluateBaseline(const std::vector<EvalSample>& samples,
                               const std::vector<std::optional<std::string>>& categories,
                               const DefaultTagTable& table, const Vocabulary& vocab,
                               double confidence) {
  if (samples.size() != categories.size()) {
    throw DataError("baseline: " + std::to_string(samples.size()) + " samples but " +
                    std::to_string(categories.size()) + " categories");
  }
  MetricsAccumulator acc;
  for (size_t i = 0; i < samples.size(); ++i) {
    if (!categories[i]) {
      SampleScore invalid;
      invalid.gold_category = samples[i].gold.category;
      acc.Add(invalid);
      continue;
    }
    const DefaultTags& defaults = table.For(*categories[i]);
    AttributeRecord predicted{*categories[i], "unknown", "unknown", defaults.top_style,
                              defaults.top_occasion};
    acc.Add(ScoreRecord(predicted, samples[i].gold));
  }
  return acc.Finalize(vocab, confidence);
}

}  // namespace fashiontag
