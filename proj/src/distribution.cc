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

#include "fashiontag/distribution.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "fashiontag/errors.h"

namespace fashiontag {

std::string WithThousands(size_t value) {
  std::string digits = std::to_string(value);
  std::string out;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (digits.size() - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

std::string DisplayName(const std::string& category) {
  std::string out = category;
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 32);
  return out;
}

CategoryDistribution ComputeCategoryDistribution(const std::vector<AttributeRecord>& records,
                                                 const Vocabulary& vocab) {
  if (records.empty()) throw DataError("category distribution of an empty dataset");
  std::vector<size_t> counts(vocab.categories.size(), 0);
  for (const auto& record : records) {
    const int index = vocab.CategoryIndex(record.category);
    if (index < 0) throw DataError("category '" + record.category + "' not in vocabulary");
    ++counts[static_cast<size_t>(index)];
  }
  CategoryDistribution dist;
  dist.total = records.size();
  for (size_t i = 0; i < counts.size(); ++i) {
    const long tenths =
        static_cast<long>((counts[i] * 2000 + dist.total) / (2 * dist.total));
    dist.rows.push_back({vocab.categories[i], counts[i], tenths});
  }
  std::stable_sort(dist.rows.begin(), dist.rows.end(),
                   [](const auto& a, const auto& b) { return a.count > b.count; });
  return dist;
}

std::string RenderDistributionTable(const CategoryDistribution& distribution) {
  std::ostringstream out;
  char line[96];
  std::snprintf(line, sizeof(line), "%-10s %8s %6s\n", "Category", "Count", "%");
  out << line;
  for (const auto& row : distribution.rows) {
    std::snprintf(line, sizeof(line), "%-10s %8s %6.1f\n", DisplayName(row.category).c_str(),
                  WithThousands(row.count).c_str(), row.percent());
    out << line;
  }
  std::snprintf(line, sizeof(line), "%-10s %8s %6.1f\n", "Total",
                WithThousands(distribution.total).c_str(), 100.0);
  out << line;
  return out.str();
}

nlohmann::ordered_json ToJson(const CategoryDistribution& distribution) {
  nlohmann::ordered_json out;
  out["total"] = distribution.total;
  auto& rows = out["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : distribution.rows) {
    rows.push_back({{"category", row.category},
                    {"count", row.count},
                    {"percent", row.percent()}});
  }
  return out;
}

}  // namespace fashiontag
