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

#ifndef FASHIONTAG_DISTRIBUTION_H_
#define FASHIONTAG_DISTRIBUTION_H_

#include <string>
#include <vector>

#include "fashiontag/record.h"
#include "fashiontag/vocabulary.h"
#include "json.hpp"

namespace fashiontag {

struct DistributionRow {
  std::string category;
  size_t count = 0;
  // Percent of the total in tenths, rounded half up (365 == 36.5%).
  long percent_tenths = 0;

  double percent() const { return static_cast<double>(percent_tenths) / 10.0; }
};

struct CategoryDistribution {
  // Every vocabulary category, zero counts included, ordered by count
  // descending then vocabulary order.
  std::vector<DistributionRow> rows;
  size_t total = 0;
};

// Throws DataError on empty input or a category outside the vocabulary.
CategoryDistribution ComputeCategoryDistribution(const std::vector<AttributeRecord>& records,
                                                 const Vocabulary& vocab);

// "Category / Count / %" table with thousands separators and a Total row.
std::string RenderDistributionTable(const CategoryDistribution& distribution);

nlohmann::ordered_json ToJson(const CategoryDistribution& distribution);

// 1684 -> "1,684".
std::string WithThousands(size_t value);

// "dress" -> "Dress".
std::string DisplayName(const std::string& category);

}  // namespace fashiontag

#endif  // FASHIONTAG_DISTRIBUTION_H_
