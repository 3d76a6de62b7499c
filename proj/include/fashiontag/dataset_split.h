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

#ifndef FASHIONTAG_DATASET_SPLIT_H_
#define FASHIONTAG_DATASET_SPLIT_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fashiontag/label_mapper.h"
#include "json.hpp"

namespace fashiontag {

// SplitMix64 (Steele, Lea & Flood). The state is the seed itself; each
// call adds the golden-gamma increment and mixes. Chosen because it is a
// few lines in any language, so splits reproduce outside C++.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next();

  // Uniform integer in [0, bound) by rejection: draws below
  // 2^64 mod bound are discarded, the rest reduced modulo bound.
  uint64_t Bounded(uint64_t bound);

 private:
  uint64_t state_;
};

// In-place Fisher-Yates: for i = n-1 down to 1, swap i with Bounded(i+1).
template <typename T>
void PortableShuffle(std::vector<T>& items, uint64_t seed) {
  SplitMix64 rng(seed);
  for (size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<size_t>(rng.Bounded(i));
    std::swap(items[i - 1], items[j]);
  }
}

using SplitRatios = std::array<double, 3>;

struct DatasetSplit {
  std::vector<MappedExample> train;
  std::vector<MappedExample> val;
  std::vector<MappedExample> test;
  uint64_t seed = 0;
  SplitRatios ratios{};
  std::string ruleset_checksum;
};

// Sizes for n items: floor(n*r0), floor(n*r1), remainder. A 1e-9 slack
// absorbs binary representation error in the products.
std::array<size_t, 3> SplitSizes(size_t n, const SplitRatios& ratios);

// Seeded portable shuffle followed by contiguous slicing. Throws DataError
// for an empty dataset or ratios that are negative or do not sum to 1.
DatasetSplit SplitDataset(std::vector<MappedExample> mapped, const SplitRatios& ratios,
                          uint64_t seed, std::string ruleset_checksum = "");

nlohmann::ordered_json SplitManifest(const DatasetSplit& split);

}  // namespace fashiontag

#endif  // FASHIONTAG_DATASET_SPLIT_H_
