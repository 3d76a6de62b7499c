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

#include "fashiontag/dataset_split.h"

#include <cmath>

#include "fashiontag/errors.h"

namespace fashiontag {

uint64_t SplitMix64::Next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::Bounded(uint64_t bound) {
  const uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const uint64_t r = Next();
    if (r >= threshold) return r % bound;
  }
}

std::array<size_t, 3> SplitSizes(size_t n, const SplitRatios& ratios) {
  const auto take = [n](double r) {
    return static_cast<size_t>(std::floor(static_cast<double>(n) * r + 1e-9));
  };
  const size_t first = std::min(n, take(ratios[0]));
  const size_t second = std::min(n - first, take(ratios[1]));
  return {first, second, n - first - second};
}

DatasetSplit SplitDataset(std::vector<MappedExample> mapped, const SplitRatios& ratios,
                          uint64_t seed, std::string ruleset_checksum) {
  if (mapped.empty()) throw DataError("cannot split an empty dataset");
  double sum = 0.0;
  for (double r : ratios) {
    if (!(r >= 0.0 && r <= 1.0)) throw DataError("split ratios must lie in [0, 1]");
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DataError("split ratios must sum to 1");

  PortableShuffle(mapped, seed);
  const auto sizes = SplitSizes(mapped.size(), ratios);

  DatasetSplit split;
  split.seed = seed;
  split.ratios = ratios;
  split.ruleset_checksum = std::move(ruleset_checksum);
  auto begin = std::make_move_iterator(mapped.begin());
  split.train.assign(begin, begin + static_cast<std::ptrdiff_t>(sizes[0]));
  begin += static_cast<std::ptrdiff_t>(sizes[0]);
  split.val.assign(begin, begin + static_cast<std::ptrdiff_t>(sizes[1]));
  begin += static_cast<std::ptrdiff_t>(sizes[1]);
  split.test.assign(begin, std::make_move_iterator(mapped.end()));
  return split;
}

nlohmann::ordered_json SplitManifest(const DatasetSplit& split) {
  nlohmann::ordered_json manifest;
  manifest["prng"] = "splitmix64";
  manifest["shuffle"] = "fisher-yates-descending";
  manifest["seed"] = split.seed;
  manifest["ratios"] = split.ratios;
  manifest["ruleset_checksum"] = split.ruleset_checksum;
  manifest["counts"] = {{"train", split.train.size()},
                        {"val", split.val.size()},
                        {"test", split.test.size()},
                        {"total", split.train.size() + split.val.size() + split.test.size()}};
  return manifest;
}

}  // namespace fashiontag
