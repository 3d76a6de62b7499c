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

#ifndef FASHIONTAG_BATCH_H_
#define FASHIONTAG_BATCH_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fashiontag/color_resolver.h"
#include "fashiontag/expansion.h"
#include "fashiontag/gateway.h"
#include "json.hpp"

namespace fashiontag {

struct BatchItem {
  size_t index = 0;
  std::string image_ref;
  std::optional<ExpandedRecord> record;
  std::optional<BackendUsed> backend_used;
  ColorSource color_source = ColorSource::kNone;
  bool model_color_unknown = false;
  int attempts = 0;
  double latency_ms = 0.0;
  std::string error;  // empty on success
};

// Run counters. Merge is associative and commutative, so workers keep
// private stats and combine them at the end.
class BatchStats {
 public:
  void Add(const BatchItem& item);
  void Merge(const BatchStats& other);

  nlohmann::ordered_json Summary() const;

  size_t total() const { return total_; }
  size_t succeeded() const { return succeeded_; }
  size_t failed() const { return total_ - succeeded_; }
  size_t fallback_used() const { return fallback_used_; }
  size_t color_unknown() const { return color_unknown_; }
  size_t color_resolved() const { return color_resolved_; }
  // Nearest-rank percentile of successful request latencies, p in (0, 100].
  double LatencyPercentile(double p) const;

 private:
  size_t total_ = 0;
  size_t succeeded_ = 0;
  size_t fallback_used_ = 0;
  size_t color_unknown_ = 0;
  size_t color_resolved_ = 0;
  std::vector<double> latencies_ms_;
  std::vector<std::pair<size_t, std::string>> failures_;  // (index, "ref: error")
};

struct BatchResult {
  std::vector<BatchItem> items;  // input order
  BatchStats stats;
};

// Returns image bytes for a path or http(s) URL.
using ImageLoader = std::function<std::string(const std::string& ref)>;
std::string LoadImageRef(const std::string& ref);

struct BatchOptions {
  unsigned parallelism = 4;
  BackendConfig primary;
  std::optional<BackendConfig> fallback;
  const ColorResolver* resolver = nullptr;
  ImageLoader loader = LoadImageRef;
};

// Analyzes, color-resolves and expands every image with at most
// `parallelism` requests in flight. Per-item failures are recorded and do
// not stop the batch. Throws DataError on an empty list.
BatchResult BatchAnalyze(const std::vector<std::string>& image_refs, const Gateway& gateway,
                         const ExpansionRules& rules, const BatchOptions& options);

}  // namespace fashiontag

#endif  // FASHIONTAG_BATCH_H_
