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

#include "fashiontag/batch.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "fashiontag/errors.h"
#include "fashiontag/io.h"
#include "fashiontag/transport.h"

namespace fashiontag {

void BatchStats::Add(const BatchItem& item) {
  ++total_;
  if (!item.record) {
    failures_.emplace_back(item.index, item.image_ref + ": " + item.error);
    return;
  }
  ++succeeded_;
  if (item.backend_used == BackendUsed::kFallback) ++fallback_used_;
  if (item.model_color_unknown) ++color_unknown_;
  if (item.color_source == ColorSource::kResolver) ++color_resolved_;
  latencies_ms_.push_back(item.latency_ms);
}

void BatchStats::Merge(const BatchStats& other) {
  total_ += other.total_;
  succeeded_ += other.succeeded_;
  fallback_used_ += other.fallback_used_;
  color_unknown_ += other.color_unknown_;
  color_resolved_ += other.color_resolved_;
  latencies_ms_.insert(latencies_ms_.end(), other.latencies_ms_.begin(),
                       other.latencies_ms_.end());
  failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
}

double BatchStats::LatencyPercentile(double p) const {
  if (latencies_ms_.empty()) return 0.0;
  std::vector<double> sorted = latencies_ms_;
  std::sort(sorted.begin(), sorted.end());
  const auto rank = static_cast<size_t>(std::ceil(p / 100.0 * static_cast<double>(sorted.size())));
  return sorted[std::clamp<size_t>(rank, 1, sorted.size()) - 1];
}

nlohmann::ordered_json BatchStats::Summary() const {
  const auto rate = [](size_t k, size_t n) {
    return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n);
  };
  nlohmann::ordered_json out;
  out["total"] = total_;
  out["succeeded"] = succeeded_;
  out["failed"] = failed();
  out["validity_rate"] = rate(succeeded_, total_);
  out["fallback_rate"] = rate(fallback_used_, succeeded_);
  out["color_unknown"] = color_unknown_;
  out["color_resolution_rate"] = rate(color_resolved_, color_unknown_);
  out["latency_ms"] = {{"p50", LatencyPercentile(50)},
                       {"p90", LatencyPercentile(90)},
                       {"p99", LatencyPercentile(99)}};
  std::vector<std::pair<size_t, std::string>> failures = failures_;
  std::sort(failures.begin(), failures.end());
  auto& list = out["failures"] = nlohmann::ordered_json::array();
  for (const auto& [index, message] : failures) {
    list.push_back({{"index", index}, {"error", message}});
  }
  return out;
}

std::string LoadImageRef(const std::string& ref) {
  if (ref.rfind("http://", 0) == 0 || ref.rfind("https://", 0) == 0) {
    return HttpGet(ref, Millis{60'000});
  }
  return ReadFile(ref);
}

namespace {

BatchItem ProcessOne(size_t index, const std::string& ref, const Gateway& gateway,
                     const ExpansionRules& rules, const BatchOptions& options) {
  BatchItem item;
  item.index = index;
  item.image_ref = ref;
  try {
    const std::string image = options.loader(ref);
    AnalyzeResult result = gateway.AnalyzeWithFallback(image, options.primary, options.fallback);
    item.backend_used = result.backend_used;
    item.attempts = result.attempts;
    item.latency_ms = result.latency.count();
    item.model_color_unknown = result.record.primary_color == "unknown";
    ColorResolution resolved =
        ResolveColor(image, result.record, options.resolver, gateway.vocab());
    item.color_source = resolved.source;
    item.record = Expand(resolved.record, rules);
  } catch (const std::exception& e) {
    item.error = e.what();
  }
  return item;
}

}  // namespace

BatchResult BatchAnalyze(const std::vector<std::string>& image_refs, const Gateway& gateway,
                         const ExpansionRules& rules, const BatchOptions& options) {
  if (image_refs.empty()) throw DataError("batch has no images");
  const unsigned workers = std::max(
      1u, std::min<unsigned>(options.parallelism, static_cast<unsigned>(image_refs.size())));

  BatchResult result;
  result.items.resize(image_refs.size());
  std::vector<BatchStats> stats(workers);
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (size_t i = next.fetch_add(1); i < image_refs.size(); i = next.fetch_add(1)) {
        result.items[i] = ProcessOne(i, image_refs[i], gateway, rules, options);
        stats[w].Add(result.items[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& s : stats) result.stats.Merge(s);
  return result;
}

}  // namespace fashiontag
