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

#include <map>
#include <memory>
#include <string>

#include "fashiontag/batch.h"
#include "fashiontag/color_resolver.h"
#include "fashiontag/errors.h"
#include "fashiontag/expansion.h"
#include "fashiontag/io.h"
#include "fashiontag/transport.h"
#include "fashiontag/vocabulary.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fashiontag {
namespace {

const ExpansionRules& Rules() {
  static const ExpansionRules rules =
      LoadExpansionRulesFile(DataPath("expansion_rules.json"), Vocabulary::Default());
  return rules;
}

class BatchTest : public ::testing::Test {
 protected:
  void SetUp() override {
    images_ = testing::FixtureImages(10);
    for (const auto& img : images_) {
      server_.AddFixture(img.bytes, SerializeCompact(img.answer));
      bytes_[img.ref] = img.bytes;
      refs_.push_back(img.ref);
    }
  }

  BatchOptions Options(unsigned parallelism) {
    BatchOptions o;
    o.parallelism = parallelism;
    o.primary.endpoint_url = server_.url();
    o.primary.retry_backoff = {Millis{0}};
    o.resolver = &resolver_;
    o.loader = [this](const std::string& ref) { return bytes_.at(ref); };
    return o;
  }

  // Record lines plus error strings, for comparing runs.
  static std::vector<std::string> Outputs(const BatchResult& r) {
    std::vector<std::string> out;
    for (const auto& item : r.items) {
      out.push_back(item.record ? SerializeCompact(*item.record) : "error: " + item.error);
    }
    return out;
  }

  testing::MockInferenceServer server_;
  std::vector<testing::FixtureImage> images_;
  std::map<std::string, std::string> bytes_;
  std::vector<std::string> refs_;
  PaletteColorResolver resolver_;
  Gateway gateway_{std::make_shared<HttpTransport>(), Vocabulary::Default(), [](Millis) {}};
};

TEST_F(BatchTest, RecordsInInputOrder) {
  const BatchResult r = BatchAnalyze(refs_, gateway_, Rules(), Options(4));
  ASSERT_EQ(r.items.size(), 10u);
  for (size_t i = 0; i < r.items.size(); ++i) {
    const BatchItem& item = r.items[i];
    EXPECT_EQ(item.index, i);
    EXPECT_EQ(item.image_ref, refs_[i]);
    ASSERT_TRUE(item.record.has_value()) << item.error;
    EXPECT_EQ(item.record->base.category, images_[i].answer.category);
    EXPECT_EQ(item.record->base.occasion_tags,
              Expand(item.record->base, Rules()).base.occasion_tags);
    EXPECT_EQ(item.attempts, 1);
    EXPECT_EQ(item.backend_used, BackendUsed::kPrimary);
  }
  EXPECT_EQ(r.stats.succeeded(), 10u);
  EXPECT_EQ(r.stats.Summary()["validity_rate"], 1.0);
}

TEST_F(BatchTest, UnknownColorsResolvedFromPixels) {
  const BatchResult r = BatchAnalyze(refs_, gateway_, Rules(), Options(2));
  // Items 2, 5 and 8 answered "unknown".
  for (size_t i : {2u, 5u, 8u}) {
    EXPECT_TRUE(r.items[i].model_color_unknown);
    EXPECT_EQ(r.items[i].color_source, ColorSource::kResolver);
  }
  EXPECT_EQ(r.items[2].record->base.primary_color, "white");
  EXPECT_EQ(r.items[5].record->base.primary_color, "green");
  EXPECT_EQ(r.items[0].color_source, ColorSource::kModel);
  EXPECT_EQ(r.stats.color_unknown(), 3u);
  EXPECT_EQ(r.stats.Summary()["color_resolution_rate"], 1.0);
}

TEST_F(BatchTest, PermanentFailureIsIsolated) {
  server_.AlwaysUnavailable(images_[4].bytes);
  const BatchResult r = BatchAnalyze(refs_, gateway_, Rules(), Options(4));
  EXPECT_EQ(r.stats.succeeded(), 9u);
  EXPECT_EQ(r.stats.failed(), 1u);
  EXPECT_FALSE(r.items[4].record.has_value());
  EXPECT_NE(r.items[4].error.find("503"), std::string::npos);
  const auto summary = r.stats.Summary();
  ASSERT_EQ(summary["failures"].size(), 1u);
  EXPECT_EQ(summary["failures"][0]["index"], 4);
  // 9 successes + 3 attempts on the unavailable image.
  EXPECT_EQ(server_.requests(), 12);
}

TEST_F(BatchTest, FallbackUsedWhenPrimaryDown) {
  BatchOptions o = Options(3);
  o.primary.endpoint_url = "http://127.0.0.1:" + std::to_string(testing::UnusedPort());
  o.primary.max_retries = 0;
  o.fallback = BackendConfig{};
  o.fallback->endpoint_url = server_.url();
  const BatchResult r = BatchAnalyze(refs_, gateway_, Rules(), o);
  EXPECT_EQ(r.stats.succeeded(), 10u);
  EXPECT_EQ(r.stats.fallback_used(), 10u);
  EXPECT_EQ(r.stats.Summary()["fallback_rate"], 1.0);
}

TEST_F(BatchTest, ParallelismDoesNotChangeOutput) {
  server_.AlwaysUnavailable(images_[7].bytes);
  const auto serial = Outputs(BatchAnalyze(refs_, gateway_, Rules(), Options(1)));
  for (unsigned p : {2u, 8u, 32u}) {
    EXPECT_EQ(Outputs(BatchAnalyze(refs_, gateway_, Rules(), Options(p))), serial) << p;
  }
}

TEST_F(BatchTest, LoaderErrorsAreRecorded) {
  BatchOptions o = Options(2);
  o.loader = LoadImageRef;
  const BatchResult r = BatchAnalyze({"/nonexistent/image.jpg"}, gateway_, Rules(), o);
  EXPECT_EQ(r.stats.failed(), 1u);
  EXPECT_FALSE(r.items[0].error.empty());
  EXPECT_THROW(BatchAnalyze({}, gateway_, Rules(), o), DataError);
}

TEST(BatchStatsTest, PercentilesAndMerge) {
  BatchStats a, b;
  for (int i = 1; i <= 100; ++i) {
    BatchItem item;
    item.index = static_cast<size_t>(i);
    item.record = ExpandedRecord{};
    item.latency_ms = i;
    (i % 2 ? a : b).Add(item);
  }
  a.Merge(b);
  EXPECT_EQ(a.total(), 100u);
  EXPECT_EQ(a.LatencyPercentile(50), 50.0);
  EXPECT_EQ(a.LatencyPercentile(90), 90.0);
  EXPECT_EQ(a.LatencyPercentile(99), 99.0);
  EXPECT_EQ(a.LatencyPercentile(100), 100.0);
  EXPECT_EQ(BatchStats().LatencyPercentile(50), 0.0);
}

}  // namespace
}  // namespace fashiontag
