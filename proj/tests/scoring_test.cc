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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "fashiontag/errors.h"
#include "fashiontag/io.h"
#include "fashiontag/scoring.h"
#include "fashiontag/vocabulary.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "test_util.h"

namespace fashiontag {
namespace {

const Vocabulary& Vocab() { return Vocabulary::Default(); }

AttributeRecord Gold() { return {"top", "navy", "cotton", {"classic", "workwear"}, {"work"}}; }

EvalSample Sample(std::string text, AttributeRecord gold = Gold()) {
  return {"id", std::move(text), std::move(gold)};
}

std::vector<EvalSample> GoldenSamples() {
  std::map<std::string, std::string> preds;
  for (const auto& line : ParseJsonLines(ReadFile(testing::TestDataPath("golden_pred.jsonl")),
                                         "golden_pred.jsonl")) {
    preds[line["item_id"]] = line["prediction_text"];
  }
  std::vector<EvalSample> samples;
  for (const auto& line : ParseJsonLines(ReadFile(testing::TestDataPath("golden_gold.jsonl")),
                                         "golden_gold.jsonl")) {
    const ParseReport gold = ParseStrictValue(line["record"], Vocab());
    samples.push_back({line["item_id"], preds.at(line["item_id"]), *gold.record});
  }
  return samples;
}

TEST(ScoreSampleTest, IdentityIsFullyCorrect) {
  const SampleScore s = ScoreSample(Sample(SerializeCompact(Gold())), Vocab());
  ASSERT_TRUE(s.json_valid);
  EXPECT_TRUE(*s.category_correct);
  EXPECT_TRUE(*s.material_correct);
  EXPECT_TRUE(*s.color_correct);
  EXPECT_EQ(*s.style_f1, (Fraction{1, 1}));
  EXPECT_EQ(*s.occasion_f1, (Fraction{1, 1}));
}

TEST(ScoreSampleTest, InvalidJsonLeavesOptionalsEmpty) {
  const SampleScore s = ScoreSample(Sample("not json"), Vocab());
  EXPECT_FALSE(s.json_valid);
  EXPECT_FALSE(s.category_correct || s.material_correct || s.color_correct || s.style_f1 ||
               s.occasion_f1);
  EXPECT_EQ(s.gold_category, "top");
}

TEST(ScoreSampleTest, CaseInsensitiveCategoryAndMaterialOnly) {
  AttributeRecord pred = Gold();
  pred.material = "Cotton";
  pred.category = " TOP";
  pred.primary_color = "Navy";
  const SampleScore s = ScoreSample(Sample(SerializeCompact(pred)), Vocab());
  EXPECT_TRUE(*s.material_correct);
  EXPECT_TRUE(*s.category_correct);
  EXPECT_FALSE(*s.color_correct);
}

TEST(ScoreSampleTest, OutOfVocabularyPredictionIsStillValid) {
  AttributeRecord pred = Gold();
  pred.category = "hat";
  pred.style_tags = {"classic", "futuristic"};
  const SampleScore s = ScoreSample(Sample(SerializeCompact(pred)), Vocab());
  ASSERT_TRUE(s.json_valid);
  EXPECT_FALSE(*s.category_correct);
  EXPECT_EQ(*s.style_f1, (Fraction{1, 2}));
}

TEST(AggregateTest, ValidityOf460In461) {
  std::vector<SampleScore> scores(460, ScoreRecord(Gold(), Gold()));
  scores.push_back(ScoreSample(Sample("A navy cotton shirt."), Vocab()));
  const MetricsReport r = Aggregate(scores, Vocab());
  EXPECT_EQ(r.n_total, 461u);
  EXPECT_EQ(r.n_valid, 460u);
  EXPECT_NEAR(r.validity_rate, 0.998, 0.0005);
  EXPECT_EQ(r.category_acc, 1.0);
  ASSERT_EQ(r.per_category.size(), 1u);
  EXPECT_EQ(r.per_category[0].n, 460u);
}

TEST(AggregateTest, AllCorrectGivesOnes) {
  std::vector<SampleScore> scores;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const AttributeRecord r = testing::RandomRecord(seed, Vocab());
    scores.push_back(ScoreRecord(r, r));
  }
  const MetricsReport r = Aggregate(scores, Vocab());
  for (double v : {r.validity_rate, r.category_acc, r.material_acc, r.color_acc, r.style_f1_mean,
                   r.occasion_f1_mean}) {
    EXPECT_EQ(v, 1.0);
  }
  for (const auto& row : r.per_category) EXPECT_EQ(row.category_ci.high, 1.0);
}

TEST(AggregateTest, EmptyInputIsAnError) {
  EXPECT_THROW(Aggregate({}, Vocab()), DataError);
}

TEST(AggregateTest, PropertiesOnGoldenFixture) {
  const auto samples = GoldenSamples();
  std::vector<SampleScore> scores;
  for (const auto& s : samples) scores.push_back(ScoreSample(s, Vocab()));
  const MetricsReport base = Aggregate(scores, Vocab());
  const std::string base_json = ToJson(base, "m").dump();

  size_t n_sum = 0;
  for (const auto& row : base.per_category) {
    n_sum += row.n;
    EXPECT_GE(row.category_ci.low, 0.0);
    EXPECT_LE(row.category_ci.high, 1.0);
  }
  EXPECT_EQ(n_sum, base.n_valid);
  // The rate is the correctly rounded quotient; the product recovers the
  // integer count (bitwise equality of the product is not an IEEE identity).
  EXPECT_EQ(base.validity_rate,
            static_cast<double>(base.n_valid) / static_cast<double>(base.n_total));
  EXPECT_EQ(std::llround(base.validity_rate * static_cast<double>(base.n_total)),
            static_cast<long long>(base.n_valid));
  for (double v : {base.validity_rate, base.category_acc, base.material_acc, base.color_acc,
                   base.style_f1_mean, base.occasion_f1_mean}) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    std::shuffle(scores.begin(), scores.end(), rng);
    ASSERT_EQ(ToJson(Aggregate(scores, Vocab()), "m").dump(), base_json);

    // Arbitrary partition, merged in arbitrary order.
    std::vector<MetricsAccumulator> parts(1 + rng() % 7);
    for (const auto& s : scores) parts[rng() % parts.size()].Add(s);
    MetricsAccumulator merged;
    for (size_t i = parts.size(); i-- > 0;) merged.Merge(parts[i]);
    ASSERT_EQ(ToJson(merged.Finalize(Vocab()), "m").dump(), base_json);
  }
  for (unsigned threads : {1u, 2u, 8u}) {
    EXPECT_EQ(ToJson(Evaluate(samples, Vocab(), 0.95, threads), "m").dump(), base_json);
  }
}

// Report computed by tests/oracle/golden_report.py, which shares no code
// with this library.
TEST(GoldenReportTest, ByteIdenticalToIndependentScorer) {
  const MetricsReport r = Evaluate(GoldenSamples(), Vocab(), 0.95, 4);
  EXPECT_EQ(ToJson(r, "model").dump(2) + "\n",
            ReadFile(testing::TestDataPath("golden_report.json")));
}

TEST(ReportJsonTest, RoundTrip) {
  const MetricsReport r = Evaluate(GoldenSamples(), Vocab());
  std::string method;
  const MetricsReport back =
      MetricsReportFromJson(nlohmann::json::parse(ToJson(r, "model").dump()), &method);
  EXPECT_EQ(method, "model");
  EXPECT_EQ(ToJson(back, "model").dump(), ToJson(r, "model").dump());
  EXPECT_THROW(MetricsReportFromJson(nlohmann::json::array(), &method), DataError);
}

TEST(HistogramMeanTest, SumsInFractionOrder) {
  std::map<Fraction, int64_t> h = {{{1, 3}, 3}, {{1, 1}, 2}, {{0, 1}, 1}};
  EXPECT_DOUBLE_EQ(HistogramMean(h, 6), (1.0 + 2.0) / 6.0);
  EXPECT_EQ(HistogramMean({}, 0), 0.0);
}

TEST(RoundTo6Test, MatchesDecimalRounding) {
  EXPECT_EQ(RoundTo6(0.2836247), 0.283625);
  EXPECT_EQ(RoundTo6(0.9949492), 0.994949);
  EXPECT_EQ(RoundTo6(1.0), 1.0);
  EXPECT_EQ(RoundTo6(0.0), 0.0);
}

}  // namespace
}  // namespace fashiontag
