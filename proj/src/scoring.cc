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

#include "fashiontag/scoring.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "fashiontag/errors.h"
#include "fashiontag/rules.h"

namespace fashiontag {
namespace {

double Ratio(size_t k, size_t n) {
  return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n);
}

}  // namespace

SampleScore ScoreRecord(const AttributeRecord& predicted, const AttributeRecord& gold) {
  SampleScore score;
  score.json_valid = true;
  score.gold_category = gold.category;
  score.category_correct = NormalizeName(predicted.category) == NormalizeName(gold.category);
  score.material_correct = NormalizeName(predicted.material) == NormalizeName(gold.material);
  score.color_correct = predicted.primary_color == gold.primary_color;
  std::vector<std::string> gold_style = gold.style_tags;
  std::vector<std::string> gold_occasion = gold.occasion_tags;
  std::vector<std::string> pred_style = predicted.style_tags;
  std::vector<std::string> pred_occasion = predicted.occasion_tags;
  Canonicalize(gold_style);
  Canonicalize(gold_occasion);
  Canonicalize(pred_style);
  Canonicalize(pred_occasion);
  score.style_f1 = SetF1Ratio(pred_style, gold_style);
  score.occasion_f1 = SetF1Ratio(pred_occasion, gold_occasion);
  return score;
}

SampleScore ScoreSample(const EvalSample& sample, const Vocabulary& vocab) {
  ParseReport parsed = ParseStrict(sample.prediction_text, vocab, ParseMode::kSchemaOnly);
  if (!parsed.valid()) {
    SampleScore score;
    score.gold_category = sample.gold.category;
    return score;
  }
  return ScoreRecord(*parsed.record, sample.gold);
}

void MetricsAccumulator::Add(const SampleScore& score) {
  ++n_total_;
  if (!score.json_valid) return;
  ++n_valid_;
  const bool cat_ok = score.category_correct.value_or(false);
  const bool mat_ok = score.material_correct.value_or(false);
  category_correct_ += cat_ok;
  material_correct_ += mat_ok;
  color_correct_ += score.color_correct.value_or(false);
  ++style_f1_[score.style_f1.value_or(Fraction{0, 1})];
  ++occasion_f1_[score.occasion_f1.value_or(Fraction{0, 1})];
  auto& row = per_category_[score.gold_category];
  ++row.n;
  row.category_correct += cat_ok;
  row.material_correct += mat_ok;
}

void MetricsAccumulator::Merge(const MetricsAccumulator& other) {
  n_total_ += other.n_total_;
  n_valid_ += other.n_valid_;
  category_correct_ += other.category_correct_;
  material_correct_ += other.material_correct_;
  color_correct_ += other.color_correct_;
  for (const auto& [f, count] : other.style_f1_) style_f1_[f] += count;
  for (const auto& [f, count] : other.occasion_f1_) occasion_f1_[f] += count;
  for (const auto& [category, counts] : other.per_category_) {
    auto& row = per_category_[category];
    row.n += counts.n;
    row.category_correct += counts.category_correct;
    row.material_correct += counts.material_correct;
  }
}

double HistogramMean(const std::map<Fraction, int64_t>& histogram, size_t n) {
  if (n == 0) return 0.0;
  double total = 0.0;
  for (const auto& [f, count] : histogram) {
    total += static_cast<double>(count * f.num) / static_cast<double>(f.den);
  }
  return total / static_cast<double>(n);
}

MetricsReport MetricsAccumulator::Finalize(const Vocabulary& vocab, double confidence) const {
  if (n_total_ == 0) throw DataError("cannot aggregate zero samples");
  MetricsReport report;
  report.n_total = n_total_;
  report.n_valid = n_valid_;
  report.confidence = confidence;
  report.validity_rate = Ratio(n_valid_, n_total_);
  report.category_acc = Ratio(category_correct_, n_valid_);
  report.material_acc = Ratio(material_correct_, n_valid_);
  report.color_acc = Ratio(color_correct_, n_valid_);
  report.style_f1_mean = HistogramMean(style_f1_, n_valid_);
  report.occasion_f1_mean = HistogramMean(occasion_f1_, n_valid_);

  for (const auto& [category, counts] : per_category_) {
    CategoryRow row;
    row.category = category;
    row.n = counts.n;
    row.category_correct = counts.category_correct;
    row.material_correct = counts.material_correct;
    row.category_acc = Ratio(counts.category_correct, counts.n);
    row.material_acc = Ratio(counts.material_correct, counts.n);
    row.category_ci = ClopperPearson(static_cast<int64_t>(counts.category_correct),
                                     static_cast<int64_t>(counts.n), confidence);
    report.per_category.push_back(std::move(row));
  }
  const auto rank = [&](const std::string& category) {
    const int index = vocab.CategoryIndex(category);
    return index < 0 ? static_cast<int>(vocab.categories.size()) : index;
  };
  std::sort(report.per_category.begin(), report.per_category.end(),
            [&](const CategoryRow& a, const CategoryRow& b) {
              if (a.n != b.n) return a.n > b.n;
              if (rank(a.category) != rank(b.category)) {
                return rank(a.category) < rank(b.category);
              }
              return a.category < b.category;
            });
  return report;
}

MetricsReport Aggregate(const std::vector<SampleScore>& scores, const Vocabulary& vocab,
                        double confidence) {
  MetricsAccumulator acc;
  for (const auto& score : scores) acc.Add(score);
  return acc.Finalize(vocab, confidence);
}

MetricsReport Evaluate(const std::vector<EvalSample>& samples, const Vocabulary& vocab,
                       double confidence, unsigned threads) {
  if (samples.empty()) throw DataError("cannot evaluate zero samples");
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(samples.size())));
  std::vector<MetricsAccumulator> partial(threads);
  std::vector<std::thread> workers;
  const size_t chunk = (samples.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      const size_t begin = t * chunk;
      const size_t end = std::min(samples.size(), begin + chunk);
      for (size_t i = begin; i < end; ++i) partial[t].Add(ScoreSample(samples[i], vocab));
    });
  }
  for (auto& w : workers) w.join();
  MetricsAccumulator total;
  for (const auto& p : partial) total.Merge(p);
  return total.Finalize(vocab, confidence);
}

double RoundTo6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json ToJson(const MetricsReport& report, const std::string& method) {
  nlohmann::ordered_json out;
  out["method"] = method;
  out["n_total"] = report.n_total;
  out["n_valid"] = report.n_valid;
  out["confidence"] = report.confidence;
  out["validity_rate"] = report.validity_rate;
  out["category_acc"] = report.category_acc;
  out["material_acc"] = report.material_acc;
  out["color_acc"] = report.color_acc;
  out["color_acc_informational"] = true;
  out["style_f1_mean"] = report.style_f1_mean;
  out["occasion_f1_mean"] = report.occasion_f1_mean;
  auto& rows = out["per_category"] = nlohmann::ordered_json::array();
  for (const auto& row : report.per_category) {
    nlohmann::ordered_json r;
    r["category"] = row.category;
    r["n"] = row.n;
    r["category_correct"] = row.category_correct;
    r["material_correct"] = row.material_correct;
    r["category_acc"] = row.category_acc;
    r["material_acc"] = row.material_acc;
    r["ci_low"] = RoundTo6(row.category_ci.low);
    r["ci_high"] = RoundTo6(row.category_ci.high);
    rows.push_back(std::move(r));
  }
  return out;
}

MetricsReport MetricsReportFromJson(const nlohmann::json& value, std::string* method) {
  try {
    MetricsReport report;
    if (method != nullptr) *method = value.value("method", std::string());
    report.n_total = value.at("n_total").get<size_t>();
    report.n_valid = value.at("n_valid").get<size_t>();
    report.confidence = value.at("confidence").get<double>();
    report.validity_rate = value.at("validity_rate").get<double>();
    report.category_acc = value.at("category_acc").get<double>();
    report.material_acc = value.at("material_acc").get<double>();
    report.color_acc = value.at("color_acc").get<double>();
    report.style_f1_mean = value.at("style_f1_mean").get<double>();
    report.occasion_f1_mean = value.at("occasion_f1_mean").get<double>();
    for (const auto& r : value.at("per_category")) {
      CategoryRow row;
      row.category = r.at("category").get<std::string>();
      row.n = r.at("n").get<size_t>();
      row.category_correct = r.at("category_correct").get<size_t>();
      row.material_correct = r.at("material_correct").get<size_t>();
      row.category_acc = r.at("category_acc").get<double>();
      row.material_acc = r.at("material_acc").get<double>();
      row.category_ci = {r.at("ci_low").get<double>(), r.at("ci_high").get<double>()};
      report.per_category.push_back(std::move(row));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed metrics report: ") + e.what());
  }
}

}  // namespace fashiontag
