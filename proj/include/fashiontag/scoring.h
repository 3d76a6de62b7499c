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

#ifndef FASHIONTAG_SCORING_H_
#define FASHIONTAG_SCORING_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fashiontag/clopper_pearson.h"
#include "fashiontag/record.h"
#include "fashiontag/set_f1.h"
#include "fashiontag/vocabulary.h"
#include "json.hpp"

namespace fashiontag {

struct EvalSample {
  std::string item_id;
  std::string prediction_text;
  AttributeRecord gold;
};

// Per-sample outcome. Every optional is set iff json_valid.
struct SampleScore {
  bool json_valid = false;
  std::optional<bool> category_correct;
  std::optional<bool> material_correct;
  std::optional<bool> color_correct;
  std::optional<Fraction> style_f1;
  std::optional<Fraction> occasion_f1;
  std::string gold_category;
};

// Validity uses schema-only parsing. Category and material compare
// case-insensitively after trimming; color compares exactly.
SampleScore ScoreSample(const EvalSample& sample, const Vocabulary& vocab);

// Scores an already-parsed prediction.
SampleScore ScoreRecord(const AttributeRecord& predicted, const AttributeRecord& gold);

struct CategoryRow {
  std::string category;
  size_t n = 0;
  size_t category_correct = 0;
  size_t material_correct = 0;
  double category_acc = 0.0;
  double material_acc = 0.0;
  ConfidenceInterval category_ci;
};

// Accuracies and F1 means use valid samples as the denominator; n_total is
// kept so an all-samples variant can be derived. Color accuracy is
// informational only.
struct MetricsReport {
  size_t n_total = 0;
  size_t n_valid = 0;
  double confidence = 0.95;
  double validity_rate = 0.0;
  double category_acc = 0.0;
  double material_acc = 0.0;
  double color_acc = 0.0;
  double style_f1_mean = 0.0;
  double occasion_f1_mean = 0.0;
  // Categories with at least one valid sample, by n descending then
  // vocabulary order.
  std::vector<CategoryRow> per_category;
};

// Partial aggregate over a subset of samples. Add and Merge are exact:
// counts are integers and F1 values are tallied as a histogram of
// fractions, so the finalized report does not depend on sample order or on
// how the samples were partitioned.
class MetricsAccumulator {
 public:
  void Add(const SampleScore& score);
  void Merge(const MetricsAccumulator& other);

  size_t n_total() const { return n_total_; }
  size_t n_valid() const { return n_valid_; }

  // Throws DataError when no samples were added.
  MetricsReport Finalize(const Vocabulary& vocab, double confidence = 0.95) const;

 private:
  struct CategoryCounts {
    size_t n = 0;
    size_t category_correct = 0;
    size_t material_correct = 0;
  };

  size_t n_total_ = 0;
  size_t n_valid_ = 0;
  size_t category_correct_ = 0;
  size_t material_correct_ = 0;
  size_t color_correct_ = 0;
  std::map<Fraction, int64_t> style_f1_;
  std::map<Fraction, int64_t> occasion_f1_;
  std::map<std::string, CategoryCounts> per_category_;
};

// Throws DataError on empty input.
MetricsReport Aggregate(const std::vector<SampleScore>& scores, const Vocabulary& vocab,
                        double confidence = 0.95);

// Scores samples on up to `threads` workers and merges their partial
// aggregates.
MetricsReport Evaluate(const std::vector<EvalSample>& samples, const Vocabulary& vocab,
                       double confidence = 0.95, unsigned threads = 1);

// Mean of a fraction histogram, summed in ascending (num, den) order.
double HistogramMean(const std::map<Fraction, int64_t>& histogram, size_t n);

// Rounds to 6 decimals through a correctly rounded decimal conversion.
double RoundTo6(double value);

nlohmann::ordered_json ToJson(const MetricsReport& report, const std::string& method);
// Inverse of ToJson for rendering saved reports. Throws DataError.
MetricsReport MetricsReportFromJson(const nlohmann::json& value, std::string* method);

}  // namespace fashiontag

#endif  // FASHIONTAG_SCORING_H_
