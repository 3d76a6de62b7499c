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

#include "fashiontag/cli.h"

#include <filesystem>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "CLI11.hpp"
#include "fashiontag/baseline.h"
#include "fashiontag/batch.h"
#include "fashiontag/color_resolver.h"
#include "fashiontag/dataset_split.h"
#include "fashiontag/distribution.h"
#include "fashiontag/errors.h"
#include "fashiontag/expansion.h"
#include "fashiontag/io.h"
#include "fashiontag/label_mapper.h"
#include "fashiontag/report.h"
#include "fashiontag/scoring.h"
#include "json.hpp"

namespace fashiontag {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void Diagnose(std::ostream& err, nlohmann::ordered_json entry) {
  err << entry.dump(-1, ' ', true, nlohmann::json::error_handler_t::replace) << "\n";
}

void Info(std::ostream& err, const std::string& message,
          nlohmann::ordered_json fields = nlohmann::ordered_json::object()) {
  nlohmann::ordered_json entry;
  entry["level"] = "info";
  entry["message"] = message;
  for (auto& [k, v] : fields.items()) entry[k] = v;
  Diagnose(err, std::move(entry));
}

int Fail(std::ostream& err, int code, const std::string& kind, const std::string& message,
         nlohmann::ordered_json fields = nlohmann::ordered_json::object()) {
  nlohmann::ordered_json entry;
  entry["level"] = "error";
  entry["error"] = kind;
  entry["message"] = message;
  for (auto& [k, v] : fields.items()) entry[k] = v;
  entry["exit_code"] = code;
  Diagnose(err, std::move(entry));
  return code;
}

std::string Compact(const nlohmann::ordered_json& value) {
  return value.dump(-1, ' ', true, nlohmann::json::error_handler_t::replace);
}

std::vector<MappedExample> ReadMapped(const std::string& path, const Vocabulary& vocab) {
  std::vector<MappedExample> out;
  for (const auto& line : ParseJsonLines(ReadFile(path), path)) {
    out.push_back(MappedExampleFromJson(line, vocab));
  }
  return out;
}

// Gold lines are split-output rows ({raw, record}) or {item_id, record}.
std::vector<std::pair<std::string, AttributeRecord>> ReadGold(const std::string& path,
                                                              const Vocabulary& vocab) {
  std::vector<std::pair<std::string, AttributeRecord>> gold;
  std::unordered_set<std::string> seen;
  for (const auto& line : ParseJsonLines(ReadFile(path), path)) {
    std::string id;
    AttributeRecord record;
    if (line.is_object() && line.contains("raw")) {
      MappedExample example = MappedExampleFromJson(line, vocab);
      id = example.raw.item_id;
      record = std::move(example.record);
    } else {
      if (!line.is_object() || !line.contains("item_id") || !line["item_id"].is_string() ||
          !line.contains("record")) {
        throw DataError(path + ": gold lines need item_id and record");
      }
      id = line["item_id"].get<std::string>();
      ParseReport parsed = ParseStrictValue(line["record"], vocab, ParseMode::kVocabularyChecked);
      if (!parsed.valid()) throw DataError(path + ": invalid gold record for '" + id + "'");
      record = std::move(*parsed.record);
    }
    if (!seen.insert(id).second) throw DataError(path + ": duplicate item_id '" + id + "'");
    gold.emplace_back(std::move(id), std::move(record));
  }
  if (gold.empty()) throw DataError(path + ": no gold records");
  return gold;
}

std::unordered_map<std::string, std::string> ReadPredictions(const std::string& path) {
  std::unordered_map<std::string, std::string> predictions;
  for (const auto& line : ParseJsonLines(ReadFile(path), path)) {
    if (!line.is_object() || !line.contains("item_id") || !line["item_id"].is_string() ||
        !line.contains("prediction_text") || !line["prediction_text"].is_string()) {
      throw DataError(path + ": prediction lines need string item_id and prediction_text");
    }
    const std::string id = line["item_id"].get<std::string>();
    if (!predictions.emplace(id, line["prediction_text"].get<std::string>()).second) {
      throw DataError(path + ": duplicate prediction for '" + id + "'");
    }
  }
  if (predictions.empty()) throw DataError(path + ": no predictions");
  return predictions;
}

std::vector<EvalSample> JoinSamples(
    const std::vector<std::pair<std::string, AttributeRecord>>& gold,
    std::unordered_map<std::string, std::string> predictions) {
  std::vector<EvalSample> samples;
  for (const auto& [id, record] : gold) {
    auto it = predictions.find(id);
    if (it == predictions.end()) throw DataError("no prediction for gold item '" + id + "'");
    samples.push_back({id, std::move(it->second), record});
    predictions.erase(it);
  }
  if (!predictions.empty()) {
    throw DataError("prediction for unknown item '" + predictions.begin()->first + "'");
  }
  return samples;
}

SplitRatios ParseRatios(const std::string& text) {
  SplitRatios ratios{};
  std::stringstream ss(text);
  std::string part;
  size_t i = 0;
  while (std::getline(ss, part, ',')) {
    if (i >= 3) throw UsageError("--ratios needs exactly three comma-separated values");
    try {
      size_t used = 0;
      ratios[i] = std::stod(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw UsageError("--ratios value '" + part + "' is not a number");
    }
    ++i;
  }
  if (i != 3) throw UsageError("--ratios needs exactly three comma-separated values");
  return ratios;
}

struct Options {
  std::string vocab_path = DataPath("vocabulary.json");

  std::string rules_path = DataPath("label_rules.json");
  std::string in_path;
  std::string out_path;
  bool allow_uncovered = false;

  uint64_t seed = 0;
  std::string ratios = "0.8,0.1,0.1";
  std::string out_dir;
  std::string split_rules_path;

  std::string gold_path;
  std::string pred_path;
  std::string report_path;
  std::string method = "model";
  double confidence = 0.95;
  unsigned threads = 1;

  std::string train_path;
  bool oracle = false;
  std::string table_out;

  std::string image_path;
  std::string batch_path;
  std::string primary_url;
  std::string fallback_url;
  std::string fallback_api_key;
  bool expand = false;
  std::string expansion_rules_path = DataPath("expansion_rules.json");
  std::string resolver = "palette";
  unsigned parallelism = 4;
  long initial_timeout_ms = 120'000;
  long timeout_ms = 30'000;
  int retries = 2;
  long backoff_ms = 2'000;
  std::string summary_path;
};

int RunIngest(const Options& o, std::ostream& out, std::ostream& err) {
  const Vocabulary vocab = Vocabulary::LoadFile(o.vocab_path);
  const RuleSet rules = LoadRuleSetFile(o.rules_path, vocab);
  Info(err, "loaded vocabulary and rules",
       {{"vocabulary_checksum", vocab.checksum}, {"ruleset_checksum", rules.checksum}});

  std::vector<RawAnnotation> rows;
  for (const auto& line : ParseJsonLines(ReadFile(o.in_path), o.in_path)) {
    rows.push_back(RawAnnotationFromJson(line));
  }
  IngestResult result = Ingest(rows, rules, vocab);
  if (!result.uncovered_categories.empty() && !o.allow_uncovered) {
    return Fail(err, kExitData, "data_error",
                "fine categories not covered by any category rule",
                {{"uncovered", result.uncovered_categories}});
  }
  if (result.mapped.empty()) throw DataError("no rows survived label mapping");

  std::string body;
  std::vector<AttributeRecord> records;
  for (const auto& example : result.mapped) {
    body += Compact(ToJson(example)) + "\n";
    records.push_back(example.record);
  }
  WriteFile(o.out_path, body);
  nlohmann::ordered_json meta;
  meta["ruleset_checksum"] = rules.checksum;
  meta["vocabulary_checksum"] = vocab.checksum;
  meta["input_rows"] = rows.size();
  meta["mapped"] = result.mapped.size();
  meta["discarded"] = result.discarded;
  meta["uncovered_categories"] = result.uncovered_categories;
  WriteFile(o.out_path + ".meta.json", meta.dump(2) + "\n");
  Info(err, "ingest complete",
       {{"input_rows", rows.size()},
        {"mapped", result.mapped.size()},
        {"discarded", result.discarded}});

  out << RenderDistributionTable(ComputeCategoryDistribution(records, vocab));
  return kExitOk;
}

int RunSplit(const Options& o, std::ostream& out, std::ostream& err) {
  const Vocabulary vocab = Vocabulary::LoadFile(o.vocab_path);
  const SplitRatios ratios = ParseRatios(o.ratios);
  std::string checksum;
  if (!o.split_rules_path.empty()) {
    checksum = LoadRuleSetFile(o.split_rules_path, vocab).checksum;
  } else if (fs::exists(o.in_path + ".meta.json")) {
    auto meta = nlohmann::json::parse(ReadFile(o.in_path + ".meta.json"), nullptr, false);
    if (meta.is_object()) checksum = meta.value("ruleset_checksum", std::string());
  }
  if (checksum.empty()) {
    Info(err, "ruleset checksum unknown; pass --rules to record it");
  }

  DatasetSplit split = SplitDataset(ReadMapped(o.in_path, vocab), ratios, o.seed, checksum);
  fs::create_directories(o.out_dir);
  const auto write = [&](const char* name, const std::vector<MappedExample>& part) {
    std::string body;
    for (const auto& example : part) body += Compact(ToJson(example)) + "\n";
    WriteFile((fs::path(o.out_dir) / name).string(), body);
  };
  write("train.jsonl", split.train);
  write("val.jsonl", split.val);
  write("test.jsonl", split.test);
  const auto manifest = SplitManifest(split);
  WriteFile((fs::path(o.out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  out << manifest.dump(2) << "\n";
  return kExitOk;
}

int RunEval(const Options& o, std::ostream& out, std::ostream&) {
  const Vocabulary vocab = Vocabulary::LoadFile(o.vocab_path);
  auto gold = ReadGold(o.gold_path, vocab);
  auto samples = JoinSamples(gold, ReadPredictions(o.pred_path));
  const MetricsReport report = Evaluate(samples, vocab, o.confidence, o.threads);
  if (!o.report_path.empty()) {
    WriteFile(o.report_path, ToJson(report, o.method).dump(2) + "\n");
  }
  out << RenderEvaluation(o.method, report);
  return kExitOk;
}

int RunBaseline(const Options& o, std::ostream& out, std::ostream&) {
  const Vocabulary vocab = Vocabulary::LoadFile(o.vocab_path);
  if (!o.oracle && o.pred_path.empty()) {
    throw UsageError("baseline needs --pred, --oracle, or both");
  }
  std::vector<AttributeRecord> train;
  for (auto& example : ReadMapped(o.train_path, vocab)) train.push_back(std::move(example.record));
  const DefaultTagTable table = DefaultTagTable::Build(train, vocab);
  if (!o.table_out.empty()) WriteFile(o.table_out, table.ToJson(vocab).dump(2) + "\n");

  auto gold = ReadGold(o.gold_path, vocab);
  std::vector<AblationRow> rows;
  std::vector<EvalSample> samples;
  if (!o.pred_path.empty()) {
    samples = JoinSamples(gold, ReadPredictions(o.pred_path));
    const MetricsReport direct = Evaluate(samples, vocab, o.confidence);
    rows.push_back({o.method + " (direct)", direct.style_f1_mean, direct.occasion_f1_mean});
    std::vector<std::optional<std::string>> predicted;
    for (const auto& sample : samples) {
      ParseReport parsed = ParseStrict(sample.prediction_text, vocab);
      predicted.push_back(parsed.valid() ? std::optional(parsed.record->category)
                                         : std::nullopt);
    }
    const MetricsReport via_model = EvaluateBaseline(samples, predicted, table, vocab);
    rows.push_back({"Cat. → defaults", via_model.style_f1_mean, via_model.occasion_f1_mean});
  } else {
    for (const auto& [id, record] : gold) samples.push_back({id, "", record});
  }
  if (o.oracle) {
    std::vector<std::optional<std::string>> oracle;
    for (const auto& sample : samples) oracle.emplace_back(sample.gold.category);
    const MetricsReport via_gold = EvaluateBaseline(samples, oracle, table, vocab);
    rows.push_back(
        {"Cat. → defaults (oracle)", via_gold.style_f1_mean, via_gold.occasion_f1_mean});
  }
  out << RenderAblationTable(rows, samples.size());
  return kExitOk;
}

BackendConfig MakeConfig(const Options& o, const std::string& url, const std::string& key) {
  BackendConfig config;
  config.endpoint_url = url;
  config.initial_timeout = Millis{o.initial_timeout_ms};
  config.subsequent_timeout = Millis{o.timeout_ms};
  config.max_retries = o.retries;
  config.retry_backoff = {Millis{o.backoff_ms}};
  config.api_key = key;
  config.Validate();
  return config;
}

int RunAnalyze(const Options& o, std::ostream& out, std::ostream& err,
               const CliEnvironment& env) {
  if (o.image_path.empty() == o.batch_path.empty()) {
    throw UsageError("analyze needs exactly one of --image or --batch");
  }
  if (o.primary_url.empty()) {
    throw UsageError("analyze needs --url or FASHIONTAG_PRIMARY_URL");
  }
  const Vocabulary vocab = Vocabulary::LoadFile(o.vocab_path);
  const BackendConfig primary = MakeConfig(o, o.primary_url, "");
  std::optional<BackendConfig> fallback;
  if (!o.fallback_url.empty()) fallback = MakeConfig(o, o.fallback_url, o.fallback_api_key);

  std::unique_ptr<ColorResolver> resolver;
  if (o.resolver == "palette") {
    resolver = std::make_unique<PaletteColorResolver>();
  } else if (o.resolver != "none") {
    throw UsageError("--resolver must be 'palette' or 'none'");
  }
  std::shared_ptr<Transport> transport =
      env.transport ? env.transport : std::make_shared<HttpTransport>();
  Gateway gateway(transport, vocab, env.sleeper);

  if (!o.batch_path.empty()) {
    const ExpansionRules rules = LoadExpansionRulesFile(o.expansion_rules_path, vocab);
    if (o.out_path.empty()) throw UsageError("analyze --batch needs --out");
    BatchOptions options;
    options.parallelism = o.parallelism;
    options.primary = primary;
    options.fallback = fallback;
    options.resolver = resolver.get();
    BatchResult result =
        BatchAnalyze(SplitLines(ReadFile(o.batch_path)), gateway, rules, options);
    std::string body;
    for (const auto& item : result.items) {
      if (item.record) body += SerializeCompact(*item.record) + "\n";
    }
    WriteFile(o.out_path, body);
    const auto summary = result.stats.Summary();
    if (!o.summary_path.empty()) WriteFile(o.summary_path, summary.dump(2) + "\n");
    out << summary.dump(2) << "\n";
    if (result.stats.succeeded() == 0) {
      return Fail(err, kExitBackend, "backend_error", "every item in the batch failed");
    }
    return kExitOk;
  }

  const std::string image = ReadFile(o.image_path);
  AnalyzeResult result = gateway.AnalyzeWithFallback(image, primary, fallback);
  ColorResolution color = ResolveColor(image, result.record, resolver.get(), vocab);
  Info(err, "analyzed",
       {{"backend", ToString(result.backend_used)},
        {"attempts", result.attempts},
        {"latency_ms", result.latency.count()},
        {"color_resolved_by", ToString(color.source)}});
  if (o.expand) {
    const ExpansionRules rules = LoadExpansionRulesFile(o.expansion_rules_path, vocab);
    out << SerializeCompact(Expand(color.record, rules)) << "\n";
  } else {
    out << SerializeCompact(color.record) << "\n";
  }
  return kExitOk;
}

int RunExpand(const Options& o, std::ostream& out, std::ostream&) {
  const Vocabulary vocab = Vocabulary::LoadFile(o.vocab_path);
  const ExpansionRules rules = LoadExpansionRulesFile(o.expansion_rules_path, vocab);
  const std::string text = ReadFile(o.in_path);
  size_t line_no = 0;
  std::string body;
  for (const auto& line : SplitLines(text)) {
    ++line_no;
    ParseReport parsed = ParseStrict(line, vocab, ParseMode::kVocabularyChecked);
    if (!parsed.valid()) {
      throw DataError(o.in_path + ": record " + std::to_string(line_no) + " is " +
                      std::string(ToString(parsed.outcome)) + ": " + parsed.detail);
    }
    body += SerializeCompact(Expand(*parsed.record, rules)) + "\n";
  }
  out << body;
  return kExitOk;
}

int RunReport(const Options& o, std::ostream& out, std::ostream&) {
  auto value = nlohmann::json::parse(ReadFile(o.in_path), nullptr, false);
  if (value.is_discarded()) throw DataError(o.in_path + ": not JSON");
  std::string method;
  const MetricsReport report = MetricsReportFromJson(value, &method);
  out << RenderEvaluation(method.empty() ? "model" : method, report);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
           const CliEnvironment& env) {
  Options o;
  CLI::App app{"Structured fashion-attribute toolkit", "fashiontag"};
  app.set_config("--config", "", "TOML/INI file supplying flag defaults");
  app.add_option("--vocab", o.vocab_path, "Vocabulary JSON file")->capture_default_str();
  app.require_subcommand(1);

  auto* ingest = app.add_subcommand("ingest", "Map raw annotations to attribute records");
  ingest->add_option("--rules", o.rules_path, "Label rules JSON file")->capture_default_str();
  ingest->add_option("--in", o.in_path, "Raw annotations (JSONL)")->required();
  ingest->add_option("--out", o.out_path, "Mapped examples (JSONL)")->required();
  ingest->add_flag("--allow-uncovered", o.allow_uncovered,
                   "Discard fine categories no rule covers instead of failing");

  auto* split = app.add_subcommand("split", "Seeded train/val/test split");
  split->add_option("--in", o.in_path, "Mapped examples (JSONL)")->required();
  split->add_option("--seed", o.seed, "Shuffle seed")->required();
  split->add_option("--ratios", o.ratios, "Three fractions summing to 1")->capture_default_str();
  split->add_option("--out-dir", o.out_dir, "Output directory")->required();
  split->add_option("--rules", o.split_rules_path, "Rules file to checksum in the manifest");

  auto* eval = app.add_subcommand("eval", "Score predictions against gold records");
  eval->add_option("--gold", o.gold_path, "Gold records (JSONL)")->required();
  eval->add_option("--pred", o.pred_path, "Predictions (JSONL)")->required();
  eval->add_option("--report", o.report_path, "Write the JSON report here");
  eval->add_option("--method", o.method, "Method label")->capture_default_str();
  eval->add_option("--confidence", o.confidence, "CI confidence level")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  eval->add_option("--threads", o.threads, "Scoring threads")->capture_default_str();

  auto* baseline = app.add_subcommand("baseline", "Category-then-defaults ablation");
  baseline->add_option("--train", o.train_path, "Training split (JSONL)")->required();
  baseline->add_option("--gold", o.gold_path, "Evaluation pool (JSONL)")->required();
  baseline->add_option("--pred", o.pred_path, "Model predictions (JSONL)");
  baseline->add_flag("--oracle", o.oracle, "Use gold categories");
  baseline->add_option("--method", o.method, "Method label")->capture_default_str();
  baseline->add_option("--table-out", o.table_out, "Write the default tag table here");

  auto* analyze = app.add_subcommand("analyze", "Call the inference backend");
  analyze->add_option("--image", o.image_path, "Image file");
  analyze->add_option("--batch", o.batch_path, "Newline-delimited image paths/URLs");
  analyze->add_option("--out", o.out_path, "Batch output (JSONL)");
  analyze->add_option("--summary", o.summary_path, "Batch summary JSON file");
  analyze->add_option("--url", o.primary_url, "Primary endpoint")
      ->envname("FASHIONTAG_PRIMARY_URL");
  analyze->add_option("--fallback-url", o.fallback_url, "Fallback endpoint")
      ->envname("FASHIONTAG_FALLBACK_URL");
  analyze->add_option("--fallback-api-key", o.fallback_api_key, "Fallback bearer token")
      ->envname("FASHIONTAG_FALLBACK_API_KEY");
  analyze->add_option("--parallelism", o.parallelism, "Batch requests in flight")
      ->envname("FASHIONTAG_PARALLELISM")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_flag("--expand", o.expand, "Print the 8-field production record");
  analyze->add_option("--expansion-rules", o.expansion_rules_path, "Expansion rules JSON")
      ->capture_default_str();
  analyze->add_option("--resolver", o.resolver, "Color resolver: palette or none")
      ->capture_default_str();
  analyze->add_option("--initial-timeout-ms", o.initial_timeout_ms)->capture_default_str();
  analyze->add_option("--timeout-ms", o.timeout_ms)->capture_default_str();
  analyze->add_option("--retries", o.retries)->capture_default_str();
  analyze->add_option("--backoff-ms", o.backoff_ms)->capture_default_str();

  auto* expand = app.add_subcommand("expand", "Expand records to the production schema");
  expand->add_option("--in", o.in_path, "Compact records (JSONL)")->required();
  expand->add_option("--rules", o.expansion_rules_path, "Expansion rules JSON")
      ->capture_default_str();

  auto* report = app.add_subcommand("report", "Render a saved evaluation report");
  report->add_option("--in", o.in_path, "JSON report from eval --report")->required();

  std::vector<const char*> argv = {"fashiontag"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    return Fail(err, kExitUsage, "usage_error", e.what());
  }

  try {
    if (ingest->parsed()) return RunIngest(o, out, err);
    if (split->parsed()) return RunSplit(o, out, err);
    if (eval->parsed()) return RunEval(o, out, err);
    if (baseline->parsed()) return RunBaseline(o, out, err);
    if (analyze->parsed()) return RunAnalyze(o, out, err, env);
    if (expand->parsed()) return RunExpand(o, out, err);
    if (report->parsed()) return RunReport(o, out, err);
    return Fail(err, kExitUsage, "usage_error", "no subcommand");
  } catch (const UsageError& e) {
    return Fail(err, kExitUsage, "usage_error", e.what());
  } catch (const FallbackExhaustedError& e) {
    return Fail(err, kExitBackend, "backend_error", e.what(),
                {{"primary", {{"kind", ToString(e.primary().kind())},
                              {"endpoint", e.primary().endpoint()},
                              {"attempts", e.primary().attempts()}}},
                 {"fallback", {{"kind", ToString(e.fallback().kind())},
                               {"endpoint", e.fallback().endpoint()},
                               {"attempts", e.fallback().attempts()}}}});
  } catch (const BackendError& e) {
    nlohmann::ordered_json fields = {{"kind", ToString(e.kind())},
                                     {"endpoint", e.endpoint()},
                                     {"attempts", e.attempts()}};
    if (!e.raw_text().empty()) fields["raw_text"] = e.raw_text();
    return Fail(err, kExitBackend, "backend_error", e.what(), std::move(fields));
  } catch (const DataError& e) {
    return Fail(err, kExitData, "data_error", e.what());
  } catch (const fs::filesystem_error& e) {
    return Fail(err, kExitData, "data_error", e.what());
  }
}

}  // namespace fashiontag
