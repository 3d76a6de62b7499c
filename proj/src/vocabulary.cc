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

#include "fashiontag/vocabulary.h"

#include <algorithm>
#include <array>
#include <set>

#include "fashiontag/checksum.h"
#include "fashiontag/errors.h"
#include "fashiontag/io.h"
#include "json.hpp"

namespace fashiontag {
namespace {

constexpr std::array<std::string_view, 6> kCategories = {
    "top", "bottom", "dress", "layer", "shoes", "accessory"};
constexpr std::array<std::string_view, 16> kColors = {
    "black", "white", "gray",  "beige",  "brown",  "blue",     "navy",  "green",
    "yellow", "orange", "red", "pink", "purple", "metallic", "multi", "unknown"};

bool Contains(const std::vector<std::string>& set, std::string_view v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

std::vector<std::string> ReadEntries(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw RuleLoadError("vocabulary", -1, std::string("missing array '") + key + "'");
  }
  std::vector<std::string> out;
  std::set<std::string> seen;
  int index = 0;
  for (const auto& entry : doc[key]) {
    if (!entry.is_string()) {
      throw RuleLoadError(key, index, "entry is not a string");
    }
    std::string value = entry.get<std::string>();
    if (value.empty()) throw RuleLoadError(key, index, "empty entry");
    if (std::any_of(value.begin(), value.end(),
                    [](unsigned char c) { return c >= 'A' && c <= 'Z'; })) {
      throw RuleLoadError(key, index, "entry '" + value + "' is not lowercase");
    }
    if (!seen.insert(value).second) {
      throw RuleLoadError(key, index, "duplicate entry '" + value + "'");
    }
    out.push_back(std::move(value));
    ++index;
  }
  return out;
}

template <size_t N>
void RequireExactSet(const std::vector<std::string>& got,
                     const std::array<std::string_view, N>& want, const char* key) {
  if (got.size() != N) {
    throw RuleLoadError(key, -1, "expected " + std::to_string(N) + " entries, got " +
                                     std::to_string(got.size()));
  }
  for (std::string_view w : want) {
    if (!Contains(got, w)) {
      throw RuleLoadError(key, -1, "missing required entry '" + std::string(w) + "'");
    }
  }
}

}  // namespace

bool Vocabulary::IsCategory(std::string_view v) const { return Contains(categories, v); }
bool Vocabulary::IsColor(std::string_view v) const { return Contains(colors, v); }
bool Vocabulary::IsStyleTag(std::string_view v) const { return Contains(style_tags, v); }
bool Vocabulary::IsOccasionTag(std::string_view v) const {
  return Contains(occasion_tags, v);
}

int Vocabulary::CategoryIndex(std::string_view category) const {
  auto it = std::find(categories.begin(), categories.end(), category);
  return it == categories.end() ? -1 : static_cast<int>(it - categories.begin());
}

Vocabulary Vocabulary::FromJson(std::string_view document) {
  auto doc = nlohmann::json::parse(document, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw RuleLoadError("vocabulary", -1, "document is not a JSON object");
  }
  Vocabulary vocab;
  if (doc.contains("version") && doc["version"].is_string()) {
    vocab.version = doc["version"].get<std::string>();
  }
  vocab.categories = ReadEntries(doc, "categories");
  vocab.colors = ReadEntries(doc, "colors");
  vocab.materials = ReadEntries(doc, "materials");
  vocab.style_tags = ReadEntries(doc, "style_tags");
  vocab.occasion_tags = ReadEntries(doc, "occasion_tags");

  RequireExactSet(vocab.categories, kCategories, "categories");
  RequireExactSet(vocab.colors, kColors, "colors");
  if (vocab.style_tags.size() != kStyleTagCount) {
    throw RuleLoadError("style_tags", -1,
                        "expected 19 entries, got " + std::to_string(vocab.style_tags.size()));
  }
  if (vocab.occasion_tags.size() != kOccasionTagCount) {
    throw RuleLoadError("occasion_tags", -1,
                        "expected 15 entries, got " +
                            std::to_string(vocab.occasion_tags.size()));
  }
  if (!vocab.IsOccasionTag("everyday")) {
    throw RuleLoadError("occasion_tags", -1, "missing required entry 'everyday'");
  }
  vocab.checksum = Sha256Hex(document);
  return vocab;
}

Vocabulary Vocabulary::LoadFile(const std::string& path) {
  return FromJson(ReadFile(path));
}

const Vocabulary& Vocabulary::Default() {
  static const Vocabulary vocab = LoadFile(DataPath("vocabulary.json"));
  return vocab;
}

}  // namespace fashiontag
