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

#ifndef FASHIONTAG_VOCABULARY_H_
#define FASHIONTAG_VOCABULARY_H_

#include <string>
#include <string_view>
#include <vector>

namespace fashiontag {

// The closed value sets of the attribute schema. Loaded from a versioned
// JSON document holding five ordered arrays; order is preserved because
// reports enumerate categories in vocabulary order.
//
// Loading enforces the fixed 6 categories and 16 colors, exactly 19 style
// tags and 15 occasion tags, lowercase/nonempty/unique entries, and the
// presence of "everyday" and "unknown".
struct Vocabulary {
  static constexpr size_t kStyleTagCount = 19;
  static constexpr size_t kOccasionTagCount = 15;

  std::string version;
  std::vector<std::string> categories;
  std::vector<std::string> colors;
  std::vector<std::string> materials;
  std::vector<std::string> style_tags;
  std::vector<std::string> occasion_tags;
  // SHA-256 of the document this vocabulary was parsed from.
  std::string checksum;

  bool IsCategory(std::string_view v) const;
  bool IsColor(std::string_view v) const;
  bool IsStyleTag(std::string_view v) const;
  bool IsOccasionTag(std::string_view v) const;

  // Position of `category` in `categories`, or -1.
  int CategoryIndex(std::string_view category) const;

  // Throws RuleLoadError describing the first violated invariant.
  static Vocabulary FromJson(std::string_view document);
  static Vocabulary LoadFile(const std::string& path);

  // The shipped data/vocabulary.json, loaded once.
  static const Vocabulary& Default();
};

}  // namespace fashiontag

#endif  // FASHIONTAG_VOCABULARY_H_
