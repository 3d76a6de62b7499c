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

#ifndef FASHIONTAG_ERRORS_H_
#define FASHIONTAG_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fashiontag {

// Bad input data: malformed files, degenerate datasets, violated
// preconditions on user-supplied values.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rules or vocabulary document failed validation. `rule_index` is -1 when
// the violation is not attributable to a single rule.
class RuleLoadError : public DataError {
 public:
  RuleLoadError(std::string section, int rule_index, const std::string& violation)
      : DataError(Format(section, rule_index, violation)),
        section_(std::move(section)),
        rule_index_(rule_index) {}

  const std::string& section() const { return section_; }
  int rule_index() const { return rule_index_; }

 private:
  static std::string Format(const std::string& section, int rule_index,
                            const std::string& violation) {
    std::string out = section;
    if (rule_index >= 0) out += "[" + std::to_string(rule_index) + "]";
    return out + ": " + violation;
  }

  std::string section_;
  int rule_index_;
};

}  // namespace fashiontag

#endif  // FASHIONTAG_ERRORS_H_
