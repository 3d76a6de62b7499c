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

#include "fashiontag/set_f1.h"

#include "fashiontag/record.h"

namespace fashiontag {

Fraction SetF1Ratio(const std::vector<std::string>& predicted,
                    const std::vector<std::string>& gold) {
  if (predicted.empty() && gold.empty()) return {1, 1};
  if (predicted.empty() || gold.empty()) return {0, 1};
  int64_t common = 0;
  auto p = predicted.begin();
  auto g = gold.begin();
  while (p != predicted.end() && g != gold.end()) {
    if (*p < *g) {
      ++p;
    } else if (*g < *p) {
      ++g;
    } else {
      ++common;
      ++p;
      ++g;
    }
  }
  return Fraction::Reduced(2 * common,
                           static_cast<int64_t>(predicted.size() + gold.size()));
}

double SetF1(std::vector<std::string> predicted, std::vector<std::string> gold) {
  Canonicalize(predicted);
  Canonicalize(gold);
  return SetF1Ratio(predicted, gold).value();
}

}  // namespace fashiontag
