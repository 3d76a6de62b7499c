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

#ifndef FASHIONTAG_SET_F1_H_
#define FASHIONTAG_SET_F1_H_

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace fashiontag {

// Non-negative rational kept in lowest terms.
struct Fraction {
  int64_t num = 0;
  int64_t den = 1;

  static Fraction Reduced(int64_t num, int64_t den) {
    const int64_t g = std::gcd(num, den);
    return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend auto operator<=>(const Fraction&, const Fraction&) = default;
};

// Set F1 = 2|P∩G| / (|P|+|G|) as an exact fraction. Inputs must be sorted
// and duplicate-free. Two empty sets score 1; exactly one empty scores 0.
Fraction SetF1Ratio(const std::vector<std::string>& predicted,
                    const std::vector<std::string>& gold);

// Canonicalizes copies of both inputs before scoring.
double SetF1(std::vector<std::string> predicted, std::vector<std::string> gold);

}  // namespace fashiontag

#endif  // FASHIONTAG_SET_F1_H_
