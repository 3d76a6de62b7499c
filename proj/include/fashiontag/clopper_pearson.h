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

#ifndef FASHIONTAG_CLOPPER_PEARSON_H_
#define FASHIONTAG_CLOPPER_PEARSON_H_

#include <cstdint>

namespace fashiontag {

struct ConfidenceInterval {
  double low = 0.0;
  double high = 1.0;
};

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1],
// evaluated by Lentz's continued fraction.
double RegularizedIncompleteBeta(double a, double b, double x);

// Exact (Clopper-Pearson) binomial interval for k successes in n trials.
//
// The lower bound solves P(X >= k | p) = alpha/2 and the upper bound
// solves P(X <= k | p) = alpha/2, with alpha = 1 - confidence. Both tails
// are evaluated through the identity P(X >= k | p) = I_p(k, n - k + 1) and
// inverted by bisection to an absolute width below 1e-12. k = 0 pins the
// lower bound to exactly 0 and k = n pins the upper bound to exactly 1.
//
// Throws DataError unless 0 <= k <= n, n >= 1 and 0 < confidence < 1.
ConfidenceInterval ClopperPearson(int64_t k, int64_t n, double confidence = 0.95);

}  // namespace fashiontag

#endif  // FASHIONTAG_CLOPPER_PEARSON_H_
