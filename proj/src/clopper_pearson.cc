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

#include "fashiontag/clopper_pearson.h"

#include <cmath>
#include <limits>

#include "fashiontag/errors.h"

namespace fashiontag {
namespace {

// Continued fraction for I_x(a, b); converges fast for x < (a+1)/(a+b+2).
double BetaContinuedFraction(double a, double b, double x) {
  constexpr int kMaxIterations = 500;
  constexpr double kEpsilon = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) break;
  }
  return h;
}

// Largest p in [0, 1] with f(p) <= target for f nondecreasing in p, found by
// bisection. Returns the midpoint of the final bracket.
template <typename F>
double Bisect(F f, double target) {
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * BetaContinuedFraction(a, b, x) / a;
  return 1.0 - front * BetaContinuedFraction(b, a, 1.0 - x) / b;
}

ConfidenceInterval ClopperPearson(int64_t k, int64_t n, double confidence) {
  if (n < 1 || k < 0 || k > n) {
    throw DataError("clopper_pearson requires 0 <= k <= n and n >= 1");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw DataError("clopper_pearson requires 0 < confidence < 1");
  }
  const double tail = (1.0 - confidence) / 2.0;
  const auto dk = static_cast<double>(k);
  const auto dn = static_cast<double>(n);

  ConfidenceInterval ci;
  if (k > 0) {
    // P(X >= k | p) rises with p.
    ci.low = Bisect([&](double p) { return RegularizedIncompleteBeta(dk, dn - dk + 1.0, p); },
                    tail);
  }
  if (k < n) {
    // P(X > k | p) = I_p(k+1, n-k) rises with p; solve 1 - that = tail.
    ci.high = Bisect(
        [&](double p) { return RegularizedIncompleteBeta(dk + 1.0, dn - dk, p); },
        1.0 - tail);
  }
  return ci;
}

}  // namespace fashiontag
