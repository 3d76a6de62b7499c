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

#ifndef FASHIONTAG_REPORT_H_
#define FASHIONTAG_REPORT_H_

#include <string>
#include <utility>
#include <vector>

#include "fashiontag/scoring.h"

namespace fashiontag {

// Plain-text renderers for evaluation reports. Column order follows the
// published result tables so golden-text fixtures can be diffed directly.

// Method | JSON Valid | Cat. Acc. | Mat. Acc. | Style F1 | Occ. F1
std::string RenderResultsTable(
    const std::vector<std::pair<std::string, MetricsReport>>& methods);

// Category | N | Cat. Acc. | Mat. Acc. | CI on Cat. Acc., plus an Overall row.
std::string RenderPerCategoryTable(const MetricsReport& report);

struct AblationRow {
  std::string method;
  double style_f1 = 0.0;
  double occasion_f1 = 0.0;
};

// Method | Style F1 | Occ. F1, with the pool size in the heading.
std::string RenderAblationTable(const std::vector<AblationRow>& rows, size_t n);

// Results table, per-category table and the informational color line.
std::string RenderEvaluation(const std::string& method, const MetricsReport& report);

}  // namespace fashiontag

#endif  // FASHIONTAG_REPORT_H_
