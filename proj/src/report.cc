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

#include "fashiontag/report.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "fashiontag/distribution.h"

namespace fashiontag {
namespace {

std::string Percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * fraction);
  return buf;
}

std::string ThreeDecimals(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  return buf;
}

// Left-justifies to `width` terminal columns, counting UTF-8 code points
// rather than bytes so labels such as "Cat. → defaults" line up.
std::string PadRight(const std::string& text, size_t width) {
  size_t columns = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++columns;
  }
  return columns >= width ? text : text + std::string(width - columns, ' ');
}

}  // namespace

std::string RenderResultsTable(
    const std::vector<std::pair<std::string, MetricsReport>>& methods) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-28s %10s %9s %9s %8s %8s\n", "Method", "JSON Valid",
                "Cat. Acc.", "Mat. Acc.", "Style F1", "Occ. F1");
  out << line;
  for (const auto& [method, r] : methods) {
    std::snprintf(line, sizeof(line), "%s %10s %9s %9s %8s %8s\n",
                  PadRight(method, 28).c_str(),
                  Percent(r.validity_rate).c_str(), Percent(r.category_acc).c_str(),
                  Percent(r.material_acc).c_str(), ThreeDecimals(r.style_f1_mean).c_str(),
                  ThreeDecimals(r.occasion_f1_mean).c_str());
    out << line;
  }
  return out.str();
}

std::string RenderPerCategoryTable(const MetricsReport& report) {
  std::ostringstream out;
  char line[160];
  const std::string ci_header =
      std::to_string(static_cast<int>(std::lround(report.confidence * 100))) + "% CI (Cat.)";
  std::snprintf(line, sizeof(line), "%-10s %5s %9s %9s  %s\n", "Category", "N", "Cat. Acc.",
                "Mat. Acc.", ci_header.c_str());
  out << line;
  for (const auto& row : report.per_category) {
    const std::string ci =
        "[" + Percent(row.category_ci.low) + ", " + Percent(row.category_ci.high) + "]";
    std::snprintf(line, sizeof(line), "%-10s %5zu %9s %9s  %s\n",
                  DisplayName(row.category).c_str(), row.n, Percent(row.category_acc).c_str(),
                  Percent(row.material_acc).c_str(), ci.c_str());
    out << line;
  }
  std::snprintf(line, sizeof(line), "%-10s %5zu %9s %9s\n", "Overall", report.n_valid,
                Percent(report.category_acc).c_str(), Percent(report.material_acc).c_str());
  out << line;
  return out.str();
}

std::string RenderAblationTable(const std::vector<AblationRow>& rows, size_t n) {
  std::ostringstream out;
  char line[160];
  out << "Model vs. category-then-defaults baseline (N=" << n << ")\n";
  std::snprintf(line, sizeof(line), "%-32s %8s %8s\n", "Method", "Style F1", "Occ. F1");
  out << line;
  for (const auto& row : rows) {
    std::snprintf(line, sizeof(line), "%s %8s %8s\n", PadRight(row.method, 32).c_str(),
                  ThreeDecimals(row.style_f1).c_str(), ThreeDecimals(row.occasion_f1).c_str());
    out << line;
  }
  return out.str();
}

std::string RenderEvaluation(const std::string& method, const MetricsReport& report) {
  std::ostringstream out;
  out << "Results (N=" << report.n_total << ")\n"
      << RenderResultsTable({{method, report}}) << "\n"
      << "Per-category accuracy\n"
      << RenderPerCategoryTable(report) << "\n"
      << "Color Acc. (informational): " << Percent(report.color_acc) << "\n";
  return out.str();
}

}  // namespace fashiontag
