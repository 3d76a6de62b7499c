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

#ifndef FASHIONTAG_IO_H_
#define FASHIONTAG_IO_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fashiontag {

// Reads a whole file. Throws DataError if it cannot be opened.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

// Splits `text` into lines, dropping blank lines and a trailing '\r'.
std::vector<std::string> SplitLines(std::string_view text);

// Parses line-delimited JSON. Blank lines are skipped; a malformed line
// throws DataError naming `source` and the 1-based line number.
std::vector<nlohmann::json> ParseJsonLines(std::string_view text,
                                           std::string_view source);

// Resolves `filename` inside the default data directory. The
// FASHIONTAG_DATA_DIR environment variable overrides the build-time path.
std::string DataPath(std::string_view filename);

}  // namespace fashiontag

#endif  // FASHIONTAG_IO_H_
