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

#ifndef FASHIONTAG_COLOR_RESOLVER_H_
#define FASHIONTAG_COLOR_RESOLVER_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fashiontag/record.h"
#include "fashiontag/vocabulary.h"

namespace fashiontag {

// Maps image bytes to one of the 16 schema colors. Consulted only when the
// model answered "unknown". Implementations throw on failure.
class ColorResolver {
 public:
  virtual ~ColorResolver() = default;
  virtual std::string Resolve(std::string_view image) const = 0;
};

// Returns a fixed color. For tests and dry runs.
class FixedColorResolver : public ColorResolver {
 public:
  explicit FixedColorResolver(std::string color) : color_(std::move(color)) {}
  std::string Resolve(std::string_view) const override { return color_; }

 private:
  std::string color_;
};

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;  // row-major RGB triplets
};

// Decodes JPEG, PNG or binary PPM (P6). Throws DataError otherwise.
RgbImage DecodeImage(std::string_view bytes);

// Reference resolver, a stand-in for a zero-shot embedding classifier.
// Pixels close to the border-estimated background are dropped; each
// remaining pixel votes for its nearest palette color in RGB space. The
// plurality color wins unless it holds less than `multi_threshold` of the
// votes, in which case the answer is "multi".
class PaletteColorResolver : public ColorResolver {
 public:
  explicit PaletteColorResolver(double multi_threshold = 0.3)
      : multi_threshold_(multi_threshold) {}

  std::string Resolve(std::string_view image) const override;
  std::string ResolvePixels(const RgbImage& image) const;

 private:
  double multi_threshold_;
};

enum class ColorSource { kModel, kResolver, kNone };
std::string_view ToString(ColorSource source);

struct ColorResolution {
  AttributeRecord record;
  ColorSource source = ColorSource::kModel;
};

// Known colors pass through untouched and the resolver is not called. For
// "unknown", the resolver's answer replaces it when it is a concrete
// vocabulary color; resolver errors or out-of-vocabulary answers leave
// "unknown" with source kNone. A null resolver behaves like a failing one.
ColorResolution ResolveColor(std::string_view image, const AttributeRecord& record,
                             const ColorResolver* resolver, const Vocabulary& vocab);

}  // namespace fashiontag

#endif  // FASHIONTAG_COLOR_RESOLVER_H_
