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

#include "fashiontag/color_resolver.h"

#include <jpeglib.h>
#include <png.h>

#include <algorithm>
#include <cctype>
#include <climits>
#include <csetjmp>
#include <cstring>
#include <map>

#include "fashiontag/errors.h"

namespace fashiontag {
namespace {

struct PaletteEntry {
  const char* name;
  int r, g, b;
};

// Representative sRGB anchors; several per color where one point would
// leave a common shade closer to a neighbor.
constexpr PaletteEntry kPalette[] = {
    {"black", 20, 20, 20},     {"white", 245, 245, 245},  {"gray", 128, 128, 128},
    {"gray", 190, 190, 190},   {"gray", 80, 80, 80},      {"beige", 225, 205, 170},
    {"beige", 200, 180, 150},  {"brown", 120, 75, 40},    {"brown", 90, 60, 40},
    {"blue", 50, 100, 200},    {"blue", 120, 170, 220},   {"navy", 25, 35, 80},
    {"green", 50, 140, 60},    {"green", 110, 130, 60},   {"yellow", 240, 210, 50},
    {"orange", 240, 130, 40},  {"red", 200, 30, 40},      {"red", 130, 20, 35},
    {"pink", 240, 160, 190},   {"pink", 220, 80, 140},    {"purple", 120, 60, 150},
    {"purple", 180, 140, 200}, {"metallic", 212, 175, 55}, {"metallic", 170, 170, 180},
};

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
};

void JpegErrorExit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  std::longjmp(err->jump, 1);
}

RgbImage DecodeJpeg(std::string_view bytes) {
  jpeg_decompress_struct cinfo{};
  JpegErrorManager err{};
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = JpegErrorExit;
  RgbImage image;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw DataError("corrupt JPEG image");
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, reinterpret_cast<const unsigned char*>(bytes.data()),
               static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);
  image.width = static_cast<int>(cinfo.output_width);
  image.height = static_cast<int>(cinfo.output_height);
  image.pixels.resize(static_cast<size_t>(image.width) * image.height * 3);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = image.pixels.data() + static_cast<size_t>(cinfo.output_scanline) *
                                             static_cast<size_t>(image.width) * 3;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return image;
}

RgbImage DecodePng(std::string_view bytes) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&png, bytes.data(), bytes.size())) {
    throw DataError(std::string("corrupt PNG image: ") + png.message);
  }
  png.format = PNG_FORMAT_RGB;
  RgbImage image;
  image.width = static_cast<int>(png.width);
  image.height = static_cast<int>(png.height);
  image.pixels.resize(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, image.pixels.data(), 0, nullptr)) {
    png_image_free(&png);
    throw DataError(std::string("corrupt PNG image: ") + png.message);
  }
  return image;
}

RgbImage DecodePpm(std::string_view bytes) {
  size_t pos = 2;
  auto next_int = [&]() -> long {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
    long value = 0;
    bool any = false;
    while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
      value = value * 10 + (bytes[pos++] - '0');
      any = true;
      if (value > 1'000'000) throw DataError("PPM header value out of range");
    }
    if (!any) throw DataError("malformed PPM header");
    return value;
  };
  RgbImage image;
  image.width = static_cast<int>(next_int());
  image.height = static_cast<int>(next_int());
  const long maxval = next_int();
  if (maxval != 255) throw DataError("only 8-bit PPM images are supported");
  ++pos;  // single whitespace before the raster
  const size_t need = static_cast<size_t>(image.width) * image.height * 3;
  if (pos > bytes.size() || bytes.size() - pos < need) throw DataError("truncated PPM image");
  image.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                      bytes.begin() + static_cast<std::ptrdiff_t>(pos + need));
  return image;
}

int Distance2(int r1, int g1, int b1, int r2, int g2, int b2) {
  return (r1 - r2) * (r1 - r2) + (g1 - g2) * (g1 - g2) + (b1 - b2) * (b1 - b2);
}

}  // namespace

RgbImage DecodeImage(std::string_view bytes) {
  if (bytes.size() >= 3 && static_cast<uint8_t>(bytes[0]) == 0xFF &&
      static_cast<uint8_t>(bytes[1]) == 0xD8) {
    return DecodeJpeg(bytes);
  }
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), "\x89PNG", 4) == 0) {
    return DecodePng(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') return DecodePpm(bytes);
  throw DataError("unsupported image format");
}

std::string PaletteColorResolver::Resolve(std::string_view image) const {
  return ResolvePixels(DecodeImage(image));
}

std::string PaletteColorResolver::ResolvePixels(const RgbImage& image) const {
  if (image.width <= 0 || image.height <= 0) throw DataError("empty image");
  const auto at = [&](int x, int y) {
    return image.pixels.data() + (static_cast<size_t>(y) * image.width + x) * 3;
  };
  // Background estimate: mean of the border pixels.
  long sum[3] = {0, 0, 0};
  long border = 0;
  for (int x = 0; x < image.width; ++x) {
    for (int y : {0, image.height - 1}) {
      const uint8_t* p = at(x, y);
      for (int c = 0; c < 3; ++c) sum[c] += p[c];
      ++border;
    }
  }
  for (int y = 1; y + 1 < image.height; ++y) {
    for (int x : {0, image.width - 1}) {
      const uint8_t* p = at(x, y);
      for (int c = 0; c < 3; ++c) sum[c] += p[c];
      ++border;
    }
  }
  const int bg[3] = {static_cast<int>(sum[0] / border), static_cast<int>(sum[1] / border),
                     static_cast<int>(sum[2] / border)};

  std::map<std::string, long> votes;
  long total = 0;
  const auto tally = [&](bool skip_background) {
    for (int y = 0; y < image.height; ++y) {
      for (int x = 0; x < image.width; ++x) {
        const uint8_t* p = at(x, y);
        if (skip_background && Distance2(p[0], p[1], p[2], bg[0], bg[1], bg[2]) < 30 * 30) {
          continue;
        }
        const PaletteEntry* best = &kPalette[0];
        int best_d = INT32_MAX;
        for (const auto& entry : kPalette) {
          const int d = Distance2(p[0], p[1], p[2], entry.r, entry.g, entry.b);
          if (d < best_d) {
            best_d = d;
            best = &entry;
          }
        }
        ++votes[best->name];
        ++total;
      }
    }
  };
  tally(true);
  if (total == 0) tally(false);  // uniform image: the garment is the frame

  const auto winner = std::max_element(votes.begin(), votes.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;
  });
  if (static_cast<double>(winner->second) < multi_threshold_ * static_cast<double>(total)) {
    return "multi";
  }
  return winner->first;
}

std::string_view ToString(ColorSource source) {
  switch (source) {
    case ColorSource::kModel:
      return "model";
    case ColorSource::kResolver:
      return "resolver";
    case ColorSource::kNone:
      return "none";
  }
  return "none";
}

ColorResolution ResolveColor(std::string_view image, const AttributeRecord& record,
                             const ColorResolver* resolver, const Vocabulary& vocab) {
  ColorResolution out{record, ColorSource::kModel};
  if (record.primary_color != "unknown") return out;
  out.source = ColorSource::kNone;
  if (resolver == nullptr) return out;
  try {
    std::string color = resolver->Resolve(image);
    if (color != "unknown" && vocab.IsColor(color)) {
      out.record.primary_color = std::move(color);
      out.source = ColorSource::kResolver;
    }
  } catch (const std::exception&) {
    // Resolver failures leave the color unknown.
  }
  return out;
}

}  // namespace fashiontag
