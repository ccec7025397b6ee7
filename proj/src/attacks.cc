// Copyright 2026 The dwtmark Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dwtmark/attacks.h"

#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

#include "dwtmark/error.h"
#include "dwtmark/wavelet.h"

namespace dwtmark {

CropRect ParseCropRect(const std::string& text) {
  int values[4];
  const char* p = text.data();
  const char* end = p + text.size();
  for (int i = 0; i < 4; ++i) {
    const auto [next, ec] = std::from_chars(p, end, values[i]);
    if (ec != std::errc() || next == p) {
      throw Error(ErrorCategory::kArgument,
                  "crop rectangle must be x,y,w,h, got '" + text + "'");
    }
    p = next;
    if (i < 3) {
      if (p == end || *p != ',') {
        throw Error(ErrorCategory::kArgument,
                    "crop rectangle must be x,y,w,h, got '" + text + "'");
      }
      ++p;
    }
  }
  if (p != end) {
    throw Error(ErrorCategory::kArgument,
                "trailing characters in crop rectangle '" + text + "'");
  }
  return {values[0], values[1], values[2], values[3]};
}

std::string FormatCropRect(const CropRect& rect) {
  return std::to_string(rect.x) + "," + std::to_string(rect.y) + "," +
         std::to_string(rect.w) + "," + std::to_string(rect.h);
}

int CompressionLevels(int width, int height) {
  int levels = 0;
  while (levels < kMaxCompressLevels &&
         width % (2 << levels) == 0 && height % (2 << levels) == 0) {
    ++levels;
  }
  return levels;
}

PlanarImage WaveletCompress(const PlanarImage& image, double t255,
                            int levels) {
  if (!(t255 >= 0.0)) {
    throw Error(ErrorCategory::kArgument,
                "compression threshold must be non-negative, got " +
                    std::to_string(t255));
  }
  if (image.width() % 8 != 0 || image.height() % 8 != 0 ||
      image.width() == 0) {
    throw Error(ErrorCategory::kDimension,
                "image " + std::to_string(image.width()) + "x" +
                    std::to_string(image.height()) +
                    " must have dimensions divisible by 8");
  }
  if (levels == 0) levels = CompressionLevels(image.width(), image.height());

  std::vector<Grid> planes;
  planes.reserve(image.channels());
  for (int c = 0; c < image.channels(); ++c) {
    planes.push_back(Dwt2Inverse(
        ThresholdDetails(Dwt2Forward(image.plane(c), levels), t255 / 255.0)));
  }
  PlanarImage out(std::move(planes));
  out.Clamp();
  return out;
}

PlanarImage Crop(const PlanarImage& image, const CropRect& rect, double fill) {
  if (rect.x < 0 || rect.y < 0 || rect.w < 0 || rect.h < 0 ||
      rect.x > image.width() - rect.w || rect.y > image.height() - rect.h) {
    throw Error(ErrorCategory::kArgument,
                "crop rectangle " + FormatCropRect(rect) + " exceeds " +
                    std::to_string(image.width()) + "x" +
                    std::to_string(image.height()) + " image");
  }
  if (!(fill >= 0.0 && fill <= 1.0)) {
    throw Error(ErrorCategory::kArgument,
                "crop fill must lie in [0, 1], got " + std::to_string(fill));
  }
  PlanarImage out = image;
  for (int c = 0; c < out.channels(); ++c) {
    for (int y = rect.y; y < rect.y + rect.h; ++y) {
      std::fill_n(out.plane(c).row(y).begin() + rect.x, rect.w, fill);
    }
  }
  return out;
}

}  // namespace dwtmark
