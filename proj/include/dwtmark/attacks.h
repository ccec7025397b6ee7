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

#ifndef DWTMARK_ATTACKS_H_
#define DWTMARK_ATTACKS_H_

#include <string>

#include "dwtmark/image.h"

namespace dwtmark {

struct CropRect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool Contains(int px, int py) const {
    return px >= x && px < x + w && py >= y && py < y + h;
  }
  friend bool operator==(const CropRect&, const CropRect&) = default;
};

// Parses "x,y,w,h". Throws kArgument on malformed input.
CropRect ParseCropRect(const std::string& text);
std::string FormatCropRect(const CropRect& rect);

// Deepest compression decomposition used when `levels` is 0.
inline constexpr int kMaxCompressLevels = 5;

// Largest L <= kMaxCompressLevels with both dimensions divisible by 2^L.
int CompressionLevels(int width, int height);

// Wavelet compression: per channel, forward DWT, hard-threshold the details
// at t255 / 255, inverse DWT, clamp to [0, 1]. `levels` = 0 selects
// CompressionLevels(). Requires dimensions divisible by 8 (kDimension) and
// t255 >= 0 (kArgument).
PlanarImage WaveletCompress(const PlanarImage& image, double t255,
                            int levels = 0);

// Replaces every sample inside `rect` with `fill`. Throws kArgument when the
// rectangle leaves the image or fill is outside [0, 1].
PlanarImage Crop(const PlanarImage& image, const CropRect& rect,
                 double fill = 0.0);

}  // namespace dwtmark

#endif  // DWTMARK_ATTACKS_H_
