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

#ifndef DWTMARK_COLORSPACE_H_
#define DWTMARK_COLORSPACE_H_

#include <array>

#include "dwtmark/image.h"

namespace dwtmark {

// Full-range JPEG YCbCr with every component in [0, 1].
struct YCbCrImage {
  Grid y;
  Grid cb;
  Grid cr;

  int width() const { return y.width(); }
  int height() const { return y.height(); }
};

using Pixel3 = std::array<double, 3>;

// Per-pixel forward map: offset (0, 0.5, 0.5) plus the JPEG matrix.
Pixel3 RgbToYCbCr(const Pixel3& rgb);
// Per-pixel inverse map, unclamped.
Pixel3 YCbCrToRgb(const Pixel3& ycc);

// Requires a three-channel image; throws kArity otherwise.
YCbCrImage RgbToJpegYCbCr(const PlanarImage& rgb);

// Inverse transform; the result is clamped to [0, 1]. Throws kDimension if
// the three grids disagree in shape.
PlanarImage JpegYCbCrToRgb(const YCbCrImage& ycc);

}  // namespace dwtmark

#endif  // DWTMARK_COLORSPACE_H_
