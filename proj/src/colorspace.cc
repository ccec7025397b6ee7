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

#include "dwtmark/colorspace.h"

#include <algorithm>
#include <array>

#include "dwtmark/error.h"

namespace dwtmark {
namespace {

using Matrix3 = std::array<std::array<double, 3>, 3>;

// Forward JPEG matrix with -0.08131 ending the Cr row. Every row sums to
// (1, 0, 0), so the gray axis maps to Cb = Cr = 0.5.
constexpr Matrix3 kForward = {{
    {0.29890, 0.58660, 0.11450},
    {-0.16874, -0.33126, 0.50000},
    {0.50000, -0.41869, -0.08131},
}};

constexpr Matrix3 Inverse(const Matrix3& m) {
  const double c00 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const double c01 = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  const double c02 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  const double det = m[0][0] * c00 + m[0][1] * c01 + m[0][2] * c02;
  Matrix3 inv{};
  inv[0][0] = c00 / det;
  inv[1][0] = c01 / det;
  inv[2][0] = c02 / det;
  inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
  inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
  inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
  inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
  return inv;
}

// The exact inverse of kForward. The usual 5-digit JPEG inverse
// ((1, 0, 1.402), (1, -0.34414, -0.71414), (1, 1.772, 0)) is built on a
// 0.299/0.587/0.114 luma row and misses this forward matrix by up to 5e-4
// per channel; the entries here differ from it by at most 1.1e-3.
constexpr Matrix3 kBackward = Inverse(kForward);

constexpr double kOffset[3] = {0.0, 0.5, 0.5};

}  // namespace

Pixel3 RgbToYCbCr(const Pixel3& rgb) {
  Pixel3 out;
  for (int i = 0; i < 3; ++i) {
    out[i] = kOffset[i] + kForward[i][0] * rgb[0] + kForward[i][1] * rgb[1] +
             kForward[i][2] * rgb[2];
  }
  return out;
}

Pixel3 YCbCrToRgb(const Pixel3& ycc) {
  const double centred[3] = {ycc[0] - kOffset[0], ycc[1] - kOffset[1],
                             ycc[2] - kOffset[2]};
  Pixel3 out;
  for (int i = 0; i < 3; ++i) {
    out[i] = kBackward[i][0] * centred[0] + kBackward[i][1] * centred[1] +
             kBackward[i][2] * centred[2];
  }
  return out;
}

YCbCrImage RgbToJpegYCbCr(const PlanarImage& rgb) {
  if (rgb.channels() != 3) {
    throw Error(ErrorCategory::kArity,
                "JPEG-YCbCr conversion needs an RGB image, got " +
                    std::to_string(rgb.channels()) + " channel(s)");
  }
  const int w = rgb.width();
  const int h = rgb.height();
  YCbCrImage out{Grid(w, h), Grid(w, h), Grid(w, h)};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Pixel3 ycc =
          RgbToYCbCr({rgb.at(x, y, 0), rgb.at(x, y, 1), rgb.at(x, y, 2)});
      out.y.at(x, y) = ycc[0];
      out.cb.at(x, y) = ycc[1];
      out.cr.at(x, y) = ycc[2];
    }
  }
  return out;
}

PlanarImage JpegYCbCrToRgb(const YCbCrImage& ycc) {
  if (!ycc.y.SameShape(ycc.cb) || !ycc.y.SameShape(ycc.cr)) {
    throw Error(ErrorCategory::kDimension, "Y, Cb and Cr shapes differ");
  }
  const int w = ycc.width();
  const int h = ycc.height();
  PlanarImage out(w, h, 3);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Pixel3 rgb =
          YCbCrToRgb({ycc.y.at(x, y), ycc.cb.at(x, y), ycc.cr.at(x, y)});
      for (int c = 0; c < 3; ++c) {
        out.at(x, y, c) = std::clamp(rgb[c], 0.0, 1.0);
      }
    }
  }
  return out;
}

}  // namespace dwtmark
