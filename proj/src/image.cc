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

#include "dwtmark/image.h"

#include <algorithm>
#include <string>
#include <utility>

#include "dwtmark/error.h"

namespace dwtmark {

Grid::Grid(int width, int height, double fill)
    : width_(width), height_(height) {
  if (width < 0 || height < 0) {
    throw Error(ErrorCategory::kArgument, "negative grid dimensions");
  }
  values_.assign(static_cast<size_t>(width) * static_cast<size_t>(height),
                 fill);
}

PlanarImage::PlanarImage(int width, int height, int channels, double fill) {
  if (channels != 1 && channels != 3) {
    throw Error(ErrorCategory::kArity,
                "images have 1 or 3 channels, got " + std::to_string(channels));
  }
  planes_.assign(channels, Grid(width, height, fill));
}

PlanarImage::PlanarImage(std::vector<Grid> planes) : planes_(std::move(planes)) {
  if (planes_.size() != 1 && planes_.size() != 3) {
    throw Error(ErrorCategory::kArity, "images have 1 or 3 channels, got " +
                                           std::to_string(planes_.size()));
  }
  for (const Grid& p : planes_) {
    if (!p.SameShape(planes_[0])) {
      throw Error(ErrorCategory::kDimension, "channel shapes differ");
    }
  }
}

void PlanarImage::Clamp() {
  for (Grid& p : planes_) {
    for (double& v : p.values()) v = std::clamp(v, 0.0, 1.0);
  }
}

BitMatrix::BitMatrix(int rows, int cols, uint8_t fill)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw Error(ErrorCategory::kArgument, "negative watermark dimensions");
  }
  bits_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols),
               fill ? 1 : 0);
}

BitMatrix::BitMatrix(int rows, int cols, std::vector<uint8_t> bits)
    : rows_(rows), cols_(cols), bits_(std::move(bits)) {
  if (rows < 0 || cols < 0 ||
      bits_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    throw Error(ErrorCategory::kSize,
                "bit count " + std::to_string(bits_.size()) + " != " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (uint8_t& b : bits_) b = b ? 1 : 0;
}

size_t BitMatrix::CountOnes() const {
  return static_cast<size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

}  // namespace dwtmark
