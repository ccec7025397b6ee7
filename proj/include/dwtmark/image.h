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

#ifndef DWTMARK_IMAGE_H_
#define DWTMARK_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dwtmark {

// Row-major W x H grid of doubles. The pixel plane and the wavelet subband
// type.
class Grid {
 public:
  Grid() = default;
  Grid(int width, int height, double fill = 0.0);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double& at(int x, int y) { return values_[Index(x, y)]; }
  double at(int x, int y) const { return values_[Index(x, y)]; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  std::span<double> row(int y) {
    return std::span<double>(values_).subspan(Index(0, y), width_);
  }
  std::span<const double> row(int y) const {
    return std::span<const double>(values_).subspan(Index(0, y), width_);
  }

  bool SameShape(const Grid& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  size_t Index(int x, int y) const {
    return static_cast<size_t>(y) * static_cast<size_t>(width_) +
           static_cast<size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> values_;
};

// W x H raster with one (gray) or three (RGB) planes. Public operations keep
// every sample in [0, 1].
class PlanarImage {
 public:
  PlanarImage() = default;
  PlanarImage(int width, int height, int channels, double fill = 0.0);
  // Takes ownership of the planes; they must share a shape and there must be
  // one or three of them.
  explicit PlanarImage(std::vector<Grid> planes);

  int width() const { return planes_.empty() ? 0 : planes_[0].width(); }
  int height() const { return planes_.empty() ? 0 : planes_[0].height(); }
  int channels() const { return static_cast<int>(planes_.size()); }

  Grid& plane(int c) { return planes_[c]; }
  const Grid& plane(int c) const { return planes_[c]; }

  double& at(int x, int y, int c) { return planes_[c].at(x, y); }
  double at(int x, int y, int c) const { return planes_[c].at(x, y); }

  bool SameShape(const PlanarImage& other) const {
    return channels() == other.channels() && width() == other.width() &&
           height() == other.height();
  }

  // Clamps every sample into [0, 1].
  void Clamp();

  friend bool operator==(const PlanarImage&, const PlanarImage&) = default;

 private:
  std::vector<Grid> planes_;
};

// rows x cols binary matrix stored row-major as 0/1 bytes. Serializes to the
// watermark bit sequence W in raster order.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols, uint8_t fill = 0);
  BitMatrix(int rows, int cols, std::vector<uint8_t> bits);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return bits_.size(); }

  uint8_t& at(int r, int c) { return bits_[Index(r, c)]; }
  uint8_t at(int r, int c) const { return bits_[Index(r, c)]; }

  std::span<const uint8_t> bits() const { return bits_; }
  size_t CountOnes() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  size_t Index(int r, int c) const {
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) +
           static_cast<size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint8_t> bits_;
};

}  // namespace dwtmark

#endif  // DWTMARK_IMAGE_H_
