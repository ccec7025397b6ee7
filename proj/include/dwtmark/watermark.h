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

#ifndef DWTMARK_WATERMARK_H_
#define DWTMARK_WATERMARK_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dwtmark/image.h"

namespace dwtmark {

// Decomposition depth used for embedding; the mark lives in LL3.
inline constexpr int kEmbedLevels = 3;
inline constexpr double kDefaultDelta = 1.0 / 16.0;

using BitSequence = std::vector<uint8_t>;

// Everything extraction needs besides the image: the encryption sequence R,
// the mark shape and where (and how coarsely) it was quantized into LL.
struct WatermarkKey {
  BitSequence r;
  int rows = 0;
  int cols = 0;
  int levels = kEmbedLevels;
  std::string subband = "LL";
  double delta = kDefaultDelta;
  int offset = 0;
  uint64_t seed = 0;

  size_t bit_count() const {
    return static_cast<size_t>(rows) * static_cast<size_t>(cols);
  }

  // Throws kIntegrity if |R| != rows * cols, delta <= 0, or the locator is
  // not a supported one.
  void Validate() const;

  friend bool operator==(const WatermarkKey&, const WatermarkKey&) = default;
};

struct EmbedResult {
  PlanarImage image;
  WatermarkKey key;
};

// n pseudo-random bits: the top bit of successive SplitMix64 outputs.
BitSequence GenerateR(size_t n, uint64_t seed);

BitSequence XorBits(std::span<const uint8_t> a, std::span<const uint8_t> b);

// The quantizer bin index round(c / delta), rounding half away from zero.
int64_t QuantizerIndex(double coefficient, double delta);

// Rewrites each coefficient to the centre of the nearest quantizer bin whose
// index parity equals the corresponding bit.
void EmbedBitsInCoefficients(std::span<double> coefficients,
                             std::span<const uint8_t> bits, double delta);
BitSequence ExtractBitsFromCoefficients(std::span<const double> coefficients,
                                        double delta);

// Number of LL coefficients available in an image of this size.
size_t EmbeddingCapacity(int width, int height, int levels = kEmbedLevels);

// Embeds `mark` XOR R(seed) into the first n raster-order LL3 coefficients
// (starting at `offset`) of the image's JPEG-YCbCr luma. Throws kDimension
// for sizes not divisible by 8 and kCapacity when the mark does not fit.
EmbedResult Embed(const PlanarImage& host, const BitMatrix& mark,
                  uint64_t seed, double delta = kDefaultDelta,
                  int offset = 0);

// Blind extraction: needs only the watermarked (possibly attacked) image and
// the key.
BitMatrix Extract(const PlanarImage& image, const WatermarkKey& key);

// Key file I/O (WMKEY1 text format).
std::string SerializeKey(const WatermarkKey& key);
WatermarkKey ParseKey(const std::string& text);
void SaveKey(const WatermarkKey& key, const std::string& path);
WatermarkKey LoadKey(const std::string& path);

}  // namespace dwtmark

#endif  // DWTMARK_WATERMARK_H_
