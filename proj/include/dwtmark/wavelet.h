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

#ifndef DWTMARK_WAVELET_H_
#define DWTMARK_WAVELET_H_

#include <span>
#include <vector>

#include "dwtmark/image.h"

namespace dwtmark {

// CDF 9/7 lifting constants (alpha ~ -1.586134342, beta ~ -0.052980118,
// gamma ~ 0.882911076, delta ~ 0.443506852, K ~ 1.149604398) at full double
// precision. Lowpass outputs are scaled by kLiftK and highpass outputs by
// 1 / kLiftK, giving a DC gain of exactly sqrt(2) per 1-D pass.
inline constexpr double kLiftAlpha = -1.5861343420599236;
inline constexpr double kLiftBeta = -0.052980118572961414;
inline constexpr double kLiftGamma = 0.88291107553093295;
inline constexpr double kLiftDelta = 0.44350685204397115;
inline constexpr double kLiftK = 1.1496043988602412;

// Detail subbands of one decomposition level. The first letter names the
// filter applied along rows (horizontal), the second the filter along
// columns: `hl` is highpass across x and lowpass across y.
struct DetailBands {
  Grid lh;
  Grid hl;
  Grid hh;
};

// Result of an L-level 2-D DWT. details[0] is level 1 (finest, half the
// base size); details[levels - 1] is level L, the same size as `ll`.
struct SubbandPyramid {
  int levels = 0;
  int base_width = 0;
  int base_height = 0;
  Grid ll;
  std::vector<DetailBands> details;

  int SubbandCount() const { return 1 + 3 * levels; }
};

// One-dimensional transforms on an even-length signal. Forward leaves the
// lowpass half in out[0, n/2) and the highpass half in out[n/2, n).
// Whole-sample symmetric extension is used at both ends.
void Lift97Forward(std::span<const double> in, std::span<double> out);
void Lift97Inverse(std::span<const double> in, std::span<double> out);

// Rows then columns per level, recursing on LL. Throws kDimension unless
// both dimensions are divisible by 2^levels, and kArgument for levels < 1.
SubbandPyramid Dwt2Forward(const Grid& channel, int levels);

// Exact inverse of Dwt2Forward. Throws kStructure when subband shapes do not
// follow the halving chain from the base size.
Grid Dwt2Inverse(const SubbandPyramid& pyramid);

// Hard threshold: detail coefficients with |c| < t become zero; LL is kept.
// Throws kArgument for negative (or NaN) t.
SubbandPyramid ThresholdDetails(SubbandPyramid pyramid, double t);

// Sum of squared detail coefficients over all levels.
double DetailEnergy(const SubbandPyramid& pyramid);

}  // namespace dwtmark

#endif  // DWTMARK_WAVELET_H_
