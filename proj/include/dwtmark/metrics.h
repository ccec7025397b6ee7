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

#ifndef DWTMARK_METRICS_H_
#define DWTMARK_METRICS_H_

#include "dwtmark/image.h"

namespace dwtmark {

struct MetricsReport {
  double psnr_db = 0.0;
  double pearson = 0.0;
  double nc = 0.0;
  double ber_percent = 0.0;
};

// PSNR on the 0-255 scale over all samples; +inf when the images match.
double Psnr(const PlanarImage& a, const PlanarImage& b);

// Pearson correlation over all samples of all channels jointly. Throws
// kUndefined when either image has zero variance.
double Pearson(const PlanarImage& a, const PlanarImage& b);

// sum(w * w2) / sqrt(sum(w^2) * sum(w2^2)) on {0,1} bits; 0 if w2 has no
// ones. Throws kArgument if `w` has no ones or the shapes differ.
double NormalizedCorrelation(const BitMatrix& w, const BitMatrix& w2);

// Percentage of differing bits.
double BitErrorRate(const BitMatrix& w, const BitMatrix& w2);

MetricsReport Evaluate(const PlanarImage& host, const PlanarImage& image,
                       const BitMatrix& mark, const BitMatrix& extracted);

}  // namespace dwtmark

#endif  // DWTMARK_METRICS_H_
