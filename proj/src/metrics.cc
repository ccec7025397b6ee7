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

#include "dwtmark/metrics.h"

#include <cmath>
#include <limits>
#include <string>

#include "dwtmark/error.h"

namespace dwtmark {
namespace {

void CheckSameShape(const PlanarImage& a, const PlanarImage& b) {
  if (!a.SameShape(b) || a.channels() == 0) {
    throw Error(ErrorCategory::kArgument,
                "images differ in shape: " + std::to_string(a.width()) + "x" +
                    std::to_string(a.height()) + "x" +
                    std::to_string(a.channels()) + " vs " +
                    std::to_string(b.width()) + "x" +
                    std::to_string(b.height()) + "x" +
                    std::to_string(b.channels()));
  }
}

void CheckSameShape(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCategory::kArgument,
                "watermarks differ in shape: " + std::to_string(a.rows()) +
                    "x" + std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

bool IsConstant(const PlanarImage& img) {
  const double first = img.plane(0).values()[0];
  for (int c = 0; c < img.channels(); ++c) {
    for (double v : img.plane(c).values()) {
      if (v != first) return false;
    }
  }
  return true;
}

}  // namespace

double Psnr(const PlanarImage& a, const PlanarImage& b) {
  CheckSameShape(a, b);
  double sum = 0.0;
  size_t count = 0;
  for (int c = 0; c < a.channels(); ++c) {
    const auto va = a.plane(c).values();
    const auto vb = b.plane(c).values();
    for (size_t i = 0; i < va.size(); ++i) {
      const double d = (va[i] - vb[i]) * 255.0;
      sum += d * d;
    }
    count += va.size();
  }
  const double mse = sum / static_cast<double>(count);
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double Pearson(const PlanarImage& a, const PlanarImage& b) {
  CheckSameShape(a, b);
  if (a.plane(0).empty() || IsConstant(a) || IsConstant(b)) {
    throw Error(ErrorCategory::kUndefined,
                "correlation is undefined for a constant image");
  }
  // Two passes: means first, then centred moments.
  double mean_a = 0.0, mean_b = 0.0;
  size_t count = 0;
  for (int c = 0; c < a.channels(); ++c) {
    for (double v : a.plane(c).values()) mean_a += v;
    for (double v : b.plane(c).values()) mean_b += v;
    count += a.plane(c).size();
  }
  mean_a /= static_cast<double>(count);
  mean_b /= static_cast<double>(count);

  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (int c = 0; c < a.channels(); ++c) {
    const auto va = a.plane(c).values();
    const auto vb = b.plane(c).values();
    for (size_t i = 0; i < va.size(); ++i) {
      const double da = va[i] - mean_a;
      const double db = vb[i] - mean_b;
      sab += da * db;
      saa += da * da;
      sbb += db * db;
    }
  }
  return sab / std::sqrt(saa * sbb);
}

double NormalizedCorrelation(const BitMatrix& w, const BitMatrix& w2) {
  CheckSameShape(w, w2);
  const size_t ones = w.CountOnes();
  if (ones == 0) {
    throw Error(ErrorCategory::kArgument,
                "normalized correlation needs a reference mark with ones");
  }
  const size_t ones2 = w2.CountOnes();
  if (ones2 == 0) return 0.0;
  size_t both = 0;
  for (size_t i = 0; i < w.size(); ++i) both += w.bits()[i] & w2.bits()[i];
  return static_cast<double>(both) /
         std::sqrt(static_cast<double>(ones) * static_cast<double>(ones2));
}

double BitErrorRate(const BitMatrix& w, const BitMatrix& w2) {
  CheckSameShape(w, w2);
  if (w.size() == 0) return 0.0;
  size_t errors = 0;
  for (size_t i = 0; i < w.size(); ++i) errors += w.bits()[i] != w2.bits()[i];
  return 100.0 * static_cast<double>(errors) / static_cast<double>(w.size());
}

MetricsReport Evaluate(const PlanarImage& host, const PlanarImage& image,
                       const BitMatrix& mark, const BitMatrix& extracted) {
  MetricsReport report;
  report.psnr_db = Psnr(host, image);
  report.pearson = Pearson(host, image);
  report.nc = NormalizedCorrelation(mark, extracted);
  report.ber_percent = BitErrorRate(mark, extracted);
  return report;
}

}  // namespace dwtmark
