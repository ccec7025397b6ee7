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

#include "dwtmark/wavelet.h"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "dwtmark/error.h"

namespace dwtmark {
namespace {

// x[i] += c * (x[i-1] + x[i+1]) on odd i, mirroring x[n] = x[n-2].
void PredictOdd(std::span<double> x, double c) {
  const size_t n = x.size();
  for (size_t i = 1; i < n; i += 2) {
    const double right = i + 1 < n ? x[i + 1] : x[i - 1];
    x[i] += c * (x[i - 1] + right);
  }
}

// x[i] += c * (x[i-1] + x[i+1]) on even i, mirroring x[-1] = x[1].
void UpdateEven(std::span<double> x, double c) {
  const size_t n = x.size();
  for (size_t i = 0; i < n; i += 2) {
    const double left = i > 0 ? x[i - 1] : x[i + 1];
    x[i] += c * (left + x[i + 1]);
  }
}

void CheckEvenLength(size_t in, size_t out) {
  if (in != out || in < 2 || in % 2 != 0) {
    throw Error(ErrorCategory::kDimension,
                "1-D lifting needs matching even lengths >= 2, got " +
                    std::to_string(in) + " and " + std::to_string(out));
  }
}

// Strided 1-D passes over a grid region [0, w) x [0, h) using a scratch
// buffer so that each line is lifted contiguously.
void ForwardRows(Grid& g, int w, int h, std::vector<double>& line,
                 std::vector<double>& out) {
  line.resize(w);
  out.resize(w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) line[x] = g.at(x, y);
    Lift97Forward(line, out);
    for (int x = 0; x < w; ++x) g.at(x, y) = out[x];
  }
}

void ForwardColumns(Grid& g, int w, int h, std::vector<double>& line,
                    std::vector<double>& out) {
  line.resize(h);
  out.resize(h);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) line[y] = g.at(x, y);
    Lift97Forward(line, out);
    for (int y = 0; y < h; ++y) g.at(x, y) = out[y];
  }
}

void InverseRows(Grid& g, int w, int h, std::vector<double>& line,
                 std::vector<double>& out) {
  line.resize(w);
  out.resize(w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) line[x] = g.at(x, y);
    Lift97Inverse(line, out);
    for (int x = 0; x < w; ++x) g.at(x, y) = out[x];
  }
}

void InverseColumns(Grid& g, int w, int h, std::vector<double>& line,
                    std::vector<double>& out) {
  line.resize(h);
  out.resize(h);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) line[y] = g.at(x, y);
    Lift97Inverse(line, out);
    for (int y = 0; y < h; ++y) g.at(x, y) = out[y];
  }
}

Grid CopyBlock(const Grid& src, int x0, int y0, int w, int h) {
  Grid out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) out.at(x, y) = src.at(x0 + x, y0 + y);
  }
  return out;
}

void PasteBlock(const Grid& src, Grid& dst, int x0, int y0) {
  for (int y = 0; y < src.height(); ++y) {
    for (int x = 0; x < src.width(); ++x) dst.at(x0 + x, y0 + y) = src.at(x, y);
  }
}

void CheckShape(const Grid& g, int w, int h, const std::string& name) {
  if (g.width() != w || g.height() != h) {
    throw Error(ErrorCategory::kStructure,
                name + " is " + std::to_string(g.width()) + "x" +
                    std::to_string(g.height()) + ", expected " +
                    std::to_string(w) + "x" + std::to_string(h));
  }
}

}  // namespace

void Lift97Forward(std::span<const double> in, std::span<double> out) {
  CheckEvenLength(in.size(), out.size());
  std::vector<double> x(in.begin(), in.end());
  PredictOdd(x, kLiftAlpha);
  UpdateEven(x, kLiftBeta);
  PredictOdd(x, kLiftGamma);
  UpdateEven(x, kLiftDelta);
  const size_t half = x.size() / 2;
  for (size_t k = 0; k < half; ++k) {
    out[k] = x[2 * k] * kLiftK;
    out[half + k] = x[2 * k + 1] / kLiftK;
  }
}

void Lift97Inverse(std::span<const double> in, std::span<double> out) {
  CheckEvenLength(in.size(), out.size());
  const size_t half = in.size() / 2;
  for (size_t k = 0; k < half; ++k) {
    out[2 * k] = in[k] / kLiftK;
    out[2 * k + 1] = in[half + k] * kLiftK;
  }
  UpdateEven(out, -kLiftDelta);
  PredictOdd(out, -kLiftGamma);
  UpdateEven(out, -kLiftBeta);
  PredictOdd(out, -kLiftAlpha);
}

SubbandPyramid Dwt2Forward(const Grid& channel, int levels) {
  if (levels < 1 || levels > 30) {
    throw Error(ErrorCategory::kArgument,
                "levels must be >= 1, got " + std::to_string(levels));
  }
  const int multiple = 1 << levels;
  if (channel.width() == 0 || channel.height() == 0 ||
      channel.width() % multiple != 0 || channel.height() % multiple != 0) {
    throw Error(ErrorCategory::kDimension,
                "image " + std::to_string(channel.width()) + "x" +
                    std::to_string(channel.height()) +
                    " must have dimensions divisible by " +
                    std::to_string(multiple) + " for " +
                    std::to_string(levels) + " DWT levels");
  }

  SubbandPyramid pyr;
  pyr.levels = levels;
  pyr.base_width = channel.width();
  pyr.base_height = channel.height();
  pyr.details.resize(levels);

  Grid work = channel;
  std::vector<double> line, out;
  int w = channel.width();
  int h = channel.height();
  for (int level = 0; level < levels; ++level) {
    ForwardRows(work, w, h, line, out);
    ForwardColumns(work, w, h, line, out);
    const int hw = w / 2;
    const int hh = h / 2;
    DetailBands& d = pyr.details[level];
    d.hl = CopyBlock(work, hw, 0, hw, hh);
    d.lh = CopyBlock(work, 0, hh, hw, hh);
    d.hh = CopyBlock(work, hw, hh, hw, hh);
    w = hw;
    h = hh;
  }
  pyr.ll = CopyBlock(work, 0, 0, w, h);
  return pyr;
}

Grid Dwt2Inverse(const SubbandPyramid& pyr) {
  if (pyr.levels < 1 || static_cast<int>(pyr.details.size()) != pyr.levels ||
      pyr.levels > 30) {
    throw Error(ErrorCategory::kStructure,
                "pyramid declares " + std::to_string(pyr.levels) +
                    " levels but holds " + std::to_string(pyr.details.size()));
  }
  const int multiple = 1 << pyr.levels;
  if (pyr.base_width <= 0 || pyr.base_height <= 0 ||
      pyr.base_width % multiple != 0 || pyr.base_height % multiple != 0) {
    throw Error(ErrorCategory::kStructure, "base size does not halve " +
                                               std::to_string(pyr.levels) +
                                               " times");
  }
  CheckShape(pyr.ll, pyr.base_width / multiple, pyr.base_height / multiple,
             "LL" + std::to_string(pyr.levels));
  for (int level = 1; level <= pyr.levels; ++level) {
    const int w = pyr.base_width >> level;
    const int h = pyr.base_height >> level;
    const std::string tag = std::to_string(level);
    const DetailBands& d = pyr.details[level - 1];
    CheckShape(d.lh, w, h, "LH" + tag);
    CheckShape(d.hl, w, h, "HL" + tag);
    CheckShape(d.hh, w, h, "HH" + tag);
  }

  Grid work(pyr.base_width, pyr.base_height);
  PasteBlock(pyr.ll, work, 0, 0);
  std::vector<double> line, out;
  for (int level = pyr.levels; level >= 1; --level) {
    const int hw = pyr.base_width >> level;
    const int hh = pyr.base_height >> level;
    const DetailBands& d = pyr.details[level - 1];
    PasteBlock(d.hl, work, hw, 0);
    PasteBlock(d.lh, work, 0, hh);
    PasteBlock(d.hh, work, hw, hh);
    InverseColumns(work, 2 * hw, 2 * hh, line, out);
    InverseRows(work, 2 * hw, 2 * hh, line, out);
  }
  return work;
}

SubbandPyramid ThresholdDetails(SubbandPyramid pyramid, double t) {
  if (!(t >= 0.0)) {
    throw Error(ErrorCategory::kArgument,
                "threshold must be non-negative, got " + std::to_string(t));
  }
  for (DetailBands& d : pyramid.details) {
    for (Grid* band : {&d.lh, &d.hl, &d.hh}) {
      for (double& c : band->values()) {
        if (std::fabs(c) < t) c = 0.0;
      }
    }
  }
  return pyramid;
}

double DetailEnergy(const SubbandPyramid& pyramid) {
  double energy = 0.0;
  for (const DetailBands& d : pyramid.details) {
    for (const Grid* band : {&d.lh, &d.hl, &d.hh}) {
      for (double c : band->values()) energy += c * c;
    }
  }
  return energy;
}

}  // namespace dwtmark
