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

#ifndef DWTMARK_BENCH_H_
#define DWTMARK_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dwtmark/attacks.h"
#include "dwtmark/image.h"
#include "dwtmark/metrics.h"
#include "dwtmark/watermark.h"

namespace dwtmark {

struct BenchScenario {
  enum class Kind { kClean, kCompress, kCrop };

  Kind kind = Kind::kClean;
  double threshold = 0.0;  // kCompress, 0-255 scale
  CropRect rect;           // kCrop

  std::string Name() const;
  std::string Param() const;
};

struct BenchRow {
  std::string host;
  std::string scenario;
  std::string param;
  bool failed = false;
  std::string error;
  MetricsReport metrics;
};

// Rows are ordered host-major, then scenario (clean, thresholds, crops).
struct BenchReport {
  std::vector<BenchRow> rows;

  std::string ToText() const;
  // Header: host,scenario,param,psnr_db,pearson,nc,ber_percent
  std::string ToCsv() const;
  bool AnyFailed() const;
};

struct BenchOptions {
  std::vector<double> thresholds = {3.0, 5.0, 7.0};
  // Empty selects DefaultCropRects() for each host.
  std::vector<CropRect> crops;
  // Unset draws a fresh seed per host from the system entropy source.
  std::optional<uint64_t> seed;
  double delta = kDefaultDelta;
  // Parallel hosts; output order does not depend on it.
  int jobs = 1;
};

struct BenchHost {
  std::string name;
  PlanarImage image;
};

// Top-left quarter and the centred rectangle covering 25% of the area.
std::vector<CropRect> DefaultCropRects(int width, int height);

// Per-host key seeds: derived from `options.seed` when pinned.
std::vector<uint64_t> BenchSeeds(size_t host_count,
                                 const std::optional<uint64_t>& seed);

// For each host: embed, write/read at 8 bits, then for each scenario
// attack, re-quantize, extract and measure against the host and the mark.
// Errors are recorded on the affected rows; the run continues.
BenchReport RunBench(const std::vector<BenchHost>& hosts,
                     const BitMatrix& mark, const BenchOptions& options);

// Same, loading hosts from Netpbm files. A host that fails to load yields
// one failed row per scenario.
BenchReport RunBenchOnFiles(const std::vector<std::string>& host_paths,
                            const BitMatrix& mark,
                            const BenchOptions& options);

}  // namespace dwtmark

#endif  // DWTMARK_BENCH_H_
