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

#include "dwtmark/bench.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dwtmark/error.h"
#include "dwtmark/image_io.h"
#include "dwtmark/splitmix.h"

namespace dwtmark {
namespace {

std::string Format(const char* fmt, double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, value);
  return buf;
}

std::string FormatThreshold(double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", t);
  return buf;
}

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Formatted cells shared by the text and CSV views.
std::vector<std::string> Cells(const BenchRow& row) {
  if (row.failed) {
    return {row.host, row.scenario, row.param, "FAILED", "FAILED", "FAILED",
            "FAILED"};
  }
  return {row.host,
          row.scenario,
          row.param,
          Format("%.2f", row.metrics.psnr_db),
          Format("%.6f", row.metrics.pearson),
          Format("%.4f", row.metrics.nc),
          Format("%.2f", row.metrics.ber_percent)};
}

const std::vector<std::string> kColumns = {
    "host", "scenario", "param", "psnr_db", "pearson", "nc", "ber_percent"};

std::vector<BenchScenario> Scenarios(const BenchOptions& options, int width,
                                     int height) {
  std::vector<BenchScenario> out;
  out.push_back({});
  for (double t : options.thresholds) {
    out.push_back({BenchScenario::Kind::kCompress, t, {}});
  }
  const std::vector<CropRect> crops = options.crops.empty()
                                          ? DefaultCropRects(width, height)
                                          : options.crops;
  for (const CropRect& r : crops) {
    out.push_back({BenchScenario::Kind::kCrop, 0.0, r});
  }
  return out;
}

std::vector<BenchRow> BenchOneHost(const BenchHost& host,
                                   const BitMatrix& mark, uint64_t seed,
                                   const BenchOptions& options) {
  const std::vector<BenchScenario> scenarios =
      Scenarios(options, host.image.width(), host.image.height());
  std::vector<BenchRow> rows;
  for (const BenchScenario& s : scenarios) {
    rows.push_back({host.name, s.Name(), s.Param(), false, "", {}});
  }

  EmbedResult embedded;
  PlanarImage stored;
  try {
    embedded = Embed(host.image, mark, seed, options.delta);
    stored = Quantize(embedded.image);
  } catch (const std::exception& e) {
    for (BenchRow& row : rows) {
      row.failed = true;
      row.error = e.what();
    }
    return rows;
  }

  for (size_t i = 0; i < scenarios.size(); ++i) {
    const BenchScenario& s = scenarios[i];
    try {
      PlanarImage attacked = stored;
      if (s.kind == BenchScenario::Kind::kCompress) {
        attacked = Quantize(WaveletCompress(stored, s.threshold));
      } else if (s.kind == BenchScenario::Kind::kCrop) {
        attacked = Crop(stored, s.rect);
      }
      const BitMatrix extracted = Extract(attacked, embedded.key);
      rows[i].metrics = Evaluate(host.image, attacked, mark, extracted);
    } catch (const std::exception& e) {
      rows[i].failed = true;
      rows[i].error = e.what();
    }
  }
  return rows;
}

}  // namespace

std::string BenchScenario::Name() const {
  switch (kind) {
    case Kind::kClean: return "clean";
    case Kind::kCompress: return "compress";
    case Kind::kCrop: return "crop";
  }
  return "unknown";
}

std::string BenchScenario::Param() const {
  switch (kind) {
    case Kind::kClean: return "-";
    case Kind::kCompress: return FormatThreshold(threshold);
    case Kind::kCrop: return FormatCropRect(rect);
  }
  return "";
}

std::string BenchReport::ToText() const {
  std::vector<std::vector<std::string>> table = {kColumns};
  for (const BenchRow& row : rows) table.push_back(Cells(row));
  std::vector<size_t> widths(kColumns.size(), 0);
  for (const auto& cells : table) {
    for (size_t c = 0; c < cells.size(); ++c) {
      widths[c] = std::max(widths[c], cells[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& cells : table) {
    for (size_t c = 0; c < cells.size(); ++c) {
      // Names left-aligned, numbers right-aligned.
      const size_t pad = widths[c] - cells[c].size();
      if (c < 3) {
        out << cells[c] << std::string(pad, ' ');
      } else {
        out << std::string(pad, ' ') << cells[c];
      }
      out << (c + 1 < cells.size() ? "  " : "\n");
    }
  }
  return out.str();
}

std::string BenchReport::ToCsv() const {
  std::ostringstream out;
  for (size_t c = 0; c < kColumns.size(); ++c) {
    out << kColumns[c] << (c + 1 < kColumns.size() ? "," : "\n");
  }
  for (const BenchRow& row : rows) {
    const auto cells = Cells(row);
    for (size_t c = 0; c < cells.size(); ++c) {
      out << CsvField(cells[c]) << (c + 1 < cells.size() ? "," : "\n");
    }
  }
  return out.str();
}

bool BenchReport::AnyFailed() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](const BenchRow& r) { return r.failed; });
}

std::vector<CropRect> DefaultCropRects(int width, int height) {
  return {{0, 0, width / 2, height / 2},
          {width / 4, height / 4, width / 2, height / 2}};
}

std::vector<uint64_t> BenchSeeds(size_t host_count,
                                 const std::optional<uint64_t>& seed) {
  std::vector<uint64_t> seeds(host_count);
  if (seed) {
    SplitMix64 rng(*seed);
    for (auto& s : seeds) s = rng.Next();
  } else {
    std::random_device device;
    for (auto& s : seeds) {
      s = (static_cast<uint64_t>(device()) << 32) | device();
    }
  }
  return seeds;
}

BenchReport RunBench(const std::vector<BenchHost>& hosts,
                     const BitMatrix& mark, const BenchOptions& options) {
  const std::vector<uint64_t> seeds = BenchSeeds(hosts.size(), options.seed);
  std::vector<std::vector<BenchRow>> per_host(hosts.size());

  const size_t workers = std::clamp<size_t>(
      options.jobs < 1 ? 1 : static_cast<size_t>(options.jobs), 1,
      std::max<size_t>(hosts.size(), 1));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < hosts.size(); i = next++) {
      per_host[i] = BenchOneHost(hosts[i], mark, seeds[i], options);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (size_t t = 0; t < workers; ++t) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }

  BenchReport report;
  for (auto& rows : per_host) {
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

BenchReport RunBenchOnFiles(const std::vector<std::string>& host_paths,
                            const BitMatrix& mark,
                            const BenchOptions& options) {
  std::vector<BenchHost> hosts;
  std::vector<std::pair<size_t, std::string>> load_errors;
  for (const std::string& path : host_paths) {
    const size_t slash = path.find_last_of('/');
    BenchHost host;
    host.name = slash == std::string::npos ? path : path.substr(slash + 1);
    try {
      host.image = ReadImage(path);
    } catch (const std::exception& e) {
      load_errors.emplace_back(hosts.size(), e.what());
    }
    hosts.push_back(std::move(host));
  }
  BenchReport report = RunBench(hosts, mark, options);
  // Unreadable hosts fail inside Embed already; keep the loader's message.
  for (const auto& [index, message] : load_errors) {
    for (BenchRow& row : report.rows) {
      if (row.host == hosts[index].name && row.failed) row.error = message;
    }
  }
  return report;
}

}  // namespace dwtmark
