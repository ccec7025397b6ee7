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

#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dwtmark/image_io.h"
#include "dwtmark/splitmix.h"
#include "dwtmark/synth.h"
#include "gtest/gtest.h"

namespace dwtmark {
namespace {

BitMatrix RandomMark(int rows, int cols, uint64_t seed) {
  SplitMix64 rng(seed);
  BitMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.at(r, c) = rng.Next() >> 63;
  }
  return m;
}

std::vector<BenchHost> SmallHosts() {
  return {{"gradient", MakeSyntheticHost(SynthKind::kGradient, 128)},
          {"checker", MakeSyntheticHost(SynthKind::kChecker, 128)},
          {"noise", MakeSyntheticHost(SynthKind::kNoise, 128, 5)}};
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(BenchScenarioTest, NamesAndParams) {
  EXPECT_EQ(BenchScenario{}.Name(), "clean");
  EXPECT_EQ(BenchScenario{}.Param(), "-");
  const BenchScenario compress{BenchScenario::Kind::kCompress, 7.5, {}};
  EXPECT_EQ(compress.Name(), "compress");
  EXPECT_EQ(compress.Param(), "7.5");
  const BenchScenario crop{BenchScenario::Kind::kCrop, 0.0, {1, 2, 3, 4}};
  EXPECT_EQ(crop.Name(), "crop");
  EXPECT_EQ(crop.Param(), "1,2,3,4");
}

TEST(BenchTest, DefaultCropsAreQuarterAndCentre) {
  const auto rects = DefaultCropRects(512, 256);
  ASSERT_EQ(rects.size(), 2u);
  EXPECT_EQ(rects[0], (CropRect{0, 0, 256, 128}));
  EXPECT_EQ(rects[1], (CropRect{128, 64, 256, 128}));
}

TEST(BenchTest, PinnedSeedsAreReproducibleAndDistinct) {
  const auto a = BenchSeeds(4, 42);
  EXPECT_EQ(a, BenchSeeds(4, 42));
  EXPECT_EQ(std::set<uint64_t>(a.begin(), a.end()).size(), 4u);
  EXPECT_NE(a, BenchSeeds(4, 43));
}

TEST(BenchTest, RowOrderIsHostMajorThenScenario) {
  BenchOptions options;
  options.seed = 1;
  const BenchReport report =
      RunBench(SmallHosts(), RandomMark(8, 16, 1), options);
  ASSERT_EQ(report.rows.size(), 3u * 6u);
  const std::vector<std::string> hosts = {"gradient", "checker", "noise"};
  const std::vector<std::string> scenarios = {"clean",    "compress",
                                              "compress", "compress",
                                              "crop",     "crop"};
  const std::vector<std::string> params = {"-", "3", "5", "7", "0,0,64,64",
                                           "32,32,64,64"};
  for (size_t i = 0; i < report.rows.size(); ++i) {
    const BenchRow& row = report.rows[i];
    EXPECT_EQ(row.host, hosts[i / 6]);
    EXPECT_EQ(row.scenario, scenarios[i % 6]);
    EXPECT_EQ(row.param, params[i % 6]);
    EXPECT_FALSE(row.failed) << row.error;
  }
  EXPECT_FALSE(report.AnyFailed());
}

TEST(BenchTest, CleanRowsRecoverTheMark) {
  BenchOptions options;
  options.seed = 2;
  options.thresholds = {};
  options.crops = {{0, 0, 0, 0}};
  const BenchReport report =
      RunBench(SmallHosts(), RandomMark(8, 16, 2), options);
  for (const BenchRow& row : report.rows) {
    EXPECT_EQ(row.metrics.ber_percent, 0.0) << row.host << " " << row.param;
    EXPECT_EQ(row.metrics.nc, 1.0);
    EXPECT_GT(row.metrics.psnr_db, 40.0);
    EXPECT_GT(row.metrics.pearson, 0.999);
  }
}

TEST(BenchTest, DeterministicAcrossJobCounts) {
  BenchOptions options;
  options.seed = 42;
  const BitMatrix mark = RandomMark(8, 16, 3);
  const std::string serial = RunBench(SmallHosts(), mark, options).ToCsv();
  options.jobs = 3;
  EXPECT_EQ(RunBench(SmallHosts(), mark, options).ToCsv(), serial);
  EXPECT_EQ(RunBench(SmallHosts(), mark, options).ToCsv(), serial);
}

TEST(BenchTest, CsvAndTextCarryTheSameCells) {
  BenchOptions options;
  options.seed = 4;
  const BenchReport report =
      RunBench(SmallHosts(), RandomMark(8, 16, 4), options);
  const auto csv = Lines(report.ToCsv());
  const auto text = Lines(report.ToText());
  ASSERT_EQ(csv.size(), report.rows.size() + 1);
  ASSERT_EQ(text.size(), csv.size());
  EXPECT_EQ(csv[0], "host,scenario,param,psnr_db,pearson,nc,ber_percent");
  for (size_t i = 0; i < csv.size(); ++i) {
    // Crop params contain commas and are quoted in CSV.
    std::vector<std::string> csv_cells;
    std::string cell;
    bool quoted = false;
    for (char c : csv[i]) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        csv_cells.push_back(cell);
        cell.clear();
      } else {
        cell.push_back(c);
      }
    }
    csv_cells.push_back(cell);
    std::istringstream words(text[i]);
    std::vector<std::string> text_cells;
    for (std::string w; words >> w;) text_cells.push_back(w);
    EXPECT_EQ(csv_cells, text_cells) << i;
  }
}

TEST(BenchTest, CsvQuotesFieldsWithSeparatorsAndQuotes) {
  BenchReport report;
  BenchRow row;
  row.host = "a \"b\",c";
  row.scenario = "crop";
  row.param = "0,0,8,8";
  row.metrics = {std::numeric_limits<double>::infinity(), 1.0, 1.0, 0.0};
  report.rows.push_back(row);
  EXPECT_EQ(Lines(report.ToCsv())[1],
            "\"a \"\"b\"\",c\",crop,\"0,0,8,8\",inf,1.000000,1.0000,0.00");
}

TEST(BenchTest, FailedHostDoesNotStopTheRun) {
  const std::string good = ::testing::TempDir() + "bench_good.ppm";
  WriteImage(MakeSyntheticHost(SynthKind::kChecker, 64), good);
  BenchOptions options;
  options.seed = 5;
  options.thresholds = {3.0};
  const BenchReport report = RunBenchOnFiles(
      {::testing::TempDir() + "missing.ppm", good}, RandomMark(4, 8, 5),
      options);
  EXPECT_TRUE(report.AnyFailed());
  bool saw_missing = false;
  bool saw_good = false;
  for (const BenchRow& row : report.rows) {
    if (row.host == "missing.ppm") {
      saw_missing = true;
      EXPECT_TRUE(row.failed);
      EXPECT_NE(row.error.find("missing.ppm"), std::string::npos) << row.error;
    } else {
      saw_good = true;
      EXPECT_EQ(row.host, "bench_good.ppm");
      EXPECT_FALSE(row.failed) << row.error;
    }
  }
  EXPECT_TRUE(saw_missing);
  EXPECT_TRUE(saw_good);
  const std::string csv = report.ToCsv();
  EXPECT_NE(csv.find("missing.ppm,clean,-,FAILED,FAILED,FAILED,FAILED"),
            std::string::npos)
      << csv;
}

TEST(BenchTest, UndersizedHostFailsItsRowsOnly) {
  BenchOptions options;
  options.seed = 6;
  options.thresholds = {5.0};
  std::vector<BenchHost> hosts = {
      {"tiny", MakeSyntheticHost(SynthKind::kNoise, 16, 1)},
      {"ok", MakeSyntheticHost(SynthKind::kNoise, 64, 1)}};
  const BenchReport report = RunBench(hosts, RandomMark(4, 8, 6), options);
  for (const BenchRow& row : report.rows) {
    EXPECT_EQ(row.failed, row.host == "tiny") << row.host;
  }
}

}  // namespace
}  // namespace dwtmark
