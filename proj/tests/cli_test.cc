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


#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "dwtmark/image_io.h"
#include "dwtmark/metrics.h"
#include "dwtmark/splitmix.h"
#include "dwtmark/synth.h"
#include "dwtmark/watermark.h"
#include "gtest/gtest.h"

namespace dwtmark::cli {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "dwtmark");
  std::ostringstream out, err;
  Outcome o;
  o.code = Run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("dwtmark_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::string WriteMark(int rows, int cols, uint64_t seed,
                        const std::string& name = "mark.pbm") {
    SplitMix64 rng(seed);
    BitMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) m.at(r, c) = rng.Next() >> 63;
    }
    WriteWatermark(m, Path(name));
    return Path(name);
  }

  std::string Synth(const std::string& kind, int size,
                    const std::string& name, int seed = 0) {
    const Outcome o = RunCli({"synth", Path(name), "--kind", kind, "--size",
                              std::to_string(size), "--seed",
                              std::to_string(seed)});
    EXPECT_EQ(o.code, 0) << o.err;
    return Path(name);
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, EmbedThenExtractRecoversTheMarkBitForBit) {
  const std::string host = Synth("gradient", 512, "host.ppm");
  const std::string mark = WriteMark(15, 64, 1);
  const Outcome embed = RunCli({"embed", host, mark, Path("wm.ppm"),
                                Path("wm.key"), "--seed", "7"});
  ASSERT_EQ(embed.code, 0) << embed.err;
  double psnr = 0.0, pearson = 0.0;
  ASSERT_EQ(std::sscanf(embed.out.c_str(), "psnr_db=%lf pearson=%lf", &psnr,
                        &pearson),
            2)
      << embed.out;
  EXPECT_GE(psnr, 47.0);
  EXPECT_GT(pearson, 0.999);

  const Outcome extract =
      RunCli({"extract", Path("wm.ppm"), Path("wm.key"), Path("out.pbm")});
  ASSERT_EQ(extract.code, 0) << extract.err;
  EXPECT_TRUE(extract.out.empty());
  EXPECT_EQ(Slurp(Path("out.pbm")), Slurp(mark));

  const Outcome eval = RunCli({"evaluate", host, Path("wm.ppm"), "--mark",
                               mark, "--extracted", Path("out.pbm")});
  ASSERT_EQ(eval.code, 0) << eval.err;
  EXPECT_NE(eval.out.find("nc=1.0000 ber_percent=0.00"), std::string::npos)
      << eval.out;
}

TEST_F(CliTest, EmbedIsDeterministicGivenSeed) {
  const std::string host = Synth("noise", 64, "host.ppm", 3);
  const std::string mark = WriteMark(4, 8, 2);
  for (const char* name : {"a", "b"}) {
    ASSERT_EQ(RunCli({"embed", host, mark, Path(std::string(name) + ".ppm"),
                      Path(std::string(name) + ".key"), "--seed", "11"})
                  .code,
              0);
  }
  EXPECT_EQ(Slurp(Path("a.ppm")), Slurp(Path("b.ppm")));
  EXPECT_EQ(Slurp(Path("a.key")), Slurp(Path("b.key")));
}

TEST_F(CliTest, EmbedWithoutSeedDrawsAFreshOne) {
  const std::string host = Synth("noise", 64, "host.ppm", 3);
  const std::string mark = WriteMark(4, 8, 2);
  ASSERT_EQ(RunCli({"embed", host, mark, Path("a.ppm"), Path("a.key")}).code,
            0);
  ASSERT_EQ(RunCli({"embed", host, mark, Path("b.ppm"), Path("b.key")}).code,
            0);
  EXPECT_NE(LoadKey(Path("a.key")).seed, LoadKey(Path("b.key")).seed);
}

TEST_F(CliTest, EmbedDimensionAndCapacityErrors) {
  WriteImage(PlanarImage(100, 100, 3, 0.5), Path("odd.ppm"));
  const Outcome odd = RunCli({"embed", Path("odd.ppm"), WriteMark(4, 4, 1),
                              Path("o.ppm"), Path("o.key")});
  EXPECT_EQ(odd.code, 4);
  EXPECT_EQ(odd.err.rfind("error: dimension: ", 0), 0u) << odd.err;
  EXPECT_FALSE(std::filesystem::exists(Path("o.ppm")));

  const std::string host = Synth("checker", 512, "host.ppm");
  const Outcome big = RunCli({"embed", host, WriteMark(70, 70, 1, "big.pbm"),
                              Path("o.ppm"), Path("o.key")});
  EXPECT_EQ(big.code, 4);
  EXPECT_EQ(big.err.rfind("error: capacity: ", 0), 0u) << big.err;
  EXPECT_NE(big.err.find("4900"), std::string::npos);
  EXPECT_NE(big.err.find("4096"), std::string::npos);
  EXPECT_EQ(std::count(big.err.begin(), big.err.end(), '\n'), 1);
}

TEST_F(CliTest, ExtractRejectsCorruptKeyMagic) {
  const std::string host = Synth("noise", 64, "host.ppm", 1);
  ASSERT_EQ(RunCli({"embed", host, WriteMark(4, 8, 1), Path("wm.ppm"),
                    Path("wm.key"), "--seed", "1"})
                .code,
            0);
  std::string key = Slurp(Path("wm.key"));
  key[0] = 'X';
  std::ofstream(Path("bad.key"), std::ios::binary) << key;
  const Outcome o =
      RunCli({"extract", Path("wm.ppm"), Path("bad.key"), Path("out.pbm")});
  EXPECT_EQ(o.code, 3);
  EXPECT_EQ(o.err.rfind("error: key-format: ", 0), 0u) << o.err;
}

TEST_F(CliTest, ExtractWithWrongSeedLooksRandom) {
  const std::string host = Synth("checker", 256, "host.ppm");
  const std::string mark = WriteMark(15, 64, 5);
  ASSERT_EQ(RunCli({"embed", host, mark, Path("wm.ppm"), Path("wm.key"),
                    "--seed", "1"})
                .code,
            0);
  WatermarkKey key = LoadKey(Path("wm.key"));
  double total = 0.0;
  const PlanarImage marked = ReadImage(Path("wm.ppm"));
  const BitMatrix original = ReadWatermark(mark);
  for (uint64_t s = 100; s < 120; ++s) {
    key.seed = s;
    key.r = GenerateR(key.bit_count(), s);
    SaveKey(key, Path("wrong.key"));
    ASSERT_EQ(
        RunCli({"extract", Path("wm.ppm"), Path("wrong.key"), Path("x.pbm")})
            .code,
        0);
    total += BitErrorRate(original, ReadWatermark(Path("x.pbm")));
  }
  EXPECT_NEAR(total / 20.0, 50.0, 5.0);
}

TEST_F(CliTest, AttackCompressZeroIsNearlyLossless) {
  const std::string host = Synth("noise", 128, "host.ppm", 9);
  const Outcome o =
      RunCli({"attack", host, Path("c.ppm"), "--compress-t", "0"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_GT(Psnr(ReadImage(host), ReadImage(Path("c.ppm"))), 80.0);
}

TEST_F(CliTest, AttackEmptyCropIsByteIdentical) {
  const std::string host = Synth("gradient", 64, "host.ppm");
  ASSERT_EQ(RunCli({"attack", host, Path("c.ppm"), "--crop", "0,0,0,0"}).code,
            0);
  EXPECT_EQ(Slurp(Path("c.ppm")), Slurp(host));
}

TEST_F(CliTest, AttackCropFillsTheRectangle) {
  const std::string host = Synth("gradient", 64, "host.ppm");
  ASSERT_EQ(RunCli({"attack", host, Path("c.ppm"), "--crop", "8,8,16,16",
                    "--fill", "1"})
                .code,
            0);
  const PlanarImage img = ReadImage(Path("c.ppm"));
  EXPECT_EQ(img.at(8, 8, 0), 1.0);
  EXPECT_EQ(img.at(23, 23, 2), 1.0);
  EXPECT_EQ(img.at(24, 24, 1), ReadImage(host).at(24, 24, 1));
}

TEST_F(CliTest, AttackArgumentErrors) {
  const std::string host = Synth("gradient", 64, "host.ppm");
  const Outcome oob =
      RunCli({"attack", host, Path("c.ppm"), "--crop", "60,0,8,8"});
  EXPECT_EQ(oob.code, 2);
  EXPECT_EQ(oob.err.rfind("error: argument: ", 0), 0u) << oob.err;

  const Outcome both = RunCli({"attack", host, Path("c.ppm"), "--crop",
                               "0,0,1,1", "--compress-t", "3"});
  EXPECT_EQ(both.code, 2);
  EXPECT_EQ(both.err.rfind("error: usage: ", 0), 0u) << both.err;

  const Outcome neither = RunCli({"attack", host, Path("c.ppm")});
  EXPECT_EQ(neither.code, 2);
  EXPECT_EQ(neither.err.rfind("error: usage: ", 0), 0u) << neither.err;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli({}).code, 2);
  EXPECT_EQ(RunCli({"frobnicate"}).code, 2);
  const Outcome missing = RunCli({"embed", "only-one-arg"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.err.rfind("error: usage: ", 0), 0u) << missing.err;
  EXPECT_EQ(RunCli({"synth", Path("x.ppm"), "--size", "abc"}).code, 2);
  EXPECT_EQ(RunCli({"--help"}).code, 0);
}

TEST_F(CliTest, MissingInputIsAnIoError) {
  const Outcome o = RunCli({"extract", Path("nope.ppm"), Path("nope.key"),
                            Path("out.pbm")});
  EXPECT_EQ(o.code, 3);
  EXPECT_EQ(o.err.rfind("error: io: ", 0), 0u) << o.err;
}

TEST_F(CliTest, SynthGradientIsDefinitional) {
  const std::string path = Synth("gradient", 512, "g.ppm");
  const PlanarImage img = ReadImage(path);
  ASSERT_EQ(img.width(), 512);
  for (int y : {0, 100, 511}) {
    for (int x : {0, 37, 511}) {
      EXPECT_EQ(img.at(x, y, 0), std::round(255.0 * x / 511.0) / 255.0);
      EXPECT_EQ(img.at(x, y, 1), std::round(255.0 * y / 511.0) / 255.0);
      EXPECT_EQ(img.at(x, y, 2),
                std::round(255.0 * (x + y) / 1022.0) / 255.0);
    }
  }
}

TEST_F(CliTest, SynthCheckerAndNoise) {
  const PlanarImage checker = ReadImage(Synth("checker", 64, "c.ppm"));
  EXPECT_EQ(checker.at(0, 0, 0), checker.at(31, 31, 2));
  EXPECT_NE(checker.at(0, 0, 0), checker.at(32, 0, 0));
  EXPECT_EQ(checker.at(0, 0, 0), checker.at(32, 32, 1));

  Synth("noise", 64, "n1.ppm", 5);
  Synth("noise", 64, "n2.ppm", 5);
  Synth("noise", 64, "n3.ppm", 6);
  EXPECT_EQ(Slurp(Path("n1.ppm")), Slurp(Path("n2.ppm")));
  EXPECT_NE(Slurp(Path("n1.ppm")), Slurp(Path("n3.ppm")));

  const Outcome bad =
      RunCli({"synth", Path("b.ppm"), "--size", "100"});
  EXPECT_EQ(bad.code, 4);
  EXPECT_EQ(RunCli({"synth", Path("b.ppm"), "--kind", "plaid"}).code, 2);
}

TEST_F(CliTest, BenchCsvIsReproducibleWithPinnedSeed) {
  const std::string a = Synth("gradient", 128, "a.ppm");
  const std::string b = Synth("noise", 128, "b.ppm", 2);
  const std::string mark = WriteMark(8, 16, 3);
  const std::vector<std::string> args = {"bench", a,        b,       mark,
                                         "--seed", "42",    "--format",
                                         "csv"};
  const Outcome first = RunCli(args);
  const Outcome second = RunCli(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out.rfind("host,scenario,param,psnr_db,pearson,nc,"
                            "ber_percent\n",
                            0),
            0u);
  EXPECT_NE(first.out.find("a.ppm,clean,-,"), std::string::npos);
  EXPECT_NE(first.out.find(",1.0000,0.00\n"), std::string::npos);
}

TEST_F(CliTest, BenchCustomScenariosAndFailures) {
  const std::string a = Synth("checker", 64, "a.ppm");
  const std::string mark = WriteMark(4, 8, 3);
  const Outcome o = RunCli({"bench", a, Path("missing.ppm"), mark, "--seed",
                            "1", "--thresholds", "2,4", "--crops",
                            "0,0,8,8;8,8,8,8", "--format", "csv"});
  EXPECT_EQ(o.code, 3);
  EXPECT_NE(o.out.find("a.ppm,compress,4,"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("a.ppm,crop,\"8,8,8,8\","), std::string::npos);
  EXPECT_NE(o.out.find("missing.ppm,clean,-,FAILED"), std::string::npos);
  EXPECT_NE(o.err.find("missing.ppm"), std::string::npos) << o.err;

  EXPECT_EQ(RunCli({"bench", mark}).code, 2);
  EXPECT_EQ(RunCli({"bench", a, mark, "--format", "xml"}).code, 2);
}

}  // namespace
}  // namespace dwtmark::cli
