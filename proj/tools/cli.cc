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

#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dwtmark/attacks.h"
#include "dwtmark/bench.h"
#include "dwtmark/error.h"
#include "dwtmark/image_io.h"
#include "dwtmark/metrics.h"
#include "dwtmark/synth.h"
#include "dwtmark/watermark.h"

namespace dwtmark::cli {
namespace {

std::string Fixed(double value, int digits) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

uint64_t FreshSeed() {
  std::random_device device;
  return (static_cast<uint64_t>(device()) << 32) | device();
}

std::vector<CropRect> ParseCropList(const std::string& text) {
  std::vector<CropRect> rects;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (!item.empty()) rects.push_back(ParseCropRect(item));
  }
  if (rects.empty()) {
    throw Error(ErrorCategory::kArgument, "no crop rectangles in '" + text + "'");
  }
  return rects;
}

struct EmbedArgs {
  std::string host, mark, out_image, out_key;
  std::optional<uint64_t> seed;
  double delta = kDefaultDelta;
  int offset = 0;
  int maxval = 255;
};

struct ExtractArgs {
  std::string image, key, out_mark;
};

struct AttackArgs {
  std::string image, out;
  std::optional<double> compress_t;
  std::optional<std::string> crop;
  double fill = 0.0;
  int levels = 0;
};

struct EvaluateArgs {
  std::string reference, image;
  std::string mark, extracted;
};

struct BenchArgs {
  std::vector<std::string> paths;  // hosts..., watermark
  std::vector<double> thresholds = {3.0, 5.0, 7.0};
  std::string crops;
  std::string format = "text";
  std::optional<uint64_t> seed;
  double delta = kDefaultDelta;
  int jobs = 1;
};

struct SynthArgs {
  std::string out;
  int size = 512;
  std::string kind = "gradient";
  uint64_t seed = 0;
};

int CmdEmbed(const EmbedArgs& a, std::ostream& out) {
  const PlanarImage host = ReadImage(a.host);
  const BitMatrix mark = ReadWatermark(a.mark);
  const EmbedResult result =
      Embed(host, mark, a.seed ? *a.seed : FreshSeed(), a.delta, a.offset);
  WriteImage(result.image, a.out_image, a.maxval);
  SaveKey(result.key, a.out_key);
  const PlanarImage stored = Quantize(result.image, a.maxval);
  out << "psnr_db=" << Fixed(Psnr(host, stored), 2)
      << " pearson=" << Fixed(Pearson(host, stored), 6) << '\n';
  return 0;
}

int CmdExtract(const ExtractArgs& a) {
  const WatermarkKey key = LoadKey(a.key);
  const PlanarImage image = ReadImage(a.image);
  WriteWatermark(Extract(image, key), a.out_mark);
  return 0;
}

int CmdAttack(const AttackArgs& a) {
  if (a.compress_t.has_value() == a.crop.has_value()) {
    throw Error(ErrorCategory::kUsage,
                "give exactly one of --compress-t or --crop");
  }
  int maxval = 255;
  const PlanarImage image = ReadImage(a.image, &maxval);
  const PlanarImage attacked =
      a.compress_t ? WaveletCompress(image, *a.compress_t, a.levels)
                   : Crop(image, ParseCropRect(*a.crop), a.fill);
  WriteImage(attacked, a.out, maxval > 255 ? 65535 : 255);
  return 0;
}

int CmdEvaluate(const EvaluateArgs& a, std::ostream& out) {
  const PlanarImage reference = ReadImage(a.reference);
  const PlanarImage image = ReadImage(a.image);
  out << "psnr_db=" << Fixed(Psnr(reference, image), 2)
      << " pearson=" << Fixed(Pearson(reference, image), 6);
  if (!a.mark.empty() || !a.extracted.empty()) {
    if (a.mark.empty() || a.extracted.empty()) {
      throw Error(ErrorCategory::kUsage,
                  "--mark and --extracted must be given together");
    }
    const BitMatrix mark = ReadWatermark(a.mark);
    const BitMatrix extracted = ReadWatermark(a.extracted);
    out << " nc=" << Fixed(NormalizedCorrelation(mark, extracted), 4)
        << " ber_percent=" << Fixed(BitErrorRate(mark, extracted), 2);
  }
  out << '\n';
  return 0;
}

int CmdBench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  if (a.paths.size() < 2) {
    throw Error(ErrorCategory::kUsage,
                "bench needs at least one host and a watermark");
  }
  if (a.format != "text" && a.format != "csv") {
    throw Error(ErrorCategory::kUsage, "--format must be text or csv");
  }
  const std::vector<std::string> hosts(a.paths.begin(), a.paths.end() - 1);
  const BitMatrix mark = ReadWatermark(a.paths.back());

  BenchOptions options;
  options.thresholds = a.thresholds;
  if (!a.crops.empty()) options.crops = ParseCropList(a.crops);
  options.seed = a.seed;
  options.delta = a.delta;
  options.jobs = a.jobs;
  const BenchReport report = RunBenchOnFiles(hosts, mark, options);
  out << (a.format == "csv" ? report.ToCsv() : report.ToText());
  std::string last;
  for (const BenchRow& row : report.rows) {
    if (!row.failed) continue;
    const std::string line =
        "error: " + row.host + " " + row.scenario + " " + row.param + ": " +
        row.error;
    if (row.error != last) err << line << '\n';
    last = row.error;
  }
  return report.AnyFailed() ? 3 : 0;
}

int CmdSynth(const SynthArgs& a) {
  WriteImage(MakeSyntheticHost(ParseSynthKind(a.kind), a.size, a.seed), a.out);
  return 0;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Blind DWT watermarking in JPEG-YCbCr luma", "dwtmark"};
  app.require_subcommand(1);

  EmbedArgs embed;
  auto* embed_cmd = app.add_subcommand("embed", "Embed a binary watermark");
  embed_cmd->add_option("host", embed.host, "Host PPM")->required();
  embed_cmd->add_option("watermark", embed.mark, "Watermark PBM/PGM")->required();
  embed_cmd->add_option("out-image", embed.out_image, "Watermarked PPM")->required();
  embed_cmd->add_option("out-key", embed.out_key, "Key file")->required();
  embed_cmd->add_option("--seed", embed.seed, "Seed for R (default: fresh)");
  embed_cmd->add_option("--delta", embed.delta, "Quantization step")
      ->capture_default_str();
  embed_cmd->add_option("--offset", embed.offset, "First LL3 index")
      ->capture_default_str();
  embed_cmd->add_option("--maxval", embed.maxval, "Output maxval (255|65535)")
      ->capture_default_str();

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Extract a watermark");
  extract_cmd->add_option("image", extract.image, "Watermarked PPM")->required();
  extract_cmd->add_option("key", extract.key, "Key file")->required();
  extract_cmd->add_option("out-watermark", extract.out_mark, "Output PBM")
      ->required();

  AttackArgs attack;
  auto* attack_cmd = app.add_subcommand("attack", "Apply one attack");
  attack_cmd->add_option("image", attack.image, "Input image")->required();
  attack_cmd->add_option("out", attack.out, "Output image")->required();
  attack_cmd->add_option("--compress-t", attack.compress_t,
                         "Wavelet compression threshold (0-255 scale)");
  attack_cmd->add_option("--crop", attack.crop, "Crop rectangle x,y,w,h");
  attack_cmd->add_option("--fill", attack.fill, "Crop fill value in [0,1]")
      ->capture_default_str();
  attack_cmd->add_option("--levels", attack.levels,
                         "Compression DWT levels (0 = auto)")
      ->capture_default_str();

  EvaluateArgs evaluate;
  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "PSNR/correlation (and NC/BER)");
  evaluate_cmd->add_option("reference", evaluate.reference, "Reference image")
      ->required();
  evaluate_cmd->add_option("image", evaluate.image, "Test image")->required();
  evaluate_cmd->add_option("--mark", evaluate.mark, "Original watermark");
  evaluate_cmd->add_option("--extracted", evaluate.extracted,
                           "Extracted watermark");

  BenchArgs bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "Embed, attack and extract; report metrics");
  bench_cmd->add_option("paths", bench.paths, "host... watermark")->required();
  bench_cmd->add_option("--thresholds", bench.thresholds,
                        "Compression thresholds")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--crops", bench.crops,
                        "Crop rectangles 'x,y,w,h;x,y,w,h'");
  bench_cmd->add_option("--format", bench.format, "text or csv")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Pin key seeds");
  bench_cmd->add_option("--delta", bench.delta, "Quantization step")
      ->capture_default_str();
  bench_cmd->add_option("--jobs", bench.jobs, "Hosts processed in parallel")
      ->capture_default_str();

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic host");
  synth_cmd->add_option("out", synth.out, "Output PPM")->required();
  synth_cmd->add_option("--size", synth.size, "Edge length")
      ->capture_default_str();
  synth_cmd->add_option("--kind", synth.kind, "gradient, checker or noise")
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed, "Noise seed")
      ->capture_default_str();

  // CLI11 wants argv in reverse for parse(vector).
  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*embed_cmd) return CmdEmbed(embed, out);
    if (*extract_cmd) return CmdExtract(extract);
    if (*attack_cmd) return CmdAttack(attack);
    if (*evaluate_cmd) return CmdEvaluate(evaluate, out);
    if (*bench_cmd) return CmdBench(bench, out, err);
    if (*synth_cmd) return CmdSynth(synth);
  } catch (const Error& e) {
    err << "error: " << CategoryName(e.category()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.category());
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace dwtmark::cli
