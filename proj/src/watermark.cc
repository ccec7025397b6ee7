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

#include "dwtmark/watermark.h"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dwtmark/colorspace.h"
#include "dwtmark/error.h"
#include "dwtmark/splitmix.h"
#include "dwtmark/wavelet.h"

namespace dwtmark {
namespace {

constexpr char kKeyMagic[] = "WMKEY1";

// Gamut compensation: at most this many re-analysis passes, stopping once
// every marked coefficient is within kGamutTolerance * delta of its target.
constexpr int kGamutPasses = 16;
constexpr double kGamutTolerance = 1.0 / 16.0;

int64_t FloorHalf(int64_t q) { return q >= 0 ? q / 2 : -((-q + 1) / 2); }

void CheckDelta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCategory::kArgument,
                "quantization step must be positive, got " +
                    std::to_string(delta));
  }
}

void CheckEmbeddable(const PlanarImage& image, int levels) {
  if (image.channels() != 3) {
    throw Error(ErrorCategory::kArity,
                "watermarking needs an RGB image, got " +
                    std::to_string(image.channels()) + " channel(s)");
  }
  const int multiple = 1 << levels;
  if (image.width() % multiple != 0 || image.height() % multiple != 0 ||
      image.width() == 0 || image.height() == 0) {
    throw Error(ErrorCategory::kDimension,
                "image " + std::to_string(image.width()) + "x" +
                    std::to_string(image.height()) +
                    " must have dimensions divisible by " +
                    std::to_string(multiple));
  }
}

void CheckCapacity(size_t n, int offset, size_t capacity) {
  if (offset < 0 || n + static_cast<size_t>(offset) > capacity) {
    throw Error(ErrorCategory::kCapacity,
                "watermark needs " + std::to_string(n) +
                    " coefficients at offset " + std::to_string(offset) +
                    " but LL holds " + std::to_string(capacity));
  }
}

[[noreturn]] void KeyFormat(const std::string& what) {
  throw Error(ErrorCategory::kKeyFormat, what);
}

template <typename T>
T ParseNumber(const std::string& field, const std::string& text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    KeyFormat("bad value for " + field + ": '" + text + "'");
  }
  return value;
}

double ParseDouble(const std::string& field, const std::string& text) {
  // from_chars for double is not available on every toolchain yet.
  if (text.empty()) KeyFormat("bad value for " + field);
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE) {
    KeyFormat("bad value for " + field + ": '" + text + "'");
  }
  return value;
}

// "k=v k=v ..." with exactly the expected keys.
std::map<std::string, std::string> ParseFields(
    const std::string& line, const std::vector<std::string>& expected) {
  std::map<std::string, std::string> fields;
  std::istringstream tokens(line);
  std::string token;
  while (tokens >> token) {
    const size_t eq = token.find('=');
    if (eq == std::string::npos) KeyFormat("expected key=value, got '" + token + "'");
    const std::string name = token.substr(0, eq);
    bool known = false;
    for (const auto& e : expected) known |= e == name;
    if (!known) KeyFormat("unknown key field '" + name + "'");
    if (!fields.emplace(name, token.substr(eq + 1)).second) {
      KeyFormat("duplicate key field '" + name + "'");
    }
  }
  for (const auto& e : expected) {
    if (!fields.count(e)) KeyFormat("missing key field '" + e + "'");
  }
  return fields;
}

std::string ToHex(const BitSequence& bits) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out;
  for (size_t i = 0; i < bits.size(); i += 8) {
    unsigned byte = 0;
    for (size_t j = 0; j < 8; ++j) {
      byte <<= 1;
      if (i + j < bits.size()) byte |= bits[i + j] & 1u;
    }
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 15]);
  }
  return out;
}

BitSequence FromHex(const std::string& hex, size_t n) {
  const size_t bytes = (n + 7) / 8;
  if (hex.size() != 2 * bytes) {
    throw Error(ErrorCategory::kIntegrity,
                "R holds " + std::to_string(hex.size() / 2) +
                    " bytes but rows*cols = " + std::to_string(n) +
                    " needs " + std::to_string(bytes));
  }
  BitSequence bits;
  bits.reserve(bytes * 8);
  for (size_t i = 0; i < hex.size(); ++i) {
    const char c = hex[i];
    int nibble;
    if (c >= '0' && c <= '9') nibble = c - '0';
    else if (c >= 'A' && c <= 'F') nibble = c - 'A' + 10;
    else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
    else KeyFormat(std::string("bad hex digit '") + c + "' in R");
    for (int b = 3; b >= 0; --b) bits.push_back((nibble >> b) & 1);
  }
  for (size_t i = n; i < bits.size(); ++i) {
    if (bits[i]) {
      throw Error(ErrorCategory::kIntegrity, "R padding bits are not zero");
    }
  }
  bits.resize(n);
  return bits;
}

}  // namespace

void WatermarkKey::Validate() const {
  if (rows < 1 || cols < 1) {
    throw Error(ErrorCategory::kIntegrity, "key shape must be positive");
  }
  if (r.size() != bit_count()) {
    throw Error(ErrorCategory::kIntegrity,
                "|R| = " + std::to_string(r.size()) + " but rows*cols = " +
                    std::to_string(bit_count()));
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCategory::kIntegrity, "key delta must be positive");
  }
  if (levels < 1 || levels > 30) {
    throw Error(ErrorCategory::kIntegrity, "key levels out of range");
  }
  if (subband != "LL") {
    throw Error(ErrorCategory::kIntegrity,
                "unsupported subband locator '" + subband + "'");
  }
  if (offset < 0) {
    throw Error(ErrorCategory::kIntegrity, "key offset is negative");
  }
}

BitSequence GenerateR(size_t n, uint64_t seed) {
  if (n == 0) {
    throw Error(ErrorCategory::kArgument, "random sequence length must be >= 1");
  }
  SplitMix64 rng(seed);
  BitSequence r(n);
  for (auto& bit : r) bit = static_cast<uint8_t>(rng.Next() >> 63);
  return r;
}

BitSequence XorBits(std::span<const uint8_t> a, std::span<const uint8_t> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCategory::kArgument,
                "XOR of sequences with lengths " + std::to_string(a.size()) +
                    " and " + std::to_string(b.size()));
  }
  BitSequence out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = (a[i] ^ b[i]) & 1;
  return out;
}

int64_t QuantizerIndex(double coefficient, double delta) {
  return std::llround(coefficient / delta);
}

void EmbedBitsInCoefficients(std::span<double> coefficients,
                             std::span<const uint8_t> bits, double delta) {
  CheckDelta(delta);
  if (coefficients.size() != bits.size()) {
    throw Error(ErrorCategory::kArgument, "coefficient and bit counts differ");
  }
  for (size_t i = 0; i < bits.size(); ++i) {
    const int64_t q = QuantizerIndex(coefficients[i], delta);
    const int64_t marked = 2 * FloorHalf(q) + (bits[i] & 1);
    coefficients[i] = static_cast<double>(marked) * delta;
  }
}

BitSequence ExtractBitsFromCoefficients(std::span<const double> coefficients,
                                        double delta) {
  CheckDelta(delta);
  BitSequence bits(coefficients.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    const int64_t q = QuantizerIndex(coefficients[i], delta);
    bits[i] = static_cast<uint8_t>(q - 2 * FloorHalf(q));
  }
  return bits;
}

size_t EmbeddingCapacity(int width, int height, int levels) {
  return static_cast<size_t>(width >> levels) *
         static_cast<size_t>(height >> levels);
}

EmbedResult Embed(const PlanarImage& host, const BitMatrix& mark,
                  uint64_t seed, double delta, int offset) {
  CheckDelta(delta);
  CheckEmbeddable(host, kEmbedLevels);
  const size_t n = mark.size();
  if (n == 0) throw Error(ErrorCategory::kArgument, "watermark is empty");
  CheckCapacity(n, offset,
                EmbeddingCapacity(host.width(), host.height(), kEmbedLevels));

  YCbCrImage ycc = RgbToJpegYCbCr(host);
  SubbandPyramid pyr = Dwt2Forward(ycc.y, kEmbedLevels);

  WatermarkKey key;
  key.r = GenerateR(n, seed);
  key.rows = mark.rows();
  key.cols = mark.cols();
  key.levels = kEmbedLevels;
  key.delta = delta;
  key.offset = offset;
  key.seed = seed;

  const BitSequence encrypted = XorBits(mark.bits(), key.r);
  std::span<double> selected = pyr.ll.values().subspan(offset, n);
  EmbedBitsInCoefficients(selected, encrypted, delta);
  const std::vector<double> targets(selected.begin(), selected.end());

  ycc.y = Dwt2Inverse(pyr);
  PlanarImage marked = JpegYCbCrToRgb(ycc);

  // Clamping to [0, 1] near black or saturated pixels drags some marked
  // coefficients off their bin centres. Re-analyse the clamped result and
  // push the residual back into the coefficients until every target is met.
  for (int pass = 0; pass < kGamutPasses; ++pass) {
    const SubbandPyramid seen =
        Dwt2Forward(RgbToJpegYCbCr(marked).y, kEmbedLevels);
    const auto recovered = seen.ll.values().subspan(offset, n);
    double worst = 0.0;
    for (size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::fabs(targets[i] - recovered[i]));
    }
    if (worst <= delta * kGamutTolerance) break;
    for (size_t i = 0; i < n; ++i) selected[i] += targets[i] - recovered[i];
    ycc.y = Dwt2Inverse(pyr);
    marked = JpegYCbCrToRgb(ycc);
  }
  return {std::move(marked), std::move(key)};
}

BitMatrix Extract(const PlanarImage& image, const WatermarkKey& key) {
  key.Validate();
  CheckEmbeddable(image, key.levels);
  const size_t n = key.bit_count();
  CheckCapacity(n, key.offset,
                EmbeddingCapacity(image.width(), image.height(), key.levels));

  const YCbCrImage ycc = RgbToJpegYCbCr(image);
  const SubbandPyramid pyr = Dwt2Forward(ycc.y, key.levels);
  const BitSequence encrypted = ExtractBitsFromCoefficients(
      pyr.ll.values().subspan(key.offset, n), key.delta);
  return BitMatrix(key.rows, key.cols, XorBits(encrypted, key.r));
}

std::string SerializeKey(const WatermarkKey& key) {
  key.Validate();
  char delta[64];
  std::snprintf(delta, sizeof(delta), "%.17g", key.delta);
  std::ostringstream out;
  out << kKeyMagic << '\n'
      << "levels=" << key.levels << " subband=" << key.subband
      << " rows=" << key.rows << " cols=" << key.cols
      << " offset=" << key.offset << '\n'
      << "delta=" << delta << '\n'
      << "seed=" << key.seed << '\n'
      << "R=" << ToHex(key.r) << '\n';
  return out.str();
}

WatermarkKey ParseKey(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (lines.empty() || lines[0] != kKeyMagic) {
    KeyFormat("missing WMKEY1 magic");
  }
  if (lines.size() != 5) {
    KeyFormat("expected 5 lines, got " + std::to_string(lines.size()));
  }

  WatermarkKey key;
  const auto shape = ParseFields(
      lines[1], {"levels", "subband", "rows", "cols", "offset"});
  key.levels = ParseNumber<int>("levels", shape.at("levels"));
  key.subband = shape.at("subband");
  key.rows = ParseNumber<int>("rows", shape.at("rows"));
  key.cols = ParseNumber<int>("cols", shape.at("cols"));
  key.offset = ParseNumber<int>("offset", shape.at("offset"));
  key.delta = ParseDouble("delta", ParseFields(lines[2], {"delta"}).at("delta"));
  key.seed = ParseNumber<uint64_t>("seed", ParseFields(lines[3], {"seed"}).at("seed"));

  if (lines[4].rfind("R=", 0) != 0) KeyFormat("expected R=<hex> on line 5");
  if (key.rows < 1 || key.cols < 1) {
    throw Error(ErrorCategory::kIntegrity, "key shape must be positive");
  }
  key.r = FromHex(lines[4].substr(2), key.bit_count());
  key.Validate();
  return key;
}

void SaveKey(const WatermarkKey& key, const std::string& path) {
  const std::string text = SerializeKey(key);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCategory::kIo, "cannot open " + path);
  file << text;
  if (!file) throw Error(ErrorCategory::kIo, "cannot write " + path);
}

WatermarkKey LoadKey(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCategory::kIo, "cannot open " + path);
  const std::string text((std::istreambuf_iterator<char>(file)),
                         std::istreambuf_iterator<char>());
  return ParseKey(text);
}

}  // namespace dwtmark
