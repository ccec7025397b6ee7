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

#include "dwtmark/image_io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "dwtmark/error.h"

namespace dwtmark {
namespace {

enum class Netpbm { kBitmap, kGraymap, kPixmap };

struct Header {
  Netpbm type = Netpbm::kGraymap;
  bool ascii = false;
  int width = 0;
  int height = 0;
  int maxval = 1;
};

// Cursor over the raw file bytes. All errors carry the byte offset at which
// parsing stopped.
class Reader {
 public:
  explicit Reader(const std::string& bytes) : bytes_(bytes) {}

  size_t pos() const { return pos_; }
  size_t remaining() const { return bytes_.size() - pos_; }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCategory::kFormat,
                what + " at byte " + std::to_string(pos_));
  }

  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' &&
               bytes_[pos_] != '\r') {
          ++pos_;
        }
      } else if (IsSpace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  int ReadUnsigned(const char* field, long max_value) {
    SkipSpaceAndComments();
    if (pos_ >= bytes_.size()) {
      throw Error(ErrorCategory::kSize, std::string("file ends before ") +
                                            field + " at byte " +
                                            std::to_string(pos_));
    }
    if (!IsDigit(bytes_[pos_])) Fail(std::string("expected ") + field);
    long value = 0;
    while (pos_ < bytes_.size() && IsDigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > max_value) Fail(std::string(field) + " out of range");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  // P1 allows bits without separators.
  int ReadAsciiBit() {
    SkipSpaceAndComments();
    if (pos_ >= bytes_.size()) {
      throw Error(ErrorCategory::kSize,
                  "truncated bitmap payload at byte " + std::to_string(pos_));
    }
    const char c = bytes_[pos_];
    if (c != '0' && c != '1') Fail("expected bit");
    ++pos_;
    return c - '0';
  }

  // The single whitespace byte separating a raw header from its payload.
  void ConsumeRasterSeparator() {
    if (pos_ >= bytes_.size() || !IsSpace(bytes_[pos_])) {
      Fail("expected whitespace before raster");
    }
    ++pos_;
  }

  uint8_t Byte() { return static_cast<uint8_t>(bytes_[pos_++]); }

  Header ReadHeader() {
    if (bytes_.size() < 2 || bytes_[0] != 'P' || bytes_[1] < '1' ||
        bytes_[1] > '6') {
      Fail("bad Netpbm magic");
    }
    const int magic = bytes_[1] - '0';
    pos_ = 2;
    Header h;
    h.ascii = magic <= 3;
    switch (magic) {
      case 1: case 4: h.type = Netpbm::kBitmap; break;
      case 2: case 5: h.type = Netpbm::kGraymap; break;
      default: h.type = Netpbm::kPixmap; break;
    }
    if (pos_ < bytes_.size() && !IsSpace(bytes_[pos_]) && bytes_[pos_] != '#') {
      Fail("bad Netpbm magic");
    }
    h.width = ReadUnsigned("width", 1L << 24);
    h.height = ReadUnsigned("height", 1L << 24);
    if (h.width == 0 || h.height == 0) Fail("empty raster");
    if (h.type != Netpbm::kBitmap) {
      h.maxval = ReadUnsigned("maxval", 65535);
      if (h.maxval == 0) Fail("maxval must be positive");
    }
    if (!h.ascii) ConsumeRasterSeparator();
    return h;
  }

 private:
  static bool IsSpace(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  }
  static bool IsDigit(char c) { return c >= '0' && c <= '9'; }

  const std::string& bytes_;
  size_t pos_ = 0;
};

struct Raster {
  Header header;
  // Interleaved integer samples; for bitmaps 1 = ink.
  std::vector<uint32_t> samples;
};

Raster Decode(const std::string& bytes) {
  Reader in(bytes);
  Raster raster;
  raster.header = in.ReadHeader();
  const Header& h = raster.header;
  const int channels = h.type == Netpbm::kPixmap ? 3 : 1;
  const size_t count = static_cast<size_t>(h.width) * h.height * channels;
  raster.samples.resize(count);

  if (h.type == Netpbm::kBitmap) {
    if (h.ascii) {
      for (auto& s : raster.samples) s = in.ReadAsciiBit();
    } else {
      const size_t row_bytes = (static_cast<size_t>(h.width) + 7) / 8;
      if (in.remaining() < row_bytes * h.height) {
        throw Error(ErrorCategory::kSize,
                    "truncated bitmap payload: need " +
                        std::to_string(row_bytes * h.height) + " bytes, have " +
                        std::to_string(in.remaining()));
      }
      for (int y = 0; y < h.height; ++y) {
        uint8_t byte = 0;
        for (int x = 0; x < h.width; ++x) {
          if (x % 8 == 0) byte = in.Byte();
          raster.samples[static_cast<size_t>(y) * h.width + x] =
              (byte >> (7 - x % 8)) & 1;
        }
      }
    }
    return raster;
  }

  if (h.ascii) {
    for (auto& s : raster.samples) {
      const size_t at = in.pos();
      s = static_cast<uint32_t>(in.ReadUnsigned("sample", 65535));
      if (s > static_cast<uint32_t>(h.maxval)) {
        throw Error(ErrorCategory::kFormat,
                    "sample exceeds maxval at byte " + std::to_string(at));
      }
    }
    return raster;
  }

  const size_t width_bytes = h.maxval > 255 ? 2 : 1;
  if (in.remaining() < count * width_bytes) {
    throw Error(ErrorCategory::kSize,
                "truncated payload: need " +
                    std::to_string(count * width_bytes) + " bytes, have " +
                    std::to_string(in.remaining()));
  }
  for (auto& s : raster.samples) {
    const size_t at = in.pos();
    s = in.Byte();
    if (width_bytes == 2) s = (s << 8) | in.Byte();
    if (s > static_cast<uint32_t>(h.maxval)) {
      throw Error(ErrorCategory::kFormat,
                  "sample exceeds maxval at byte " + std::to_string(at));
    }
  }
  return raster;
}

std::string ReadFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCategory::kIo, "cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(file)),
                    std::istreambuf_iterator<char>());
  if (file.bad()) throw Error(ErrorCategory::kIo, "cannot read " + path);
  return bytes;
}

void WriteFile(const std::string& path, const std::string& bytes) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCategory::kIo, "cannot open " + path);
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw Error(ErrorCategory::kIo, "cannot write " + path);
}

void CheckMaxval(int maxval) {
  if (maxval != 255 && maxval != 65535) {
    throw Error(ErrorCategory::kArgument,
                "maxval must be 255 or 65535, got " + std::to_string(maxval));
  }
}

uint32_t Encode(double sample, int maxval) {
  const double scaled = std::round(sample * maxval);
  if (!(scaled > 0.0)) return 0;  // also NaN
  return static_cast<uint32_t>(std::min(scaled, static_cast<double>(maxval)));
}

}  // namespace

PlanarImage DecodeImage(const std::string& bytes, int* maxval) {
  const Raster raster = Decode(bytes);
  const Header& h = raster.header;
  const int channels = h.type == Netpbm::kPixmap ? 3 : 1;
  PlanarImage image(h.width, h.height, channels);
  const double maxval_d = h.maxval;
  size_t i = 0;
  for (int y = 0; y < h.height; ++y) {
    for (int x = 0; x < h.width; ++x) {
      for (int c = 0; c < channels; ++c, ++i) {
        const uint32_t s = raster.samples[i];
        image.at(x, y, c) =
            h.type == Netpbm::kBitmap ? 1.0 - s : s / maxval_d;
      }
    }
  }
  if (h.maxval > 0 && maxval != nullptr) *maxval = h.maxval;
  return image;
}

PlanarImage ReadImage(const std::string& path, int* maxval) {
  return DecodeImage(ReadFile(path), maxval);
}

std::string EncodeImage(const PlanarImage& image, int maxval) {
  CheckMaxval(maxval);
  const int channels = image.channels();
  if (channels != 1 && channels != 3) {
    throw Error(ErrorCategory::kArity, "cannot encode an empty image");
  }
  std::ostringstream header;
  header << (channels == 1 ? "P5" : "P6") << '\n'
         << image.width() << ' ' << image.height() << '\n'
         << maxval << '\n';
  std::string out = header.str();
  const size_t width_bytes = maxval > 255 ? 2 : 1;
  out.reserve(out.size() + static_cast<size_t>(image.width()) *
                               image.height() * channels * width_bytes);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      for (int c = 0; c < channels; ++c) {
        const uint32_t s = Encode(image.at(x, y, c), maxval);
        if (width_bytes == 2) out.push_back(static_cast<char>(s >> 8));
        out.push_back(static_cast<char>(s & 0xff));
      }
    }
  }
  return out;
}

void WriteImage(const PlanarImage& image, const std::string& path,
                int maxval) {
  WriteFile(path, EncodeImage(image, maxval));
}

BitMatrix DecodeWatermark(const std::string& bytes) {
  const Raster raster = Decode(bytes);
  const Header& h = raster.header;
  if (h.type == Netpbm::kPixmap) {
    throw Error(ErrorCategory::kArity, "watermark must be PBM or PGM");
  }
  std::vector<uint8_t> bits(raster.samples.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (h.type == Netpbm::kBitmap) {
      bits[i] = static_cast<uint8_t>(raster.samples[i]);
    } else {
      bits[i] = static_cast<double>(raster.samples[i]) / h.maxval >= 0.5;
    }
  }
  return BitMatrix(h.height, h.width, std::move(bits));
}

BitMatrix ReadWatermark(const std::string& path) {
  return DecodeWatermark(ReadFile(path));
}

std::string EncodeWatermark(const BitMatrix& bits) {
  std::ostringstream header;
  header << "P4\n" << bits.cols() << ' ' << bits.rows() << '\n';
  std::string out = header.str();
  for (int r = 0; r < bits.rows(); ++r) {
    uint8_t byte = 0;
    for (int c = 0; c < bits.cols(); ++c) {
      byte |= static_cast<uint8_t>(bits.at(r, c) << (7 - c % 8));
      if (c % 8 == 7 || c == bits.cols() - 1) {
        out.push_back(static_cast<char>(byte));
        byte = 0;
      }
    }
  }
  return out;
}

void WriteWatermark(const BitMatrix& bits, const std::string& path) {
  WriteFile(path, EncodeWatermark(bits));
}

PlanarImage Quantize(const PlanarImage& image, int maxval) {
  CheckMaxval(maxval);
  PlanarImage out = image;
  for (int c = 0; c < out.channels(); ++c) {
    for (double& v : out.plane(c).values()) {
      v = static_cast<double>(Encode(v, maxval)) / maxval;
    }
  }
  return out;
}

}  // namespace dwtmark
