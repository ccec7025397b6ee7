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

#ifndef DWTMARK_IMAGE_IO_H_
#define DWTMARK_IMAGE_IO_H_

#include <string>

#include "dwtmark/image.h"

namespace dwtmark {

// Netpbm readers and writers. Accepted magics: P1/P4 (PBM), P2/P5 (PGM),
// P3/P6 (PPM). Binary samples wider than 8 bits are big-endian.

// Reads a PGM or PPM (PBM is accepted as a gray image with ink = 0.0).
// Samples are divided by maxval. If `maxval` is non-null it receives the
// file's maxval (1 for PBM).
PlanarImage ReadImage(const std::string& path, int* maxval = nullptr);
PlanarImage DecodeImage(const std::string& bytes, int* maxval = nullptr);

// Writes P5 for one channel and P6 for three. Samples are encoded as
// round(s * maxval) clamped to [0, maxval]; maxval must be 255 or 65535.
void WriteImage(const PlanarImage& image, const std::string& path,
                int maxval = 255);
std::string EncodeImage(const PlanarImage& image, int maxval = 255);

// Reads a binary watermark from PBM (bit = 1 for ink) or PGM (bit = 1 iff
// the sample is >= 0.5). Colour files are rejected with kArity.
BitMatrix ReadWatermark(const std::string& path);
BitMatrix DecodeWatermark(const std::string& bytes);

// Writes a raw PBM (P4) with bit 1 as ink.
void WriteWatermark(const BitMatrix& bits, const std::string& path);
std::string EncodeWatermark(const BitMatrix& bits);

// The sample values a write/read cycle at `maxval` would produce.
PlanarImage Quantize(const PlanarImage& image, int maxval = 255);

}  // namespace dwtmark

#endif  // DWTMARK_IMAGE_IO_H_
