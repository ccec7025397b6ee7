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

#include "dwtmark/synth.h"

#include <string>

#include "dwtmark/error.h"
#include "dwtmark/splitmix.h"

namespace dwtmark {

SynthKind ParseSynthKind(const std::string& name) {
  if (name == "gradient") return SynthKind::kGradient;
  if (name == "checker") return SynthKind::kChecker;
  if (name == "noise") return SynthKind::kNoise;
  throw Error(ErrorCategory::kArgument,
              "unknown synthetic kind '" + name +
                  "' (gradient, checker or noise)");
}

std::string SynthKindName(SynthKind kind) {
  switch (kind) {
    case SynthKind::kGradient: return "gradient";
    case SynthKind::kChecker: return "checker";
    case SynthKind::kNoise: return "noise";
  }
  return "unknown";
}

PlanarImage MakeSyntheticHost(SynthKind kind, int size, uint64_t seed) {
  if (size <= 0 || size % 8 != 0) {
    throw Error(ErrorCategory::kDimension,
                "synthetic size must be a positive multiple of 8, got " +
                    std::to_string(size));
  }
  PlanarImage image(size, size, 3);
  const double span = size - 1;
  SplitMix64 rng(seed);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      switch (kind) {
        case SynthKind::kGradient:
          image.at(x, y, 0) = x / span;
          image.at(x, y, 1) = y / span;
          image.at(x, y, 2) = (x + y) / (2.0 * span);
          break;
        case SynthKind::kChecker: {
          const double v = ((x / 32) + (y / 32)) % 2 == 0 ? 0.25 : 0.75;
          for (int c = 0; c < 3; ++c) image.at(x, y, c) = v;
          break;
        }
        case SynthKind::kNoise:
          for (int c = 0; c < 3; ++c) image.at(x, y, c) = rng.NextUnit();
          break;
      }
    }
  }
  return image;
}

}  // namespace dwtmark
