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

#ifndef DWTMARK_SYNTH_H_
#define DWTMARK_SYNTH_H_

#include <cstdint>
#include <string>

#include "dwtmark/image.h"

namespace dwtmark {

enum class SynthKind { kGradient, kChecker, kNoise };

// Throws kArgument for unknown names.
SynthKind ParseSynthKind(const std::string& name);
std::string SynthKindName(SynthKind kind);

// Deterministic size x size RGB host.
//   gradient: R = x/(s-1), G = y/(s-1), B = (x+y)/(2(s-1))
//   checker:  period-32 blocks alternating 0.25 / 0.75 in every channel
//   noise:    i.i.d. uniform samples from SplitMix64(seed)
// `seed` only affects noise. Throws kDimension unless size is a positive
// multiple of 8.
PlanarImage MakeSyntheticHost(SynthKind kind, int size, uint64_t seed = 0);

}  // namespace dwtmark

#endif  // DWTMARK_SYNTH_H_
