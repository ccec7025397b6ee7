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

#include "dwtmark/error.h"

namespace dwtmark {

std::string_view CategoryName(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kArgument: return "argument";
    case ErrorCategory::kUsage: return "usage";
    case ErrorCategory::kIo: return "io";
    case ErrorCategory::kFormat: return "format";
    case ErrorCategory::kSize: return "size";
    case ErrorCategory::kArity: return "arity";
    case ErrorCategory::kStructure: return "structure";
    case ErrorCategory::kKeyFormat: return "key-format";
    case ErrorCategory::kIntegrity: return "integrity";
    case ErrorCategory::kUndefined: return "undefined-correlation";
    case ErrorCategory::kDimension: return "dimension";
    case ErrorCategory::kCapacity: return "capacity";
  }
  return "unknown";
}

int ExitCodeFor(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kArgument:
    case ErrorCategory::kUsage:
      return 2;
    case ErrorCategory::kDimension:
    case ErrorCategory::kCapacity:
      return 4;
    default:
      return 3;
  }
}

}  // namespace dwtmark
