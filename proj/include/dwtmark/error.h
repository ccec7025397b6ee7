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

#ifndef DWTMARK_ERROR_H_
#define DWTMARK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dwtmark {

enum class ErrorCategory {
  kArgument,
  kUsage,
  kIo,
  kFormat,
  kSize,
  kArity,
  kStructure,
  kKeyFormat,
  kIntegrity,
  kUndefined,
  kDimension,
  kCapacity,
};

// Stable lower-case name used in "error: <category>: <detail>" lines.
std::string_view CategoryName(ErrorCategory category);

// Process exit code for a category: 2 usage, 3 data/format,
// 4 capacity/dimension.
int ExitCodeFor(ErrorCategory category);

// All library failures are reported as Error. what() carries the detail
// only; the category is kept separately so callers can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& detail)
      : std::runtime_error(detail), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

}  // namespace dwtmark

#endif  // DWTMARK_ERROR_H_
