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

#ifndef DWTMARK_TOOLS_CLI_H_
#define DWTMARK_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace dwtmark::cli {

// Runs the dwtmark command line with args[0] as the program name. Returns
// the process exit code; failures are reported on `err` as a single
// "error: <category>: <detail>" line.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dwtmark::cli

#endif  // DWTMARK_TOOLS_CLI_H_
