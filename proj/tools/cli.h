// Copyright 2026 The Subword Authors
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

#ifndef SUBWORD_TOOLS_CLI_H_
#define SUBWORD_TOOLS_CLI_H_

#include <iosfwd>

namespace subword::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kIoError = 3,
  kInfeasible = 4,
  kCorruptModel = 5,
  kMarkerCollision = 6,
  kInvalidInput = 7,  // bad UTF-8, malformed reference file, mixed markers
};

// Entry point of the `subword` tool. `in` backs "-" inputs of `tokenize`;
// reports and tokens go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace subword::cli

#endif  // SUBWORD_TOOLS_CLI_H_
