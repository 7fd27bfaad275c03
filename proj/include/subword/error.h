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

#ifndef SUBWORD_ERROR_H_
#define SUBWORD_ERROR_H_

#include <stdexcept>
#include <string>

namespace subword {

enum class ErrorCode {
  kInvalidArgument,
  kInfeasible,       // requested vocabulary size cannot be reached
  kIo,
  kInvalidUtf8,
  kMarkerCollision,  // boundary marker found in raw input
  kCorruptModel,
  kInvalidData,      // malformed reference file, incompatible models, ...
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace subword

#endif  // SUBWORD_ERROR_H_
