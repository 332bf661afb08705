// Copyright 2026 The fairdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRDIST_ERROR_H_
#define FAIRDIST_ERROR_H_

#include <stdexcept>
#include <string>

namespace fairdist {

// Numeric values double as CLI exit codes and C API status codes.
enum class ErrorCode : int {
  kInternal = 1,
  kInvalidArgument = 2,
  kInexactRatio = 3,
  kOverflow = 4,
  kIo = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fairdist

#endif  // FAIRDIST_ERROR_H_
