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

#include "count.h"

#include <algorithm>
#include <limits>

#include "error.h"

namespace fairdist {

std::uint64_t Count::ToUint64() const {
  if (!FitsUint64()) {
    Fail(ErrorCode::kOverflow, "count " + ToString() + " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(value_);
}

std::string Count::ToString() const {
  if (value_ == 0) return "0";
  std::string digits;
  for (Raw v = value_; v != 0; v /= 10) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Count Count::Parse(std::string_view text) {
  if (text.empty()) Fail(ErrorCode::kInvalidArgument, "empty count");
  Count result;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      Fail(ErrorCode::kInvalidArgument,
           "invalid count '" + std::string(text) + "'");
    }
    result *= Count(10);
    result += Count(static_cast<std::uint64_t>(ch - '0'));
  }
  return result;
}

Count& Count::operator+=(Count other) {
  Raw sum = value_ + other.value_;
  if (sum < value_) Fail(ErrorCode::kOverflow, "128-bit count overflow");
  value_ = sum;
  return *this;
}

Count& Count::operator-=(Count other) {
  if (other.value_ > value_) {
    Fail(ErrorCode::kInternal, "count underflow");
  }
  value_ -= other.value_;
  return *this;
}

Count& Count::operator*=(Count other) {
  if (value_ != 0 && other.value_ > std::numeric_limits<Raw>::max() / value_) {
    Fail(ErrorCode::kOverflow, "128-bit count overflow");
  }
  value_ *= other.value_;
  return *this;
}

}  // namespace fairdist
