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

#ifndef FAIRDIST_COUNT_H_
#define FAIRDIST_COUNT_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace fairdist {

// Unsigned 128-bit counter. Every arithmetic operation is checked and throws
// Error(kOverflow) instead of wrapping.
class Count {
 public:
  using Raw = unsigned __int128;

  constexpr Count() = default;
  constexpr Count(std::uint64_t v) : value_(v) {}  // NOLINT: implicit widening
  static constexpr Count FromRaw(Raw v) {
    Count c;
    c.value_ = v;
    return c;
  }

  constexpr Raw raw() const { return value_; }
  bool FitsUint64() const { return (value_ >> 64) == 0; }
  // Throws kOverflow when the value exceeds 64 bits.
  std::uint64_t ToUint64() const;
  double ToDouble() const { return static_cast<double>(value_); }
  std::string ToString() const;
  // Parses a non-negative decimal integer.
  static Count Parse(std::string_view text);

  Count& operator+=(Count other);
  Count& operator-=(Count other);
  Count& operator*=(Count other);
  friend Count operator+(Count a, Count b) { return a += b; }
  friend Count operator-(Count a, Count b) { return a -= b; }
  friend Count operator*(Count a, Count b) { return a *= b; }

  friend constexpr bool operator==(Count a, Count b) = default;
  friend constexpr std::strong_ordering operator<=>(Count a, Count b) {
    return a.value_ <=> b.value_;
  }

 private:
  Raw value_ = 0;
};

}  // namespace fairdist

#endif  // FAIRDIST_COUNT_H_
