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

#ifndef FAIRDIST_RATIONAL_H_
#define FAIRDIST_RATIONAL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "count.h"

namespace fairdist {

// Exact fraction in canonical form: gcd(|num|, den) == 1 and den > 0, so zero
// is always 0/1. Intermediate products use 128-bit integers; a result that
// does not fit back into 64 bits throws Error(kOverflow).
class Rational {
 public:
  constexpr Rational() = default;
  // Throws kInvalidArgument when den == 0.
  Rational(std::int64_t num, std::int64_t den);
  static Rational Integer(std::int64_t v) { return Rational(v, 1); }
  static Rational FromWide(__int128 num, __int128 den);
  // Ratio of two counts; den must be non-zero.
  static Rational FromCounts(Count num, Count den);
  // Accepts "num/den", an integer, or a decimal such as "0.25".
  static Rational Parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string ToString() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=>
           static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational Abs(const Rational& r);

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept {
    auto h = static_cast<std::uint64_t>(r.num()) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(r.den()) + 0x7F4A7C159E3779B9ull +
         (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace fairdist

template <>
struct std::hash<fairdist::Rational> : fairdist::RationalHash {};

#endif  // FAIRDIST_RATIONAL_H_
