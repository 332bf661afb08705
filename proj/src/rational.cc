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

#include "rational.h"

#include <limits>
#include <numeric>

#include "error.h"

namespace fairdist {
namespace {

using Wide = __int128;

Wide WideGcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool FitsInt64(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) Fail(ErrorCode::kInvalidArgument, "zero denominator");
  *this = FromWide(num, den);
}

Rational Rational::FromWide(Wide num, Wide den) {
  if (den == 0) Fail(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g;
  if (FitsInt64(num) && FitsInt64(den)) {
    auto a = static_cast<std::uint64_t>(num < 0 ? -num : num);
    g = static_cast<Wide>(std::gcd(a, static_cast<std::uint64_t>(den)));
  } else {
    g = WideGcd(num, den);
  }
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (!FitsInt64(num) || !FitsInt64(den)) {
    Fail(ErrorCode::kOverflow, "rational value exceeds 64-bit range");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::FromCounts(Count num, Count den) {
  if (den == Count(0)) Fail(ErrorCode::kInvalidArgument, "zero denominator");
  // Reduce in the unsigned domain first; counts may exceed the signed range.
  Count::Raw a = num.raw(), b = den.raw();
  Count::Raw x = a, y = b;
  while (y != 0) {
    Count::Raw t = x % y;
    x = y;
    y = t;
  }
  a /= x;
  b /= x;
  constexpr auto kMax =
      static_cast<Count::Raw>(std::numeric_limits<std::int64_t>::max());
  if (a > kMax || b > kMax) {
    Fail(ErrorCode::kOverflow, "probability exceeds 64-bit rational range");
  }
  return FromWide(static_cast<Wide>(a), static_cast<Wide>(b));
}

Rational Rational::Parse(std::string_view text) {
  const std::string original(text);
  auto bad = [&]() {
    Fail(ErrorCode::kInvalidArgument, "malformed ratio '" + original + "'");
  };
  auto parse_int = [&](std::string_view s, bool allow_sign) -> Wide {
    bool negative = false;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
      negative = s[0] == '-';
      s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 18) bad();
    Wide v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') bad();
      v = v * 10 + (ch - '0');
    }
    return negative ? -v : v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Wide num = parse_int(text.substr(0, slash), true);
    Wide den = parse_int(text.substr(slash + 1), false);
    if (den == 0) Fail(ErrorCode::kInvalidArgument, "zero denominator in '" +
                                                        original + "'");
    return FromWide(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative || (!whole.empty() && whole[0] == '+')) whole.remove_prefix(1);
    if (frac.empty() && whole.empty()) bad();
    std::string digits = std::string(whole) + std::string(frac);
    if (digits.empty()) bad();
    Wide num = parse_int(digits, false);
    Wide den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return FromWide(negative ? -num : num, den);
  }
  return FromWide(parse_int(text, true), 1);
}

std::string Rational::ToString() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return FromWide(-Wide{num_}, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::FromWide(Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_,
                            Wide{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::FromWide(Wide{a.num_} * b.den_ - Wide{b.num_} * a.den_,
                            Wide{a.den_} * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::FromWide(Wide{a.num_} * b.num_, Wide{a.den_} * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) Fail(ErrorCode::kInvalidArgument, "division by zero");
  return Rational::FromWide(Wide{a.num_} * b.den_, Wide{a.den_} * b.num_);
}

Rational Abs(const Rational& r) { return r.num() < 0 ? -r : r; }

}  // namespace fairdist
