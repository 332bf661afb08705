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

#ifndef FAIRDIST_TYPES_H_
#define FAIRDIST_TYPES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rational.h"

namespace fairdist {

// One group's confusion matrix.
struct GroupCounts {
  std::int64_t tp = 0;
  std::int64_t fn = 0;
  std::int64_t fp = 0;
  std::int64_t tn = 0;

  std::int64_t positives() const { return tp + fn; }
  std::int64_t negatives() const { return fp + tn; }
  std::int64_t size() const { return positives() + negatives(); }

  friend bool operator==(const GroupCounts&, const GroupCounts&) = default;
};

// The 8-tuple {TP_p, FN_p, FP_p, TN_p, TP_up, FN_up, FP_up, TN_up}.
struct ConfusionPair {
  GroupCounts protected_group;
  GroupCounts unprotected_group;

  std::int64_t n() const {
    return protected_group.size() + unprotected_group.size();
  }
  std::int64_t positives() const {
    return protected_group.positives() + unprotected_group.positives();
  }
  std::int64_t negatives() const { return n() - positives(); }

  std::array<std::int64_t, 8> ToArray() const;
  // Throws kInvalidArgument on a negative entry.
  static ConfusionPair FromArray(const std::array<std::int64_t, 8>& v);
  ConfusionPair SwapGroups() const {
    return {unprotected_group, protected_group};
  }
  // Maps each group (tp, fn, fp, tn) to (fp, tn, tp, fn).
  ConfusionPair SwapClasses() const;

  friend bool operator==(const ConfusionPair&, const ConfusionPair&) = default;
  friend auto operator<=>(const ConfusionPair& a, const ConfusionPair& b) {
    return a.ToArray() <=> b.ToArray();
  }
};

// All confusion pairs with a fixed dataset size, positive count and protected
// group size; one (IR, GR) grid point.
class Stratum {
 public:
  // Throws kInvalidArgument unless n >= 1, 0 <= p <= n and 0 <= n_p <= n.
  Stratum(std::int64_t n, std::int64_t p, std::int64_t n_p);
  // Throws kInexactRatio naming the ratio when ir*n or gr*n is fractional.
  static Stratum FromRatios(std::int64_t n, const Rational& ir,
                            const Rational& gr);

  std::int64_t n() const { return n_; }
  std::int64_t p() const { return p_; }
  std::int64_t n_p() const { return n_p_; }
  std::int64_t negatives() const { return n_ - p_; }
  std::int64_t n_up() const { return n_ - n_p_; }
  Rational imbalance_ratio() const { return Rational(p_, n_); }
  Rational group_ratio() const { return Rational(n_p_, n_); }
  bool Contains(const ConfusionPair& pair) const {
    return pair.n() == n_ && pair.positives() == p_ &&
           pair.protected_group.size() == n_p_;
  }
  std::string ToString() const;

  friend bool operator==(const Stratum&, const Stratum&) = default;
  friend auto operator<=>(const Stratum&, const Stratum&) = default;

 private:
  std::int64_t n_;
  std::int64_t p_;
  std::int64_t n_p_;
};

enum class MeasureId {
  kAccuracyEquality,
  kStatisticalParity,
  kEqualOpportunity,
  kPredictiveEquality,
  kPositivePredictiveParity,
  kNegativePredictiveParity,
};

inline constexpr std::array<MeasureId, 6> kAllMeasures = {
    MeasureId::kAccuracyEquality,        MeasureId::kStatisticalParity,
    MeasureId::kEqualOpportunity,        MeasureId::kPredictiveEquality,
    MeasureId::kPositivePredictiveParity, MeasureId::kNegativePredictiveParity,
};

enum class PerformanceMeasure { kAccuracy, kGMean };

// Kebab-case token, e.g. "equal-opportunity".
std::string_view MeasureName(MeasureId m);
std::optional<MeasureId> ParseMeasure(std::string_view name);
std::string_view PerformanceName(PerformanceMeasure m);
std::optional<PerformanceMeasure> ParsePerformance(std::string_view name);

// A measure evaluation: a defined exact value, or Undefined when some group
// statistic has a zero denominator.
class MeasureValue {
 public:
  static MeasureValue Undefined() { return MeasureValue(); }
  static MeasureValue Defined(const Rational& v) { return MeasureValue(v); }

  bool is_defined() const { return value_.has_value(); }
  // Precondition: is_defined().
  const Rational& value() const { return *value_; }
  // "num/den" or "undefined".
  std::string ToString() const;

  friend bool operator==(const MeasureValue&, const MeasureValue&) = default;

 private:
  MeasureValue() = default;
  explicit MeasureValue(const Rational& v) : value_(v) {}
  std::optional<Rational> value_;
};

}  // namespace fairdist

#endif  // FAIRDIST_TYPES_H_
