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

#ifndef FAIRDIST_PROPERTIES_H_
#define FAIRDIST_PROPERTIES_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distribution.h"
#include "executor.h"
#include "rational.h"
#include "types.h"

namespace fairdist {

enum class PropertyId {
  kImmunityIR,
  kImmunityGR,
  kResolutionStability,
  kFairnessSymmetry,
  kIRSymmetry,
  kGRSymmetry,
  kPerfectFairnessStability,
  kUndefinedValues,
};

inline constexpr std::array<PropertyId, 8> kAllProperties = {
    PropertyId::kImmunityIR,          PropertyId::kImmunityGR,
    PropertyId::kResolutionStability, PropertyId::kFairnessSymmetry,
    PropertyId::kIRSymmetry,          PropertyId::kGRSymmetry,
    PropertyId::kPerfectFairnessStability, PropertyId::kUndefinedValues,
};

std::string_view PropertyName(PropertyId p);   // "immunity-ir", ...
std::string_view PropertyTitle(PropertyId p);  // "Immunity to IR changes"

struct GridPoint {
  Rational ir;
  Rational gr;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Ratio grid at a fixed dataset size. Points are kept sorted and unique, so
// every result is independent of the order the caller listed them in.
struct RatioGrid {
  std::int64_t n = 0;
  std::vector<Rational> ir;
  std::vector<Rational> gr;

  // Sorts, deduplicates and checks that every point converts exactly.
  static RatioGrid Make(std::int64_t n, std::vector<Rational> ir,
                        std::vector<Rational> gr);
  bool IrClosedUnderComplement() const;
  bool GrClosedUnderComplement() const;
  Stratum StratumAt(const GridPoint& point) const;
};

struct PropertyThresholds {
  Rational immunity_tv{1, 100};
  Rational resolution_ratio{1, 2};
  Rational perfect_fairness_ratio{4, 1};
  // Extreme-vs-reference factor above which an undefined-value trend is named.
  Rational undefined_trend_ratio{2, 1};
};

enum class Verdict { kHolds, kFails, kHoldsWithCaveat, kReported };
std::string_view VerdictName(Verdict v);

struct PropertyVerdict {
  PropertyId property;
  MeasureId measure;
  // Unset when the statistic is unbounded (a zero minimum in a ratio).
  std::optional<Rational> statistic;
  // ImmunityGR only: the same statistic over renormalized defined values.
  std::optional<Rational> defined_only_statistic;
  std::optional<Rational> threshold;
  Verdict verdict = Verdict::kFails;
  // Non-empty iff verdict == kFails.
  std::vector<GridPoint> witnesses;
  // UndefinedValues only.
  std::string condition;
  std::vector<std::pair<GridPoint, Rational>> undefined_probabilities;
};

// Total variation distance, 1/2 * sum |a(v)/|a| - b(v)/|b||, over the defined
// values plus the undefined atom (kAll) or over renormalized defined values
// only (kDefined).
Rational TotalVariation(const Pmf& a, const Pmf& b,
                        Denominator denominator = Denominator::kAll);

// Read-only pmf store for the grid points of a report.
class PmfCache {
 public:
  static PmfCache Build(const RatioGrid& grid, std::span<const MeasureId> measures,
                        const Executor& executor);
  const Pmf& Get(MeasureId measure, const Stratum& s) const;

 private:
  std::map<std::pair<MeasureId, Stratum>, Pmf> pmfs_;
};

PropertyVerdict EvaluateProperty(PropertyId property, MeasureId measure,
                                 const RatioGrid& grid,
                                 const PropertyThresholds& thresholds,
                                 const PmfCache& cache);
PropertyVerdict EvaluateProperty(PropertyId property, MeasureId measure,
                                 const RatioGrid& grid,
                                 const PropertyThresholds& thresholds,
                                 const Executor& executor = Executor::Serial());

struct PropertyReport {
  RatioGrid grid;
  PropertyThresholds thresholds;
  // Property-major: 8 properties x 6 measures.
  std::vector<PropertyVerdict> cells;

  const PropertyVerdict& Cell(PropertyId property, MeasureId measure) const;
};

// Requires a grid closed under r -> 1 - r on both axes.
PropertyReport BuildPropertyReport(const RatioGrid& grid,
                                   const PropertyThresholds& thresholds,
                                   const Executor& executor = Executor::Serial());

}  // namespace fairdist

#endif  // FAIRDIST_PROPERTIES_H_
