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

#ifndef FAIRDIST_DISTRIBUTION_H_
#define FAIRDIST_DISTRIBUTION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "count.h"
#include "executor.h"
#include "rational.h"
#include "types.h"

namespace fairdist {

// Exact probability mass function of a measure: value -> number of confusion
// pairs attaining it, plus an explicit undefined bucket.
// Invariant: sum(entries) + undefined_count == total.
class Pmf {
 public:
  using Entries = std::map<Rational, Count>;

  Pmf() = default;
  // Throws kInvalidArgument unless the parts satisfy the invariant.
  static Pmf FromParts(Entries entries, Count undefined_count, Count total);

  void Add(const Rational& value, Count count);
  void AddUndefined(Count count);
  void Merge(const Pmf& other);

  const Entries& entries() const { return entries_; }
  Count undefined_count() const { return undefined_; }
  Count total() const { return total_; }
  Count defined_count() const { return total_ - undefined_; }
  Count CountAt(const Rational& value) const;
  std::size_t unique_values() const { return entries_.size(); }
  bool empty() const { return total_ == Count(0); }

  // Distribution of -X; undefined mass is unchanged.
  Pmf Negated() const;
  bool IsSymmetric() const { return *this == Negated(); }

  friend bool operator==(const Pmf&, const Pmf&) = default;

 private:
  Entries entries_;
  Count undefined_;
  Count total_;
};

enum class Denominator { kAll, kDefined };

// Distribution of the per-group statistic over the (P+1)(N+1) group tuples
// with tp in [0, P] and fp in [0, N].
Pmf GroupStatisticPmf(MeasureId measure, std::int64_t positives,
                      std::int64_t negatives);

// Given P_p, the two groups of a stratum are independent, so the stratum pmf
// is a sum over P_p of difference-convolutions of two group pmfs.
Pmf StratumPmfFast(MeasureId measure, const Stratum& s,
                   const Executor& executor = Executor::Serial());

// Oracle: evaluates every pair streamed by StratumCursor.
Pmf StratumPmfBruteForce(MeasureId measure, const Stratum& s,
                         const Executor& executor = Executor::Serial());

// P(value == 0). With kDefined the denominator excludes undefined pairs.
Rational PerfectFairnessProbability(const Pmf& pmf,
                                    Denominator denominator = Denominator::kAll);
Rational UndefinedProbability(const Pmf& pmf);

// Bin index helpers. Fairness bins split [-1, 1], unit bins split [0, 1];
// index = floor(...) with the right edge clamped into the last bin.
int FairnessBin(std::int64_t num, std::int64_t den, int bins);
inline int FairnessBin(const Rational& v, int bins) {
  return FairnessBin(v.num(), v.den(), bins);
}
int UnitBin(std::int64_t num, std::int64_t den, int bins);
// Bin of sqrt(num/den) over [0, 1]; a value on an edge goes to the lower bin.
int RootBin(std::int64_t num, std::int64_t den, int bins);

struct BinnedHistogram {
  int bin_count = 0;
  std::vector<Count> bin_counts;
  Count undefined_count;

  Rational bin_width() const { return Rational(2, bin_count); }
};

inline constexpr int kDefaultBins = 41;

// Throws kInvalidArgument for an even or non-positive bin count.
BinnedHistogram BinHistogram(const Pmf& pmf, int bin_count = kDefaultBins);

enum class SweepAxis { kImbalanceRatio, kGroupRatio };
enum class SweepStatistic { kPerfectFairness, kUndefined, kUniqueValues };

struct SweepPoint {
  Rational ratio;
  Stratum stratum;
  // Probability for kPerfectFairness / kUndefined; count for kUniqueValues.
  Rational value;
};

struct SweepCurve {
  MeasureId measure;
  std::int64_t n;
  SweepAxis axis;
  Rational fixed;
  SweepStatistic statistic;
  Denominator denominator;
  std::vector<SweepPoint> points;
};

SweepCurve Sweep(MeasureId measure, std::int64_t n, SweepAxis axis,
                 std::span<const Rational> grid, const Rational& fixed_other,
                 SweepStatistic statistic,
                 Denominator denominator = Denominator::kAll,
                 const Executor& executor = Executor::Serial());

// Joint fairness x performance histogram. Pairs with an undefined
// coordinate land in that axis's marginal, indexed by the other axis's bin.
struct Heatmap {
  MeasureId measure;
  PerformanceMeasure performance;
  std::int64_t n = 0;
  std::optional<Stratum> stratum;  // set for stratified heatmaps
  int fairness_bins = 0;
  int performance_bins = 0;
  std::vector<Count> cells;                  // [fairness][performance]
  std::vector<Count> fairness_undefined;     // per performance bin
  std::vector<Count> performance_undefined;  // per fairness bin
  Count both_undefined;
  Count total;

  Count cell(int fairness_bin, int performance_bin) const {
    return cells[static_cast<std::size_t>(fairness_bin) * performance_bins +
                 performance_bin];
  }
  Count FairnessUndefinedTotal() const;
  Count PerformanceUndefinedTotal() const;
  Count CellTotal() const;
};

inline constexpr std::int64_t kDefaultHeatmapN = 32;
inline constexpr int kDefaultPerformanceBins = 20;
// Full enumeration is refused above this many pairs.
inline constexpr std::uint64_t kMaxHeatmapPairs = 20'000'000'000ull;

Heatmap JointHeatmap(MeasureId measure, PerformanceMeasure performance,
                     std::int64_t n, int fairness_bins, int performance_bins,
                     const Executor& executor = Executor::Serial());
Heatmap StratifiedHeatmap(MeasureId measure, PerformanceMeasure performance,
                          const Stratum& s, int fairness_bins,
                          int performance_bins,
                          const Executor& executor = Executor::Serial());

}  // namespace fairdist

#endif  // FAIRDIST_DISTRIBUTION_H_
