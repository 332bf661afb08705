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

#include "distribution.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <utility>

#include "enumeration.h"
#include "error.h"
#include "measures.h"

namespace fairdist {
namespace {

using Raw = Count::Raw;

// Group pmf flattened for the convolution inner loop.
struct GroupDist {
  std::vector<std::pair<Rational, Raw>> values;
  Raw undefined = 0;
  Raw total = 0;
};

GroupDist Flatten(const Pmf& pmf) {
  GroupDist d;
  d.values.reserve(pmf.entries().size());
  for (const auto& [v, c] : pmf.entries()) d.values.emplace_back(v, c.raw());
  d.undefined = pmf.undefined_count().raw();
  d.total = pmf.total().raw();
  return d;
}

Pmf FromAccumulator(const std::unordered_map<Rational, Raw>& acc,
                    Raw undefined) {
  Pmf pmf;
  for (const auto& [v, c] : acc) pmf.Add(v, Count::FromRaw(c));
  pmf.AddUndefined(Count::FromRaw(undefined));
  return pmf;
}

void CheckBins(int bins) {
  if (bins <= 0 || bins % 2 == 0) {
    Fail(ErrorCode::kInvalidArgument,
         "bin count must be a positive odd integer, got " +
             std::to_string(bins));
  }
}

void CheckUnitBins(int bins) {
  if (bins <= 0) {
    Fail(ErrorCode::kInvalidArgument, "performance bin count must be positive");
  }
}

int Clamp(__int128 idx, int bins) {
  if (idx < 0) return 0;
  if (idx >= bins) return bins - 1;
  return static_cast<int>(idx);
}

}  // namespace

Pmf Pmf::FromParts(Entries entries, Count undefined_count, Count total) {
  Pmf pmf;
  for (const auto& [v, c] : entries) {
    if (v < Rational::Integer(-1) || v > Rational::Integer(1)) {
      Fail(ErrorCode::kInvalidArgument,
           "pmf value " + v.ToString() + " outside [-1, 1]");
    }
    pmf.Add(v, c);
  }
  pmf.AddUndefined(undefined_count);
  if (pmf.total_ != total) {
    Fail(ErrorCode::kInvalidArgument,
         "pmf total " + total.ToString() + " does not equal counted mass " +
             pmf.total_.ToString());
  }
  return pmf;
}

void Pmf::Add(const Rational& value, Count count) {
  if (count == Count(0)) return;
  entries_[value] += count;
  total_ += count;
}

void Pmf::AddUndefined(Count count) {
  undefined_ += count;
  total_ += count;
}

void Pmf::Merge(const Pmf& other) {
  for (const auto& [v, c] : other.entries_) Add(v, c);
  AddUndefined(other.undefined_);
}

Count Pmf::CountAt(const Rational& value) const {
  auto it = entries_.find(value);
  return it == entries_.end() ? Count() : it->second;
}

Pmf Pmf::Negated() const {
  Pmf out;
  for (const auto& [v, c] : entries_) out.entries_.emplace_hint(out.entries_.begin(), -v, c);
  out.undefined_ = undefined_;
  out.total_ = total_;
  return out;
}

Pmf GroupStatisticPmf(MeasureId measure, std::int64_t positives,
                      std::int64_t negatives) {
  if (positives < 0 || negatives < 0) {
    Fail(ErrorCode::kInvalidArgument, "negative group size");
  }
  const auto& spec = StatisticSpec(measure);
  std::unordered_map<Rational, Raw> acc;
  Raw undefined = 0;
  for (std::int64_t tp = 0; tp <= positives; ++tp) {
    for (std::int64_t fp = 0; fp <= negatives; ++fp) {
      GroupCounts g{tp, positives - tp, fp, negatives - fp};
      std::int64_t den = spec.Denominator(g);
      if (den == 0) {
        ++undefined;
      } else {
        ++acc[Rational(spec.Numerator(g), den)];
      }
    }
  }
  return FromAccumulator(acc, undefined);
}

Pmf StratumPmfFast(MeasureId measure, const Stratum& s,
                   const Executor& executor) {
  // Checked up front: every partial sum below is bounded by this total.
  const Count expected = StratumCount(s);
  const auto range = AdmissibleRange(s);
  if (range.empty()) return Pmf();

  std::map<std::pair<std::int64_t, std::int64_t>, GroupDist> groups;
  for (std::int64_t pp = range.lo; pp <= range.hi; ++pp) {
    auto c = CellsFor(s, pp);
    for (auto key : {std::pair{c.protected_positives, c.protected_negatives},
                     std::pair{c.unprotected_positives,
                               c.unprotected_negatives}}) {
      if (!groups.contains(key)) {
        groups.emplace(key, Flatten(GroupStatisticPmf(measure, key.first,
                                                      key.second)));
      }
    }
  }

  const auto cells = static_cast<std::size_t>(range.hi - range.lo + 1);
  std::vector<std::unordered_map<Rational, Raw>> partial(cells);
  std::vector<Raw> partial_undefined(cells, 0);
  executor.ParallelFor(cells, [&](std::size_t i) {
    auto c = CellsFor(s, range.lo + static_cast<std::int64_t>(i));
    const GroupDist& a =
        groups.at({c.protected_positives, c.protected_negatives});
    const GroupDist& b =
        groups.at({c.unprotected_positives, c.unprotected_negatives});
    auto& acc = partial[i];
    acc.reserve(a.values.size() * b.values.size());
    for (const auto& [va, ca] : a.values) {
      for (const auto& [vb, cb] : b.values) acc[va - vb] += ca * cb;
    }
    partial_undefined[i] =
        a.undefined * b.total + (a.total - a.undefined) * b.undefined;
  });

  std::unordered_map<Rational, Raw> merged;
  Raw undefined = 0;
  for (std::size_t i = 0; i < cells; ++i) {
    for (const auto& [v, c] : partial[i]) merged[v] += c;
    undefined += partial_undefined[i];
    partial[i] = {};
  }
  Pmf pmf = FromAccumulator(merged, undefined);
  if (pmf.total() != expected) {
    Fail(ErrorCode::kInternal, "pmf mass does not match stratum count");
  }
  return pmf;
}

Pmf StratumPmfBruteForce(MeasureId measure, const Stratum& s,
                         const Executor& executor) {
  const auto range = AdmissibleRange(s);
  if (range.empty()) return Pmf();
  const auto cells = static_cast<std::size_t>(range.hi - range.lo + 1);
  std::vector<Pmf> partial(cells);
  executor.ParallelFor(cells, [&](std::size_t i) {
    std::int64_t pp = range.lo + static_cast<std::int64_t>(i);
    StratumCursor cursor(s, pp, pp);
    ConfusionPair pair;
    std::unordered_map<Rational, Raw> acc;
    Raw undefined = 0;
    while (cursor.Next(&pair)) {
      MeasureValue v = EvaluateMeasure(measure, pair);
      if (v.is_defined()) {
        ++acc[v.value()];
      } else {
        ++undefined;
      }
    }
    partial[i] = FromAccumulator(acc, undefined);
  });
  Pmf pmf;
  for (const auto& p : partial) pmf.Merge(p);
  return pmf;
}

Rational PerfectFairnessProbability(const Pmf& pmf, Denominator denominator) {
  if (pmf.empty()) {
    Fail(ErrorCode::kInvalidArgument, "probability of an empty pmf");
  }
  Count den = denominator == Denominator::kAll ? pmf.total()
                                               : pmf.defined_count();
  if (den == Count(0)) {
    Fail(ErrorCode::kInvalidArgument,
         "pmf has no defined values to renormalize over");
  }
  return Rational::FromCounts(pmf.CountAt(Rational()), den);
}

Rational UndefinedProbability(const Pmf& pmf) {
  if (pmf.empty()) {
    Fail(ErrorCode::kInvalidArgument, "probability of an empty pmf");
  }
  return Rational::FromCounts(pmf.undefined_count(), pmf.total());
}

int FairnessBin(std::int64_t num, std::int64_t den, int bins) {
  // floor((v + 1) / (2 / bins)) with v = num / den, den > 0.
  __int128 scaled = (static_cast<__int128>(num) + den) * bins;
  return Clamp(scaled / (2 * static_cast<__int128>(den)), bins);
}

int UnitBin(std::int64_t num, std::int64_t den, int bins) {
  return Clamp(static_cast<__int128>(num) * bins / den, bins);
}

int RootBin(std::int64_t num, std::int64_t den, int bins) {
  // Smallest s >= 0 with num * bins^2 <= s^2 * den, i.e. s = ceil(sqrt(x))
  // for x = num/den * bins^2; the bin is s - 1.
  const __int128 lhs = static_cast<__int128>(num) * bins * bins;
  auto fits = [&](__int128 s) { return lhs <= s * s * den; };
  double x = static_cast<double>(num) / static_cast<double>(den) * bins * bins;
  auto s = static_cast<__int128>(std::ceil(std::sqrt(x)));
  while (s > 0 && fits(s - 1)) --s;
  while (!fits(s)) ++s;
  return Clamp(s - 1, bins);
}

BinnedHistogram BinHistogram(const Pmf& pmf, int bin_count) {
  CheckBins(bin_count);
  BinnedHistogram h;
  h.bin_count = bin_count;
  h.bin_counts.assign(static_cast<std::size_t>(bin_count), Count());
  for (const auto& [v, c] : pmf.entries()) {
    h.bin_counts[static_cast<std::size_t>(FairnessBin(v, bin_count))] += c;
  }
  h.undefined_count = pmf.undefined_count();
  return h;
}

SweepCurve Sweep(MeasureId measure, std::int64_t n, SweepAxis axis,
                 std::span<const Rational> grid, const Rational& fixed_other,
                 SweepStatistic statistic, Denominator denominator,
                 const Executor& executor) {
  if (statistic == SweepStatistic::kUndefined &&
      denominator == Denominator::kDefined) {
    Fail(ErrorCode::kInvalidArgument,
         "undefined probability is only meaningful over all pairs");
  }
  SweepCurve curve{measure, n, axis, fixed_other, statistic, denominator, {}};
  // Validate every point before computing anything.
  std::vector<Stratum> strata;
  for (const Rational& r : grid) {
    strata.push_back(axis == SweepAxis::kImbalanceRatio
                         ? Stratum::FromRatios(n, r, fixed_other)
                         : Stratum::FromRatios(n, fixed_other, r));
  }
  std::vector<Rational> values(strata.size());
  executor.ParallelFor(strata.size(), [&](std::size_t i) {
    Pmf pmf = StratumPmfFast(measure, strata[i]);
    switch (statistic) {
      case SweepStatistic::kPerfectFairness:
        values[i] = PerfectFairnessProbability(pmf, denominator);
        break;
      case SweepStatistic::kUndefined:
        values[i] = UndefinedProbability(pmf);
        break;
      case SweepStatistic::kUniqueValues:
        values[i] =
            Rational::Integer(static_cast<std::int64_t>(pmf.unique_values()));
        break;
    }
  });
  for (std::size_t i = 0; i < strata.size(); ++i) {
    curve.points.push_back({grid[i], strata[i], values[i]});
  }
  return curve;
}

Count Heatmap::FairnessUndefinedTotal() const {
  Count t = both_undefined;
  for (Count c : fairness_undefined) t += c;
  return t;
}

Count Heatmap::PerformanceUndefinedTotal() const {
  Count t = both_undefined;
  for (Count c : performance_undefined) t += c;
  return t;
}

Count Heatmap::CellTotal() const {
  Count t;
  for (Count c : cells) t += c;
  return t;
}

namespace {

// Local uint64 accumulators; a chunk never exceeds kMaxHeatmapPairs.
struct HeatmapAccumulator {
  int fbins;
  int pbins;
  std::vector<std::uint64_t> cells;
  std::vector<std::uint64_t> fairness_undefined;
  std::vector<std::uint64_t> performance_undefined;
  std::uint64_t both_undefined = 0;

  HeatmapAccumulator(int f, int p)
      : fbins(f),
        pbins(p),
        cells(static_cast<std::size_t>(f) * p, 0),
        fairness_undefined(static_cast<std::size_t>(p), 0),
        performance_undefined(static_cast<std::size_t>(f), 0) {}

  void Add(MeasureId measure, PerformanceMeasure performance,
           const ConfusionPair& pair) {
    const auto& spec = StatisticSpec(measure);
    const auto& pg = pair.protected_group;
    const auto& ug = pair.unprotected_group;
    std::int64_t pd = spec.Denominator(pg), ud = spec.Denominator(ug);
    int fbin = -1;
    if (pd != 0 && ud != 0) {
      std::int64_t num = spec.Numerator(pg) * ud - spec.Numerator(ug) * pd;
      fbin = FairnessBin(num, pd * ud, fbins);
    }
    std::int64_t tp = pg.tp + ug.tp, tn = pg.tn + ug.tn;
    std::int64_t pos = pair.positives(), neg = pair.negatives();
    int pbin = -1;
    if (performance == PerformanceMeasure::kAccuracy) {
      if (pos + neg > 0) pbin = UnitBin(tp + tn, pos + neg, pbins);
    } else if (pos > 0 && neg > 0) {
      pbin = RootBin(tp * tn, pos * neg, pbins);
    }
    if (fbin >= 0 && pbin >= 0) {
      ++cells[static_cast<std::size_t>(fbin) * pbins + pbin];
    } else if (pbin >= 0) {
      ++fairness_undefined[static_cast<std::size_t>(pbin)];
    } else if (fbin >= 0) {
      ++performance_undefined[static_cast<std::size_t>(fbin)];
    } else {
      ++both_undefined;
    }
  }

  void MergeInto(Heatmap* h) const {
    for (std::size_t i = 0; i < cells.size(); ++i) h->cells[i] += cells[i];
    for (std::size_t i = 0; i < fairness_undefined.size(); ++i) {
      h->fairness_undefined[i] += fairness_undefined[i];
    }
    for (std::size_t i = 0; i < performance_undefined.size(); ++i) {
      h->performance_undefined[i] += performance_undefined[i];
    }
    h->both_undefined += both_undefined;
  }
};

Heatmap EmptyHeatmap(MeasureId measure, PerformanceMeasure performance,
                     std::int64_t n, int fbins, int pbins) {
  CheckBins(fbins);
  CheckUnitBins(pbins);
  Heatmap h{measure, performance, n, std::nullopt, fbins, pbins, {}, {}, {},
            Count(), Count()};
  h.cells.assign(static_cast<std::size_t>(fbins) * pbins, Count());
  h.fairness_undefined.assign(static_cast<std::size_t>(pbins), Count());
  h.performance_undefined.assign(static_cast<std::size_t>(fbins), Count());
  return h;
}

void CheckFeasible(Count pairs, std::int64_t n) {
  if (pairs > Count(kMaxHeatmapPairs)) {
    Fail(ErrorCode::kOverflow,
         "n=" + std::to_string(n) + " needs " + pairs.ToString() +
             " pairs, above the enumeration limit of " +
             std::to_string(kMaxHeatmapPairs) + "; the default is n=" +
             std::to_string(kDefaultHeatmapN));
  }
}

}  // namespace

Heatmap JointHeatmap(MeasureId measure, PerformanceMeasure performance,
                     std::int64_t n, int fairness_bins, int performance_bins,
                     const Executor& executor) {
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "n must be non-negative");
  Heatmap h = EmptyHeatmap(measure, performance, n, fairness_bins,
                           performance_bins);
  CheckFeasible(TotalCount(n), n);
  const auto chunks = AllPairsChunks(n);
  std::vector<HeatmapAccumulator> partial(
      chunks.size(), HeatmapAccumulator(0, 0));
  executor.ParallelFor(chunks.size(), [&](std::size_t i) {
    HeatmapAccumulator acc(fairness_bins, performance_bins);
    auto cursor = AllPairsCursor::Chunk(n, chunks[i].first, chunks[i].second);
    ConfusionPair pair;
    while (cursor.Next(&pair)) acc.Add(measure, performance, pair);
    partial[i] = std::move(acc);
  });
  for (const auto& acc : partial) acc.MergeInto(&h);
  h.total = TotalCount(n);
  return h;
}

Heatmap StratifiedHeatmap(MeasureId measure, PerformanceMeasure performance,
                          const Stratum& s, int fairness_bins,
                          int performance_bins, const Executor& executor) {
  Heatmap h = EmptyHeatmap(measure, performance, s.n(), fairness_bins,
                           performance_bins);
  h.stratum = s;
  const Count total = StratumCount(s);
  CheckFeasible(total, s.n());
  const auto range = AdmissibleRange(s);
  if (!range.empty()) {
    const auto cells = static_cast<std::size_t>(range.hi - range.lo + 1);
    std::vector<HeatmapAccumulator> partial(cells, HeatmapAccumulator(0, 0));
    executor.ParallelFor(cells, [&](std::size_t i) {
      HeatmapAccumulator acc(fairness_bins, performance_bins);
      std::int64_t pp = range.lo + static_cast<std::int64_t>(i);
      StratumCursor cursor(s, pp, pp);
      ConfusionPair pair;
      while (cursor.Next(&pair)) acc.Add(measure, performance, pair);
      partial[i] = std::move(acc);
    });
    for (const auto& acc : partial) acc.MergeInto(&h);
  }
  h.total = total;
  return h;
}

}  // namespace fairdist
