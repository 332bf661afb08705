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

#include "properties.h"

#include <algorithm>
#include <set>

#include "error.h"
#include "measures.h"

namespace fairdist {
namespace {

using Raw = Count::Raw;

constexpr std::array<std::string_view, 8> kPropertyNames = {
    "immunity-ir",         "immunity-gr",
    "resolution-stability", "fairness-symmetry",
    "ir-symmetry",         "gr-symmetry",
    "perfect-fairness-stability", "undefined-values",
};

constexpr std::array<std::string_view, 8> kPropertyTitles = {
    "Immunity to IR changes",   "Immunity to GR changes",
    "Resolution Stability",     "Fairness Symmetry",
    "IR Symmetry",              "GR Symmetry",
    "Perfect Fairness Stability", "Undefined Values",
};

Raw AbsDiff(Raw x, Raw y) { return x > y ? x - y : y - x; }

Rational Complement(const Rational& r) { return Rational::Integer(1) - r; }

bool ClosedUnderComplement(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [&](const Rational& r) {
    return std::binary_search(v.begin(), v.end(), Complement(r));
  });
}

// The grid value closest to 1/2 (the smaller one on a tie).
Rational CenterOf(const std::vector<Rational>& v) {
  const Rational half(1, 2);
  Rational best = v.front();
  for (const Rational& r : v) {
    if (Abs(r - half) < Abs(best - half)) best = r;
  }
  return best;
}

// "n" -> "n_p=0 or n_up=0"; "TP+FN" -> "TP_p+FN_p=0 or TP_up+FN_up=0".
std::string StructuralCondition(MeasureId measure) {
  std::string_view label = StatisticSpec(measure).denominator_label;
  auto subscript = [&](std::string_view suffix) {
    std::string out;
    std::size_t start = 0;
    while (true) {
      std::size_t plus = label.find('+', start);
      out += label.substr(start, plus - start);
      out += suffix;
      if (plus == std::string_view::npos) break;
      out += '+';
      start = plus + 1;
    }
    return out + "=0";
  };
  return subscript("_p") + " or " + subscript("_up");
}

class Evaluator {
 public:
  Evaluator(MeasureId measure, const RatioGrid& grid,
            const PropertyThresholds& thresholds, const PmfCache& cache)
      : measure_(measure), grid_(grid), thresholds_(thresholds),
        cache_(cache) {}

  PropertyVerdict Run(PropertyId property) {
    PropertyVerdict v;
    v.property = property;
    v.measure = measure_;
    switch (property) {
      case PropertyId::kImmunityIR:
        Immunity(/*vary_ir=*/true, &v);
        break;
      case PropertyId::kImmunityGR:
        Immunity(/*vary_ir=*/false, &v);
        break;
      case PropertyId::kResolutionStability:
        Resolution(&v);
        break;
      case PropertyId::kFairnessSymmetry:
        FairnessSymmetry(&v);
        break;
      case PropertyId::kIRSymmetry:
        CounterpartSymmetry(/*vary_ir=*/true, &v);
        break;
      case PropertyId::kGRSymmetry:
        CounterpartSymmetry(/*vary_ir=*/false, &v);
        break;
      case PropertyId::kPerfectFairnessStability:
        PerfectFairness(&v);
        break;
      case PropertyId::kUndefinedValues:
        UndefinedValues(&v);
        break;
    }
    return v;
  }

 private:
  const Pmf& At(const GridPoint& p) const {
    return cache_.Get(measure_, grid_.StratumAt(p));
  }

  std::vector<GridPoint> Points() const {
    std::vector<GridPoint> pts;
    for (const auto& ir : grid_.ir) {
      for (const auto& gr : grid_.gr) pts.push_back({ir, gr});
    }
    return pts;
  }

  // Max pairwise TV along one axis, for every value of the other axis.
  struct MaxDistance {
    Rational value;
    std::vector<GridPoint> witness;
  };

  MaxDistance MaxPairwiseTv(bool vary_ir, Denominator denominator) const {
    const auto& varied = vary_ir ? grid_.ir : grid_.gr;
    const auto& fixed = vary_ir ? grid_.gr : grid_.ir;
    MaxDistance best{Rational(), {}};
    for (const auto& f : fixed) {
      for (std::size_t i = 0; i < varied.size(); ++i) {
        for (std::size_t j = i + 1; j < varied.size(); ++j) {
          GridPoint a = vary_ir ? GridPoint{varied[i], f} : GridPoint{f, varied[i]};
          GridPoint b = vary_ir ? GridPoint{varied[j], f} : GridPoint{f, varied[j]};
          Rational d = TotalVariation(At(a), At(b), denominator);
          if (best.witness.empty() || d > best.value) best = {d, {a, b}};
        }
      }
    }
    return best;
  }

  void Immunity(bool vary_ir, PropertyVerdict* v) const {
    v->threshold = thresholds_.immunity_tv;
    MaxDistance full = MaxPairwiseTv(vary_ir, Denominator::kAll);
    v->statistic = full.value;
    if (full.value <= thresholds_.immunity_tv) {
      v->verdict = Verdict::kHolds;
      return;
    }
    if (vary_ir) {
      v->verdict = Verdict::kFails;
      v->witnesses = full.witness;
      return;
    }
    MaxDistance defined = MaxPairwiseTv(vary_ir, Denominator::kDefined);
    v->defined_only_statistic = defined.value;
    if (defined.value <= thresholds_.immunity_tv) {
      v->verdict = Verdict::kHoldsWithCaveat;
    } else {
      v->verdict = Verdict::kFails;
      v->witnesses = full.witness;
    }
  }

  void Resolution(PropertyVerdict* v) const {
    v->threshold = thresholds_.resolution_ratio;
    std::optional<std::pair<std::size_t, GridPoint>> lo, hi;
    for (const auto& p : Points()) {
      std::size_t u = At(p).unique_values();
      if (!lo || u < lo->first) lo = {u, p};
      if (!hi || u > hi->first) hi = {u, p};
    }
    Rational ratio = hi->first == 0
                         ? Rational()
                         : Rational(static_cast<std::int64_t>(lo->first),
                                    static_cast<std::int64_t>(hi->first));
    v->statistic = ratio;
    if (ratio >= thresholds_.resolution_ratio) {
      v->verdict = Verdict::kHolds;
    } else {
      v->verdict = Verdict::kFails;
      v->witnesses = {lo->second, hi->second};
    }
  }

  void FairnessSymmetry(PropertyVerdict* v) const {
    v->threshold = Rational();
    for (const auto& p : Points()) {
      if (!At(p).IsSymmetric()) v->witnesses.push_back(p);
    }
    Finish(v);
  }

  void CounterpartSymmetry(bool vary_ir, PropertyVerdict* v) const {
    v->threshold = Rational();
    const auto& varied = vary_ir ? grid_.ir : grid_.gr;
    const auto& fixed = vary_ir ? grid_.gr : grid_.ir;
    for (const auto& f : fixed) {
      for (const auto& r : varied) {
        Rational c = Complement(r);
        if (c < r) continue;
        GridPoint a = vary_ir ? GridPoint{r, f} : GridPoint{f, r};
        GridPoint b = vary_ir ? GridPoint{c, f} : GridPoint{f, c};
        const Pmf& pa = At(a);
        const Pmf& pb = At(b);
        bool equal = pa == pb;
        if (!vary_ir) {
          // Swapping the groups maps GR=g onto GR=1-g with negated values, so
          // counterpart equality must coincide with symmetry at g.
          if (pb != pa.Negated() || equal != pa.IsSymmetric()) {
            Fail(ErrorCode::kInternal,
                 "group-swap mirror identity violated at IR=" +
                     f.ToString() + ", GR=" + r.ToString());
          }
        }
        if (!equal) {
          v->witnesses.push_back(a);
          if (!(a == b)) v->witnesses.push_back(b);
        }
      }
    }
    Finish(v);
  }

  // Symmetry statistic = number of offending grid points.
  static void Finish(PropertyVerdict* v) {
    v->statistic = Rational::Integer(static_cast<std::int64_t>(v->witnesses.size()));
    v->verdict = v->witnesses.empty() ? Verdict::kHolds : Verdict::kFails;
  }

  void PerfectFairness(PropertyVerdict* v) const {
    v->threshold = thresholds_.perfect_fairness_ratio;
    std::optional<std::pair<Rational, GridPoint>> lo, hi;
    for (const auto& p : Points()) {
      Rational pf = PerfectFairnessProbability(At(p));
      if (!lo || pf < lo->first) lo = {pf, p};
      if (!hi || pf > hi->first) hi = {pf, p};
    }
    if (hi->first.is_zero()) {
      v->statistic = Rational::Integer(1);
      v->verdict = Verdict::kHolds;
      return;
    }
    if (lo->first.is_zero()) {
      v->statistic.reset();
      v->verdict = Verdict::kFails;
      v->witnesses = {lo->second, hi->second};
      return;
    }
    Rational ratio = hi->first / lo->first;
    v->statistic = ratio;
    if (ratio <= thresholds_.perfect_fairness_ratio) {
      v->verdict = Verdict::kHolds;
    } else {
      v->verdict = Verdict::kFails;
      v->witnesses = {lo->second, hi->second};
    }
  }

  void UndefinedValues(PropertyVerdict* v) const {
    v->verdict = Verdict::kReported;
    Rational max_prob;
    std::map<GridPoint, Rational> probs;
    for (const auto& p : Points()) {
      Rational u = UndefinedProbability(At(p));
      probs[p] = u;
      v->undefined_probabilities.emplace_back(p, u);
      max_prob = std::max(max_prob, u);
    }
    v->statistic = max_prob;
    if (max_prob.is_zero()) {
      v->condition = "when " + StructuralCondition(measure_);
      return;
    }
    const Rational& k = thresholds_.undefined_trend_ratio;
    // Trend along GR measured at the central IR, and vice versa.
    const Rational ir_c = CenterOf(grid_.ir), gr_c = CenterOf(grid_.gr);
    auto exceeds = [&](const Rational& x, const Rational& ref) {
      return x > k * ref;
    };
    std::vector<std::string> parts;
    {
      Rational center = probs[{ir_c, gr_c}];
      bool low = exceeds(probs[{ir_c, grid_.gr.front()}], center);
      bool high = exceeds(probs[{ir_c, grid_.gr.back()}], center);
      if (low && high) parts.push_back("low/high GR");
      else if (low) parts.push_back("low GR");
      else if (high) parts.push_back("high GR");
    }
    {
      Rational low = probs[{grid_.ir.front(), gr_c}];
      Rational high = probs[{grid_.ir.back(), gr_c}];
      if (exceeds(low, high)) parts.push_back("low IR");
      else if (exceeds(high, low)) parts.push_back("high IR");
    }
    if (parts.empty()) parts.push_back("no dominant trend");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) v->condition += ", ";
      v->condition += parts[i];
    }
  }

  MeasureId measure_;
  const RatioGrid& grid_;
  const PropertyThresholds& thresholds_;
  const PmfCache& cache_;
};

}  // namespace

std::string_view PropertyName(PropertyId p) {
  return kPropertyNames[static_cast<std::size_t>(p)];
}

std::string_view PropertyTitle(PropertyId p) {
  return kPropertyTitles[static_cast<std::size_t>(p)];
}

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kFails:
      return "fails";
    case Verdict::kHoldsWithCaveat:
      return "holds-with-caveat";
    case Verdict::kReported:
      return "reported";
  }
  return "";
}

RatioGrid RatioGrid::Make(std::int64_t n, std::vector<Rational> ir,
                          std::vector<Rational> gr) {
  if (ir.empty() || gr.empty()) {
    Fail(ErrorCode::kInvalidArgument, "ratio grids must be non-empty");
  }
  for (auto* v : {&ir, &gr}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  RatioGrid grid{n, std::move(ir), std::move(gr)};
  for (const auto& r : grid.ir) {
    for (const auto& g : grid.gr) Stratum::FromRatios(n, r, g);
  }
  return grid;
}

bool RatioGrid::IrClosedUnderComplement() const {
  return ClosedUnderComplement(ir);
}

bool RatioGrid::GrClosedUnderComplement() const {
  return ClosedUnderComplement(gr);
}

Stratum RatioGrid::StratumAt(const GridPoint& point) const {
  return Stratum::FromRatios(n, point.ir, point.gr);
}

Rational TotalVariation(const Pmf& a, const Pmf& b, Denominator denominator) {
  if (a.empty() || b.empty()) {
    Fail(ErrorCode::kInvalidArgument, "total variation of an empty pmf");
  }
  const bool all = denominator == Denominator::kAll;
  const Count ta = all ? a.total() : a.defined_count();
  const Count tb = all ? b.total() : b.defined_count();
  if (ta == Count(0) || tb == Count(0)) {
    return ta == tb ? Rational() : Rational::Integer(1);
  }
  // sum |a_v * tb - b_v * ta| / (2 * ta * tb)
  Count sum;
  auto ia = a.entries().begin(), ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    Count ca, cb;
    if (ib == b.entries().end() ||
        (ia != a.entries().end() && ia->first < ib->first)) {
      ca = (ia++)->second;
    } else if (ia == a.entries().end() || ib->first < ia->first) {
      cb = (ib++)->second;
    } else {
      ca = (ia++)->second;
      cb = (ib++)->second;
    }
    sum += Count::FromRaw(AbsDiff((ca * tb).raw(), (cb * ta).raw()));
  }
  if (all) {
    sum += Count::FromRaw(AbsDiff((a.undefined_count() * tb).raw(),
                                  (b.undefined_count() * ta).raw()));
  }
  return Rational::FromCounts(sum, Count(2) * ta * tb);
}

PmfCache PmfCache::Build(const RatioGrid& grid,
                         std::span<const MeasureId> measures,
                         const Executor& executor) {
  std::vector<std::pair<MeasureId, Stratum>> keys;
  for (MeasureId m : measures) {
    for (const auto& r : grid.ir) {
      for (const auto& g : grid.gr) {
        keys.emplace_back(m, grid.StratumAt({r, g}));
      }
    }
  }
  std::vector<Pmf> pmfs(keys.size());
  executor.ParallelFor(keys.size(), [&](std::size_t i) {
    pmfs[i] = StratumPmfFast(keys[i].first, keys[i].second);
  });
  PmfCache cache;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    cache.pmfs_.emplace(keys[i], std::move(pmfs[i]));
  }
  return cache;
}

const Pmf& PmfCache::Get(MeasureId measure, const Stratum& s) const {
  auto it = pmfs_.find({measure, s});
  if (it == pmfs_.end()) {
    Fail(ErrorCode::kInternal, "pmf not cached for " + s.ToString());
  }
  return it->second;
}

PropertyVerdict EvaluateProperty(PropertyId property, MeasureId measure,
                                 const RatioGrid& grid,
                                 const PropertyThresholds& thresholds,
                                 const PmfCache& cache) {
  if (property == PropertyId::kIRSymmetry && !grid.IrClosedUnderComplement()) {
    Fail(ErrorCode::kInvalidArgument,
         "IR grid is not closed under r -> 1-r, required for IR Symmetry");
  }
  if (property == PropertyId::kGRSymmetry && !grid.GrClosedUnderComplement()) {
    Fail(ErrorCode::kInvalidArgument,
         "GR grid is not closed under r -> 1-r, required for GR Symmetry");
  }
  return Evaluator(measure, grid, thresholds, cache).Run(property);
}

PropertyVerdict EvaluateProperty(PropertyId property, MeasureId measure,
                                 const RatioGrid& grid,
                                 const PropertyThresholds& thresholds,
                                 const Executor& executor) {
  const MeasureId measures[] = {measure};
  PmfCache cache = PmfCache::Build(grid, measures, executor);
  return EvaluateProperty(property, measure, grid, thresholds, cache);
}

const PropertyVerdict& PropertyReport::Cell(PropertyId property,
                                            MeasureId measure) const {
  return cells[static_cast<std::size_t>(property) * kAllMeasures.size() +
               static_cast<std::size_t>(measure)];
}

PropertyReport BuildPropertyReport(const RatioGrid& grid,
                                   const PropertyThresholds& thresholds,
                                   const Executor& executor) {
  if (!grid.IrClosedUnderComplement() || !grid.GrClosedUnderComplement()) {
    Fail(ErrorCode::kInvalidArgument,
         "property report needs IR and GR grids closed under r -> 1-r");
  }
  PmfCache cache = PmfCache::Build(grid, kAllMeasures, executor);
  PropertyReport report{grid, thresholds, {}};
  report.cells.resize(kAllProperties.size() * kAllMeasures.size());
  executor.ParallelFor(report.cells.size(), [&](std::size_t i) {
    PropertyId p = kAllProperties[i / kAllMeasures.size()];
    MeasureId m = kAllMeasures[i % kAllMeasures.size()];
    report.cells[i] = EvaluateProperty(p, m, grid, thresholds, cache);
  });
  return report;
}

}  // namespace fairdist
