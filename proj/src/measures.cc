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

#include "measures.h"

#include <cmath>

namespace fairdist {
namespace {

// Field order: tp, fn, fp, tn.
constexpr std::array<GroupStatisticSpec, 6> kSpecs = {{
    {{true, false, false, true}, {true, true, true, true}, "n"},
    {{true, false, true, false}, {true, true, true, true}, "n"},
    {{true, false, false, false}, {true, true, false, false}, "TP+FN"},
    {{false, false, true, false}, {false, false, true, true}, "FP+TN"},
    {{true, false, false, false}, {true, false, true, false}, "TP+FP"},
    {{false, false, false, true}, {false, true, false, true}, "TN+FN"},
}};

std::int64_t Select(const std::array<bool, 4>& mask, const GroupCounts& g) {
  return (mask[0] ? g.tp : 0) + (mask[1] ? g.fn : 0) + (mask[2] ? g.fp : 0) +
         (mask[3] ? g.tn : 0);
}

GroupCounts Combined(const ConfusionPair& pair) {
  const auto& p = pair.protected_group;
  const auto& u = pair.unprotected_group;
  return {p.tp + u.tp, p.fn + u.fn, p.fp + u.fp, p.tn + u.tn};
}

}  // namespace

std::int64_t GroupStatisticSpec::Numerator(const GroupCounts& g) const {
  return Select(numerator, g);
}

std::int64_t GroupStatisticSpec::Denominator(const GroupCounts& g) const {
  return Select(denominator, g);
}

const GroupStatisticSpec& StatisticSpec(MeasureId measure) {
  return kSpecs[static_cast<std::size_t>(measure)];
}

MeasureValue GroupStatistic(MeasureId measure, const GroupCounts& g) {
  const auto& spec = StatisticSpec(measure);
  std::int64_t den = spec.Denominator(g);
  if (den == 0) return MeasureValue::Undefined();
  return MeasureValue::Defined(Rational(spec.Numerator(g), den));
}

MeasureValue EvaluateMeasure(MeasureId measure, const ConfusionPair& pair) {
  MeasureValue p = GroupStatistic(measure, pair.protected_group);
  MeasureValue u = GroupStatistic(measure, pair.unprotected_group);
  if (!p.is_defined() || !u.is_defined()) return MeasureValue::Undefined();
  return MeasureValue::Defined(p.value() - u.value());
}

MeasureValue Accuracy(const ConfusionPair& pair) {
  GroupCounts c = Combined(pair);
  if (c.size() == 0) return MeasureValue::Undefined();
  return MeasureValue::Defined(Rational(c.tp + c.tn, c.size()));
}

double GMeanValue::ToDouble() const {
  return std::sqrt(radicand.value().ToDouble());
}

GMeanValue GMean(const ConfusionPair& pair) {
  GroupCounts c = Combined(pair);
  if (c.positives() == 0 || c.negatives() == 0) {
    return {MeasureValue::Undefined()};
  }
  return {MeasureValue::Defined(Rational(c.tp, c.positives()) *
                                Rational(c.tn, c.negatives()))};
}

}  // namespace fairdist
