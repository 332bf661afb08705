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

#ifndef FAIRDIST_MEASURES_H_
#define FAIRDIST_MEASURES_H_

#include <array>
#include <cstdint>
#include <string_view>

#include "types.h"

namespace fairdist {

// Which GroupCounts fields (tp, fn, fp, tn) are summed into the numerator and
// denominator of a measure's per-group statistic. Every fairness measure is
// stat(protected) - stat(unprotected).
struct GroupStatisticSpec {
  std::array<bool, 4> numerator;
  std::array<bool, 4> denominator;
  // Human-readable name of the denominator quantity, e.g. "n" or "TP+FP".
  std::string_view denominator_label;

  std::int64_t Numerator(const GroupCounts& g) const;
  std::int64_t Denominator(const GroupCounts& g) const;
};

const GroupStatisticSpec& StatisticSpec(MeasureId measure);

// Undefined iff the denominator is zero.
MeasureValue GroupStatistic(MeasureId measure, const GroupCounts& g);

// stat(protected) - stat(unprotected); Undefined if either side is.
MeasureValue EvaluateMeasure(MeasureId measure, const ConfusionPair& pair);

// (TP + TN) / n over the combined matrix; Undefined iff n == 0.
MeasureValue Accuracy(const ConfusionPair& pair);

// G-mean kept exact as its radicand TP/(TP+FN) * TN/(FP+TN); the square root
// is applied only when a real number is needed (binning, plotting).
struct GMeanValue {
  MeasureValue radicand;

  bool is_defined() const { return radicand.is_defined(); }
  double ToDouble() const;
};

// Undefined iff P == 0 or N == 0.
GMeanValue GMean(const ConfusionPair& pair);

}  // namespace fairdist

#endif  // FAIRDIST_MEASURES_H_
