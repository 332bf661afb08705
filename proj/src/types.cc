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

#include "types.h"

#include "error.h"

namespace fairdist {
namespace {

constexpr std::array<std::string_view, 6> kMeasureNames = {
    "accuracy-equality",          "statistical-parity",
    "equal-opportunity",          "predictive-equality",
    "positive-predictive-parity", "negative-predictive-parity",
};

std::int64_t ExactMultiple(std::int64_t n, const Rational& r,
                           std::string_view label) {
  if (r < Rational() || r > Rational::Integer(1)) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(label) + " " + r.ToString() + " outside [0, 1]");
  }
  Rational scaled = r * Rational::Integer(n);
  if (!scaled.is_integer()) {
    Fail(ErrorCode::kInexactRatio,
         std::string(label) + " " + r.ToString() + " times n=" +
             std::to_string(n) + " is not an integer");
  }
  return scaled.num();
}

}  // namespace

std::array<std::int64_t, 8> ConfusionPair::ToArray() const {
  const auto& p = protected_group;
  const auto& u = unprotected_group;
  return {p.tp, p.fn, p.fp, p.tn, u.tp, u.fn, u.fp, u.tn};
}

ConfusionPair ConfusionPair::FromArray(const std::array<std::int64_t, 8>& v) {
  for (std::int64_t x : v) {
    if (x < 0) Fail(ErrorCode::kInvalidArgument, "negative confusion count");
  }
  return {{v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6], v[7]}};
}

ConfusionPair ConfusionPair::SwapClasses() const {
  auto swap = [](const GroupCounts& g) {
    return GroupCounts{g.fp, g.tn, g.tp, g.fn};
  };
  return {swap(protected_group), swap(unprotected_group)};
}

Stratum::Stratum(std::int64_t n, std::int64_t p, std::int64_t n_p)
    : n_(n), p_(p), n_p_(n_p) {
  if (n < 1 || p < 0 || p > n || n_p < 0 || n_p > n) {
    Fail(ErrorCode::kInvalidArgument,
         "invalid stratum (n=" + std::to_string(n) + ", p=" +
             std::to_string(p) + ", n_p=" + std::to_string(n_p) + ")");
  }
}

Stratum Stratum::FromRatios(std::int64_t n, const Rational& ir,
                            const Rational& gr) {
  if (n < 1) Fail(ErrorCode::kInvalidArgument, "n must be positive");
  std::int64_t p = ExactMultiple(n, ir, "IR");
  std::int64_t n_p = ExactMultiple(n, gr, "GR");
  return Stratum(n, p, n_p);
}

std::string Stratum::ToString() const {
  return "(n=" + std::to_string(n_) + ", p=" + std::to_string(p_) +
         ", n_p=" + std::to_string(n_p_) + ")";
}

std::string_view MeasureName(MeasureId m) {
  return kMeasureNames[static_cast<std::size_t>(m)];
}

std::optional<MeasureId> ParseMeasure(std::string_view name) {
  for (MeasureId m : kAllMeasures) {
    if (MeasureName(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view PerformanceName(PerformanceMeasure m) {
  return m == PerformanceMeasure::kAccuracy ? "accuracy" : "g-mean";
}

std::optional<PerformanceMeasure> ParsePerformance(std::string_view name) {
  if (name == "accuracy") return PerformanceMeasure::kAccuracy;
  if (name == "g-mean") return PerformanceMeasure::kGMean;
  return std::nullopt;
}

std::string MeasureValue::ToString() const {
  return is_defined() ? value_->ToString() : "undefined";
}

}  // namespace fairdist
