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

#include <cmath>

#include <gtest/gtest.h>

#include "count.h"
#include "error.h"
#include "measures.h"
#include "rational.h"
#include "types.h"

namespace fairdist {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(RationalTest, Canonicalizes) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(2, 4).ToString(), "1/2");
  EXPECT_EQ(Rational(0, 7).ToString(), "0/1");
  EXPECT_EQ(Rational(3, -6).ToString(), "-1/2");
  EXPECT_EQ(Rational(-3, -6).ToString(), "1/2");
}

TEST(RationalTest, RejectsZeroDenominator) {
  EXPECT_EQ(CodeOf([] { Rational(1, 0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { (void)(Rational(1, 2) / Rational(0, 1)); }),
            ErrorCode::kInvalidArgument);
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(1, 5), Rational(-1, 5));
  EXPECT_EQ(Abs(Rational(-7, 3)), Rational(7, 3));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(RationalTest, OverflowIsReported) {
  constexpr std::int64_t kBig = std::numeric_limits<std::int64_t>::max();
  EXPECT_EQ(CodeOf([] { (void)(Rational(kBig, 1) + Rational(kBig, 1)); }),
            ErrorCode::kOverflow);
  EXPECT_EQ(Rational(kBig, 3) * Rational(3, kBig), Rational(1, 1));
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::Parse("1/28"), Rational(1, 28));
  EXPECT_EQ(Rational::Parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational::Parse("3"), Rational(3, 1));
  EXPECT_EQ(Rational::Parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::Parse(".5"), Rational(1, 2));
  for (const char* bad : {"", "1/", "/2", "a", "1/0", "1.2.3", "1/2/3"}) {
    EXPECT_EQ(CodeOf([&] { Rational::Parse(bad); }),
              ErrorCode::kInvalidArgument)
        << bad;
  }
}

TEST(CountTest, CheckedArithmetic) {
  Count max = Count::FromRaw(~Count::Raw{0});
  EXPECT_EQ(CodeOf([&] { (void)(max + Count(1)); }), ErrorCode::kOverflow);
  EXPECT_EQ(CodeOf([&] { (void)(max * Count(2)); }), ErrorCode::kOverflow);
  EXPECT_EQ(CodeOf([] { (void)(Count(1) - Count(2)); }), ErrorCode::kInternal);
  EXPECT_EQ(max.ToString(), "340282366920938463463374607431768211455");
  EXPECT_EQ(Count::Parse(max.ToString()), max);
  EXPECT_FALSE(max.FitsUint64());
  EXPECT_EQ(CodeOf([&] { max.ToUint64(); }), ErrorCode::kOverflow);
}

TEST(StratumTest, FromRatios) {
  EXPECT_EQ(Stratum::FromRatios(56, Rational(1, 28), Rational(1, 2)),
            Stratum(56, 2, 28));
  EXPECT_EQ(Stratum::FromRatios(8, Rational(1, 2), Rational(1, 2)),
            Stratum(8, 4, 4));
  try {
    Stratum::FromRatios(10, Rational(1, 3), Rational(1, 2));
    FAIL() << "expected an inexact-ratio error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInexactRatio);
    EXPECT_NE(std::string(e.what()).find("IR"), std::string::npos);
  }
  EXPECT_EQ(CodeOf([] { Stratum::FromRatios(10, Rational(1, 2), Rational(1, 3)); }),
            ErrorCode::kInexactRatio);
  EXPECT_EQ(CodeOf([] { Stratum::FromRatios(10, Rational(3, 2), Rational(1, 2)); }),
            ErrorCode::kInvalidArgument);
}

TEST(StratumTest, Validates) {
  EXPECT_EQ(CodeOf([] { Stratum(4, 5, 2); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { Stratum(0, 0, 0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { Stratum(4, 2, -1); }), ErrorCode::kInvalidArgument);
  Stratum s(8, 2, 3);
  EXPECT_EQ(s.negatives(), 6);
  EXPECT_EQ(s.n_up(), 5);
  EXPECT_EQ(s.imbalance_ratio(), Rational(1, 4));
}

TEST(ConfusionPairTest, Swaps) {
  auto pair = ConfusionPair::FromArray({1, 2, 3, 4, 5, 6, 7, 8});
  EXPECT_EQ(pair.SwapGroups().ToArray(),
            (std::array<std::int64_t, 8>{5, 6, 7, 8, 1, 2, 3, 4}));
  EXPECT_EQ(pair.SwapClasses().ToArray(),
            (std::array<std::int64_t, 8>{3, 4, 1, 2, 7, 8, 5, 6}));
  EXPECT_EQ(pair.n(), 36);
  EXPECT_EQ(pair.positives(), 14);
  EXPECT_EQ(CodeOf([] { ConfusionPair::FromArray({0, 0, 0, -1, 0, 0, 0, 0}); }),
            ErrorCode::kInvalidArgument);
}

TEST(MeasureNamesTest, RoundTrip) {
  for (MeasureId m : kAllMeasures) EXPECT_EQ(ParseMeasure(MeasureName(m)), m);
  EXPECT_EQ(MeasureName(MeasureId::kPositivePredictiveParity),
            "positive-predictive-parity");
  EXPECT_FALSE(ParseMeasure("equalized-odds"));
  EXPECT_EQ(ParsePerformance("g-mean"), PerformanceMeasure::kGMean);
}

TEST(GroupStatisticTest, Examples) {
  EXPECT_EQ(GroupStatistic(MeasureId::kEqualOpportunity, {2, 0, 0, 2}),
            MeasureValue::Defined(Rational(1, 1)));
  EXPECT_FALSE(GroupStatistic(MeasureId::kEqualOpportunity, {0, 0, 1, 1})
                   .is_defined());
  EXPECT_EQ(GroupStatistic(MeasureId::kAccuracyEquality, {1, 1, 1, 1}),
            MeasureValue::Defined(Rational(1, 2)));
}

ConfusionPair Pair(std::array<std::int64_t, 8> v) {
  return ConfusionPair::FromArray(v);
}

TEST(EvaluateMeasureTest, Examples) {
  auto pair = Pair({2, 0, 0, 2, 1, 1, 1, 1});
  EXPECT_EQ(EvaluateMeasure(MeasureId::kStatisticalParity, pair).ToString(),
            "0/1");
  EXPECT_EQ(EvaluateMeasure(MeasureId::kPredictiveEquality, pair).ToString(),
            "-1/2");
  EXPECT_EQ(EvaluateMeasure(MeasureId::kEqualOpportunity,
                            Pair({1, 0, 0, 0, 0, 0, 0, 1}))
                .ToString(),
            "undefined");
  auto same = Pair({3, 1, 2, 5, 3, 1, 2, 5});
  for (MeasureId m : kAllMeasures) {
    EXPECT_EQ(EvaluateMeasure(m, same).ToString(), "0/1");
  }
}

TEST(PerformanceTest, Accuracy) {
  EXPECT_EQ(Accuracy(Pair({2, 0, 0, 2, 1, 1, 1, 1})),
            MeasureValue::Defined(Rational(3, 4)));
  EXPECT_EQ(Accuracy(Pair({2, 0, 0, 3, 1, 0, 0, 1})),
            MeasureValue::Defined(Rational(1, 1)));
  EXPECT_FALSE(Accuracy(Pair({0, 0, 0, 0, 0, 0, 0, 0})).is_defined());
}

TEST(PerformanceTest, GMean) {
  EXPECT_EQ(GMean(Pair({2, 0, 0, 3, 1, 0, 0, 1})).ToDouble(), 1.0);
  auto half = GMean(Pair({1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(half.radicand, MeasureValue::Defined(Rational(1, 4)));
  EXPECT_DOUBLE_EQ(half.ToDouble(), 0.5);
  EXPECT_FALSE(GMean(Pair({0, 0, 1, 1, 0, 0, 2, 0})).is_defined());
}

}  // namespace
}  // namespace fairdist
