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

#ifndef FAIRDIST_SVG_H_
#define FAIRDIST_SVG_H_

#include <optional>
#include <string>
#include <string_view>

#include "distribution.h"
#include "serialize.h"

namespace fairdist {

enum class PlotKind { kHistogram, kCurve, kHeatmap };

std::optional<PlotKind> ParsePlotKind(std::string_view name);

// All charts use a fixed 800x600 viewBox and contain no timestamps, so equal
// inputs render to identical bytes.
//
// Value bars are drawn only for non-empty bins; the undefined bucket is a
// separate red bar one bar width to the right of the value axis.
std::string RenderHistogramSvg(const BinnedHistogram& h,
                               std::string_view title);
std::string RenderCurveSvg(const CurveData& curve);
// One rect per (fairness bin, performance bin) cell.
std::string RenderHeatmapSvg(const HeatmapData& heatmap);

// Parses an exported artifact and renders it. Histograms re-bin a parsed pmf
// with `bins`. Throws kInvalidArgument on a schema mismatch or an empty pmf.
std::string RenderSvg(std::string_view text, PlotKind kind,
                      int bins = kDefaultBins);

}  // namespace fairdist

#endif  // FAIRDIST_SVG_H_
