// Copyright 2026 The ODIC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "odic/bjontegaard.hpp"
#include "odic/codec/rd_sweep.hpp"
#include "odic/losses.hpp"
#include "odic/quality_metrics.hpp"

// Report serialization. Field names and column order are frozen; see
// docs/FORMATS.md. Every JSON report carries "odic_version".
namespace odic {

nlohmann::ordered_json ToJson(const LossReport& r);
nlohmann::ordered_json ToJson(const QualityScore& s);
nlohmann::ordered_json ToJson(const BdResult& r);

// Wraps a payload object with the version stamp.
nlohmann::ordered_json Stamped(nlohmann::ordered_json body);

inline constexpr const char* kRdCsvHeader =
    "image,lambda_index,lambda,bpp,ws_psnr,sal_psnr,ws_ssim";

std::string FormatRdCsvRow(const std::string& image,
                           const codec::RdPoint& p);

// Header plus rows, one per (image, point), in the given order.
std::string FormatRdCsv(
    const std::vector<std::pair<std::string, std::vector<codec::RdPoint>>>&
        runs);

struct PlotSeries {
  std::string label;
  std::vector<RdSample> points;
};

// Standalone SVG: bpp on x, metric on y, one polyline per series and a
// legend. Throws ArgumentError for an empty series list.
std::string RenderRdPlotSvg(const std::vector<PlotSeries>& series,
                            const std::string& y_label);
void EmitRdPlot(const std::vector<PlotSeries>& series,
                const std::string& y_label, const std::string& path);

void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace odic
