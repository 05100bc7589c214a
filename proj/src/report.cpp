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

#include "odic/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "odic/version.hpp"

namespace odic {

using nlohmann::ordered_json;

ordered_json ToJson(const LossReport& r) {
  ordered_json j;
  j["sal_mse"] = r.sal_mse;
  j["bpp"] = r.bpp;
  j["lambda"] = r.lambda;
  j["total"] = r.total;
  if (r.kld) j["kld"] = *r.kld;
  if (r.cc) j["cc"] = *r.cc;
  if (r.fusion) j["fusion"] = *r.fusion;
  return j;
}

ordered_json ToJson(const QualityScore& s) {
  ordered_json j;
  j["metric"] = std::string(MetricName(s.metric));
  j["value"] = s.value;
  j["cap_applied"] = s.cap_applied;
  return j;
}

ordered_json ToJson(const BdResult& r) {
  ordered_json j;
  j["bd_psnr"] = r.bd_psnr;
  j["bd_rate"] = r.bd_rate;
  j["rate_interval"] = {r.rate_interval.first, r.rate_interval.second};
  j["quality_interval"] = {r.quality_interval.first, r.quality_interval.second};
  return j;
}

ordered_json Stamped(ordered_json body) {
  ordered_json j;
  j["odic_version"] = kVersionString;
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

namespace {

// Shortest text that parses back to the same double.
std::string Shortest(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

}  // namespace

std::string FormatRdCsvRow(const std::string& image, const codec::RdPoint& p) {
  return image + "," + std::to_string(p.lambda_index) + "," +
         Shortest(p.lambda) + "," + Shortest(p.bpp) + "," +
         Shortest(p.ws_psnr) + "," + Shortest(p.sal_psnr) + "," +
         Shortest(p.ws_ssim);
}

std::string FormatRdCsv(
    const std::vector<std::pair<std::string, std::vector<codec::RdPoint>>>&
        runs) {
  std::string out = std::string(kRdCsvHeader) + "\n";
  for (const auto& [image, points] : runs)
    for (const codec::RdPoint& p : points)
      out += FormatRdCsvRow(image, p) + "\n";
  return out;
}

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 20, kBottom = 50;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string RenderRdPlotSvg(const std::vector<PlotSeries>& series,
                            const std::string& y_label) {
  if (series.empty()) throw ArgumentError("no curves to plot");
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const PlotSeries& s : series) {
    for (const RdSample& p : s.points) {
      x0 = std::min(x0, p.bpp);
      x1 = std::max(x1, p.bpp);
      y0 = std::min(y0, p.quality);
      y1 = std::max(y1, p.quality);
    }
  }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 <= x0) x1 = x0 + 1.0;
  if (y1 <= y0) y1 = y0 + 1.0;
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * ph; };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(kWidth) +
      "\" height=\"" + Num(kHeight) + "\" viewBox=\"0 0 " + Num(kWidth) + " " +
      Num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + Num(kLeft) + "\" y1=\"" + Num(kTop + ph) +
         "\" x2=\"" + Num(kLeft + pw) + "\" y2=\"" + Num(kTop + ph) + "\"/>\n";
  svg += "<line x1=\"" + Num(kLeft) + "\" y1=\"" + Num(kTop) + "\" x2=\"" +
         Num(kLeft) + "\" y2=\"" + Num(kTop + ph) + "\"/>\n</g>\n";
  svg += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    svg += "<text x=\"" + Num(sx(xv)) + "\" y=\"" + Num(kTop + ph + 16) +
           "\" text-anchor=\"middle\">" + Num(xv) + "</text>\n";
    svg += "<text x=\"" + Num(kLeft - 6) + "\" y=\"" + Num(sy(yv) + 4) +
           "\" text-anchor=\"end\">" + Num(yv) + "</text>\n";
  }
  svg += "<text x=\"" + Num(kLeft + pw / 2) + "\" y=\"" +
         Num(kHeight - 10) + "\" text-anchor=\"middle\">bpp</text>\n";
  svg += "<text x=\"16\" y=\"" + Num(kTop + ph / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         Num(kTop + ph / 2) + ")\">" + Escape(y_label) + "</text>\n</g>\n";
  for (size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    std::string pts;
    for (const RdSample& p : series[i].points) {
      if (!pts.empty()) pts += ' ';
      pts += Num(sx(p.bpp)) + "," + Num(sy(p.quality));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
    const double ly = kTop + 14 + 16 * static_cast<double>(i);
    svg += "<g font-family=\"sans-serif\" font-size=\"12\"><rect x=\"" +
           Num(kLeft + pw - 150) + "\" y=\"" + Num(ly - 9) +
           "\" width=\"10\" height=\"10\" fill=\"" + color + "\"/><text x=\"" +
           Num(kLeft + pw - 135) + "\" y=\"" + Num(ly) + "\">" +
           Escape(series[i].label) + "</text></g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

void EmitRdPlot(const std::vector<PlotSeries>& series,
                const std::string& y_label, const std::string& path) {
  WriteTextFile(path, RenderRdPlotSvg(series, y_label));
}

}  // namespace odic
