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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace odic {

struct RdSample {
  double bpp;
  double quality;  // dB
};

// Rate-distortion curve sorted by strictly increasing bpp.
class RdCurve {
 public:
  RdCurve() = default;
  // Sorts by bpp and validates: bpp > 0, finite values, no duplicate rates,
  // at least `min_points` samples.
  static RdCurve FromPoints(std::vector<RdSample> points, size_t min_points = 4);

  const std::vector<RdSample>& points() const { return points_; }
  size_t size() const { return points_.size(); }
  bool quality_strictly_increasing() const;

  Eigen::ArrayXd log_rates() const;
  Eigen::ArrayXd qualities() const;

 private:
  std::vector<RdSample> points_;
};

// Least-squares polynomial on a normalized abscissa t = (x - center) / scale.
struct Polynomial {
  Eigen::VectorXd coeffs;  // ascending powers of t
  double center = 0.0;
  double scale = 1.0;

  static Polynomial Fit(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                        int degree);
  double operator()(double x) const;
  // Exact integral over [lo, hi] in x.
  double Integrate(double lo, double hi) const;
};

struct BdOptions {
  int degree = 3;
};

struct BdResult {
  double bd_psnr = 0.0;  // dB
  double bd_rate = 0.0;  // percent
  // Integration domains: log10(bpp) for BD-PSNR, quality for BD-rate.
  std::pair<double, double> rate_interval;
  std::pair<double, double> quality_interval;
};

// Mean quality gap (test - anchor) of the fitted curves over the overlapping
// log10-rate interval. Throws ArgumentError when the curves do not overlap.
double BdPsnr(const RdCurve& anchor, const RdCurve& test,
              const BdOptions& opts = {});

// 100 * (10^d - 1) where d is the mean log10-rate gap over the overlapping
// quality interval. Both curves need strictly increasing quality.
double BdRate(const RdCurve& anchor, const RdCurve& test,
              const BdOptions& opts = {});

BdResult Bjontegaard(const RdCurve& anchor, const RdCurve& test,
                     const BdOptions& opts = {});

// Reads a CSV with a header row containing `bpp` and a quality column named
// `metric` (or `quality`). When an `image` column is present and `image` is
// given, only matching rows are used.
RdCurve LoadRdCsv(const std::string& path,
                  const std::string& metric = "ws_psnr",
                  const std::optional<std::string>& image = std::nullopt);

// Writes `bpp,quality` rows with 17 significant digits.
void WriteRdCsv(const std::string& path, const RdCurve& curve,
                const std::string& metric = "quality");

}  // namespace odic
