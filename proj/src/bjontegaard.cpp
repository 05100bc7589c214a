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

#include "odic/bjontegaard.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <Eigen/QR>

#include "odic/error.hpp"

namespace odic {

RdCurve RdCurve::FromPoints(std::vector<RdSample> points, size_t min_points) {
  for (const RdSample& p : points) {
    if (!std::isfinite(p.bpp) || !std::isfinite(p.quality) || !(p.bpp > 0.0))
      throw ArgumentError("RD points need finite quality and bpp > 0");
  }
  std::sort(points.begin(), points.end(),
            [](const RdSample& a, const RdSample& b) { return a.bpp < b.bpp; });
  for (size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].bpp > points[i - 1].bpp))
      throw ArgumentError("duplicate bpp in RD curve");
  }
  if (points.size() < min_points) {
    throw ArgumentError("RD curve needs at least " +
                        std::to_string(min_points) + " points");
  }
  RdCurve c;
  c.points_ = std::move(points);
  return c;
}

bool RdCurve::quality_strictly_increasing() const {
  for (size_t i = 1; i < points_.size(); ++i)
    if (!(points_[i].quality > points_[i - 1].quality)) return false;
  return true;
}

Eigen::ArrayXd RdCurve::log_rates() const {
  Eigen::ArrayXd r(static_cast<Eigen::Index>(points_.size()));
  for (size_t i = 0; i < points_.size(); ++i)
    r(static_cast<Eigen::Index>(i)) = std::log10(points_[i].bpp);
  return r;
}

Eigen::ArrayXd RdCurve::qualities() const {
  Eigen::ArrayXd q(static_cast<Eigen::Index>(points_.size()));
  for (size_t i = 0; i < points_.size(); ++i)
    q(static_cast<Eigen::Index>(i)) = points_[i].quality;
  return q;
}

Polynomial Polynomial::Fit(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                           int degree) {
  if (degree < 1) throw ArgumentError("fit degree must be >= 1");
  if (x.size() != y.size() || x.size() < degree + 1)
    throw ArgumentError("not enough points for polynomial fit");
  Polynomial p;
  p.center = 0.5 * (x.maxCoeff() + x.minCoeff());
  p.scale = 0.5 * (x.maxCoeff() - x.minCoeff());
  if (!(p.scale > 0.0)) throw ArgumentError("degenerate abscissa range");
  const Eigen::ArrayXd t = (x - p.center) / p.scale;
  Eigen::MatrixXd V(x.size(), degree + 1);
  V.col(0).setOnes();
  for (int k = 1; k <= degree; ++k)
    V.col(k) = V.col(k - 1).array() * t;
  p.coeffs = V.colPivHouseholderQr().solve(y.matrix());
  return p;
}

double Polynomial::operator()(double x) const {
  const double t = (x - center) / scale;
  double acc = 0.0;
  for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k) acc = acc * t + coeffs(k);
  return acc;
}

double Polynomial::Integrate(double lo, double hi) const {
  // Antiderivative in t, then dx = scale * dt.
  auto prim = [this](double x) {
    const double t = (x - center) / scale;
    double acc = 0.0;
    for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k)
      acc = acc * t + coeffs(k) / static_cast<double>(k + 1);
    return acc * t;
  };
  return scale * (prim(hi) - prim(lo));
}

namespace {

std::pair<double, double> Overlap(const Eigen::ArrayXd& a,
                                  const Eigen::ArrayXd& b) {
  const double lo = std::max(a.minCoeff(), b.minCoeff());
  const double hi = std::min(a.maxCoeff(), b.maxCoeff());
  if (!(hi > lo))
    throw ArgumentError("RD curves do not overlap; refusing to extrapolate");
  return {lo, hi};
}

void CheckCurve(const RdCurve& c, const BdOptions& opts) {
  if (c.size() < 4 || c.size() < static_cast<size_t>(opts.degree + 1))
    throw ArgumentError("RD curve has too few points for the fit");
}

double MeanGap(const Eigen::ArrayXd& xa, const Eigen::ArrayXd& ya,
               const Eigen::ArrayXd& xt, const Eigen::ArrayXd& yt,
               int degree, std::pair<double, double>* interval) {
  const auto [lo, hi] = Overlap(xa, xt);
  const Polynomial pa = Polynomial::Fit(xa, ya, degree);
  const Polynomial pt = Polynomial::Fit(xt, yt, degree);
  if (interval) *interval = {lo, hi};
  return (pt.Integrate(lo, hi) - pa.Integrate(lo, hi)) / (hi - lo);
}

}  // namespace

double BdPsnr(const RdCurve& anchor, const RdCurve& test,
              const BdOptions& opts) {
  CheckCurve(anchor, opts);
  CheckCurve(test, opts);
  return MeanGap(anchor.log_rates(), anchor.qualities(), test.log_rates(),
                 test.qualities(), opts.degree, nullptr);
}

double BdRate(const RdCurve& anchor, const RdCurve& test,
              const BdOptions& opts) {
  CheckCurve(anchor, opts);
  CheckCurve(test, opts);
  if (!anchor.quality_strictly_increasing() ||
      !test.quality_strictly_increasing())
    throw ArgumentError("BD-rate needs quality strictly increasing in bpp");
  const double d = MeanGap(anchor.qualities(), anchor.log_rates(),
                           test.qualities(), test.log_rates(), opts.degree,
                           nullptr);
  return 100.0 * (std::pow(10.0, d) - 1.0);
}

BdResult Bjontegaard(const RdCurve& anchor, const RdCurve& test,
                     const BdOptions& opts) {
  CheckCurve(anchor, opts);
  CheckCurve(test, opts);
  BdResult r;
  r.bd_psnr = MeanGap(anchor.log_rates(), anchor.qualities(), test.log_rates(),
                      test.qualities(), opts.degree, &r.rate_interval);
  if (anchor.quality_strictly_increasing() &&
      test.quality_strictly_increasing()) {
    const double d = MeanGap(anchor.qualities(), anchor.log_rates(),
                             test.qualities(), test.log_rates(), opts.degree,
                             &r.quality_interval);
    r.bd_rate = 100.0 * (std::pow(10.0, d) - 1.0);
  } else {
    throw ArgumentError("BD-rate needs quality strictly increasing in bpp");
  }
  return r;
}

namespace {

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return out;
}

double ParseDouble(const std::string& s, size_t line_no) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) {
    throw ArgumentError("malformed number '" + s + "' on line " +
                        std::to_string(line_no));
  }
  return v;
}

}  // namespace

RdCurve LoadRdCsv(const std::string& path, const std::string& metric,
                  const std::optional<std::string>& image) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open RD csv: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ArgumentError("empty RD csv: " + path);
  const std::vector<std::string> header = SplitCsv(line);
  auto find_col = [&header](const std::string& name) -> long {
    const auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<long>(it - header.begin());
  };
  const long bpp_col = find_col("bpp");
  long q_col = find_col(metric);
  if (q_col < 0) q_col = find_col("quality");
  const long img_col = find_col("image");
  if (bpp_col < 0 || q_col < 0)
    throw ArgumentError("RD csv lacks bpp or '" + metric + "' column");

  std::vector<RdSample> pts;
  std::optional<std::string> seen_image;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> f = SplitCsv(line);
    if (f.size() != header.size())
      throw ArgumentError("wrong field count on line " +
                          std::to_string(line_no));
    if (img_col >= 0) {
      const std::string& name = f[static_cast<size_t>(img_col)];
      if (image && name != *image) continue;
      if (!image) {
        if (seen_image && *seen_image != name)
          throw ArgumentError(
              "RD csv holds several images; select one explicitly");
        seen_image = name;
      }
    }
    pts.push_back({ParseDouble(f[static_cast<size_t>(bpp_col)], line_no),
                   ParseDouble(f[static_cast<size_t>(q_col)], line_no)});
  }
  return RdCurve::FromPoints(std::move(pts));
}

void WriteRdCsv(const std::string& path, const RdCurve& curve,
                const std::string& metric) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write RD csv: " + path);
  out << "bpp," << metric << "\n";
  char buf[96];
  for (const RdSample& p : curve.points()) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.bpp, p.quality);
    out << buf;
  }
}

}  // namespace odic
