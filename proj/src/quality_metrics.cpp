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

#include "odic/quality_metrics.hpp"

#include <cmath>

#include "odic/numeric.hpp"
#include "odic/sphere_geom.hpp"

namespace odic {

std::string_view MetricName(MetricId id) {
  switch (id) {
    case MetricId::kWsPsnr: return "ws_psnr";
    case MetricId::kSalPsnr: return "sal_psnr";
    case MetricId::kWsSsim: return "ws_ssim";
  }
  return "?";
}

namespace {

void CheckPair(const ErpImage& ref, const ErpImage& dist) {
  if (ref.empty() || dist.empty()) throw ArgumentError("empty image");
  if (ref.width() != dist.width() || ref.height() != dist.height() ||
      ref.channels() != dist.channels())
    throw ArgumentError("reference and distorted images differ in shape");
}

Plane RowWeightsAsPlane(Index width, Index height) {
  const Eigen::ArrayXd w = LatitudeWeightMap<double>(height);
  return w.replicate(1, width);
}

}  // namespace

Plane SquaredErrorMap(const ErpImage& ref, const ErpImage& dist) {
  CheckPair(ref, dist);
  Plane e = Plane::Zero(ref.height(), ref.width());
  for (int c = 0; c < ref.channels(); ++c) e += (ref[c] - dist[c]).square();
  if (ref.channels() > 1) e /= static_cast<double>(ref.channels());
  return e;
}

QualityScore WeightedPsnr(const ErpImage& ref, const ErpImage& dist,
                          const Plane& weights, MetricId id) {
  const Plane e = SquaredErrorMap(ref, dist);
  if (weights.rows() != e.rows() || weights.cols() != e.cols())
    throw ArgumentError("weight map does not match image size");
  const double wsum = PairwiseSum(weights);
  if (!(wsum > 0.0)) throw DegenerateError("weights sum to zero");
  const double wmse = PairwiseSum((weights * e).eval()) / wsum;
  if (wmse <= 0.0) return {id, kPsnrCapDb, true};
  const double value =
      10.0 * std::log10(ref.max_value * ref.max_value / wmse);
  if (value > kPsnrCapDb) return {id, kPsnrCapDb, true};
  return {id, value, false};
}

double Mse(const ErpImage& ref, const ErpImage& dist) {
  const Plane e = SquaredErrorMap(ref, dist);
  return PairwiseSum(e) / static_cast<double>(e.size());
}

double Psnr(const ErpImage& ref, const ErpImage& dist) {
  const double mse = Mse(ref, dist);
  if (mse <= 0.0) return kPsnrCapDb;
  return std::min(kPsnrCapDb,
                  10.0 * std::log10(ref.max_value * ref.max_value / mse));
}

QualityScore WsPsnr(const ErpImage& ref, const ErpImage& dist) {
  CheckPair(ref, dist);
  return WeightedPsnr(ref, dist, RowWeightsAsPlane(ref.width(), ref.height()),
                      MetricId::kWsPsnr);
}

QualityScore SalPsnr(const ErpImage& ref, const ErpImage& dist,
                     const SaliencyMap& saliency, SalWeighting mode) {
  CheckPair(ref, dist);
  if (saliency.width() != ref.width() || saliency.height() != ref.height())
    throw ArgumentError("saliency map does not match image size");
  if (!saliency.valid()) throw ArgumentError("saliency map must be >= 0");
  const double smax = saliency.values.maxCoeff();
  if (!(smax > 0.0)) throw DegenerateError("saliency map is all zero");
  // Normalizing by the maximum leaves the ratio unchanged and makes a
  // constant map produce exactly the latitude weights.
  const Plane floored = saliency.values + 0.01 * smax;
  const Plane s = floored / floored.maxCoeff();
  const Plane lat = RowWeightsAsPlane(ref.width(), ref.height());
  const Plane u = mode == SalWeighting::kMultiplicative ? Plane(s * lat)
                                                        : Plane(s + lat);
  return WeightedPsnr(ref, dist, u, MetricId::kSalPsnr);
}

Plane Luma(const ErpImage& img) {
  if (img.channels() == 1) return img[0];
  if (img.channels() != 3) throw ArgumentError("luma needs 1 or 3 channels");
  return 0.299 * img[0] + 0.587 * img[1] + 0.114 * img[2];
}

namespace {

Eigen::ArrayXd GaussianKernel() {
  Eigen::ArrayXd k(kSsimWindow);
  const int r = kSsimWindow / 2;
  for (int i = 0; i < kSsimWindow; ++i) {
    const double x = i - r;
    k(i) = std::exp(-x * x / (2.0 * kSsimSigma * kSsimSigma));
  }
  return k / k.sum();
}

// Separable "valid" correlation with a symmetric kernel.
Plane FilterValid(const Plane& src, const Eigen::ArrayXd& k) {
  const Index n = k.size();
  const Index H = src.rows(), W = src.cols();
  Plane tmp = Plane::Zero(H, W - n + 1);
  for (Index i = 0; i < n; ++i) tmp += k(i) * src.middleCols(i, W - n + 1);
  Plane out = Plane::Zero(H - n + 1, W - n + 1);
  for (Index i = 0; i < n; ++i) out += k(i) * tmp.middleRows(i, H - n + 1);
  return out;
}

}  // namespace

Plane SsimMap(const Plane& a, const Plane& b, double max_value) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ArgumentError("SSIM inputs differ in shape");
  if (a.rows() < kSsimWindow || a.cols() < kSsimWindow)
    throw ArgumentError("image smaller than the SSIM window");
  const Eigen::ArrayXd k = GaussianKernel();
  const double c1 = (0.01 * max_value) * (0.01 * max_value);
  const double c2 = (0.03 * max_value) * (0.03 * max_value);
  const Plane mu_a = FilterValid(a, k);
  const Plane mu_b = FilterValid(b, k);
  const Plane var_a = FilterValid(a * a, k) - mu_a * mu_a;
  const Plane var_b = FilterValid(b * b, k) - mu_b * mu_b;
  const Plane cov = FilterValid(a * b, k) - mu_a * mu_b;
  return ((2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2)) /
         ((mu_a.square() + mu_b.square() + c1) * (var_a + var_b + c2));
}

double WeightedSsim(const ErpImage& ref, const ErpImage& dist,
                    const Eigen::ArrayXd& row_weights) {
  CheckPair(ref, dist);
  if (row_weights.size() != ref.height())
    throw ArgumentError("row weights must have one entry per image row");
  const Plane map = SsimMap(Luma(ref), Luma(dist), ref.max_value);
  const Index r = kSsimWindow / 2;
  const Eigen::ArrayXd w = row_weights.segment(r, map.rows());
  const Plane wp = w.replicate(1, map.cols());
  const double wsum = PairwiseSum(wp);
  if (!(wsum > 0.0)) throw DegenerateError("SSIM weights sum to zero");
  return PairwiseSum((wp * map).eval()) / wsum;
}

QualityScore WsSsim(const ErpImage& ref, const ErpImage& dist) {
  CheckPair(ref, dist);
  return {MetricId::kWsSsim,
          WeightedSsim(ref, dist, LatitudeWeightMap<double>(ref.height())),
          false};
}

}  // namespace odic
