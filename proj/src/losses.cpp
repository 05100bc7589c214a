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

#include "odic/losses.hpp"

#include <cmath>

#include "odic/numeric.hpp"
#include "odic/quality_metrics.hpp"
#include "odic/saliency_mask.hpp"
#include "odic/saliency_metrics.hpp"

namespace odic {

bool LossReport::consistent(double rel_tol) const {
  auto close = [rel_tol](double a, double b) {
    return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a),
                                                  std::abs(b)});
  };
  if (!close(total, lambda * sal_mse + bpp)) return false;
  if (fusion || kld || cc) {
    if (!fusion || !kld || !cc) return false;
    if (!close(*fusion, *kld - *cc)) return false;
  }
  return sal_mse >= 0.0 && bpp >= 0.0 && lambda > 0.0;
}

double SalMse(const ErpImage& x, const ErpImage& x_hat, const SaliencyMap& s) {
  const Plane e = SquaredErrorMap(x, x_hat);
  if (s.width() != x.width() || s.height() != x.height())
    throw ArgumentError("saliency map does not match image size");
  const double ssum = PairwiseSum(s.values);
  if (!(ssum > 0.0)) throw DegenerateError("saliency weights sum to zero");
  return PairwiseSum((s.values * e).eval()) / ssum;
}

SaliencyMap SigmoidWeights(const SaliencyMap& raw) {
  return SaliencyMap(raw.values.unaryExpr([](double v) { return Sigmoid(v); }));
}

double RdLoss(double distortion, double rate, double lambda) {
  if (!std::isfinite(distortion) || !std::isfinite(rate) ||
      !std::isfinite(lambda))
    throw ArgumentError("rd_loss inputs must be finite");
  if (!(lambda > 0.0)) throw ArgumentError("lambda must be positive");
  return lambda * distortion + rate;
}

FusionLoss ComputeFusionLoss(const SaliencyMap& pred, const SaliencyMap& gt,
                             const FixationMap* fixations) {
  FusionLoss out{};
  out.kld = Kld(gt, pred);
  out.cc = Cc(pred, gt);
  out.fusion = out.kld - out.cc;
  if (fixations) out.nss = Nss(pred, *fixations);
  return out;
}

double BitsPerPixel(std::uint64_t bytes, Index width, Index height) {
  if (width <= 0 || height <= 0) throw ArgumentError("zero image area");
  return 8.0 * static_cast<double>(bytes) /
         (static_cast<double>(width) * static_cast<double>(height));
}

LossReport MakeLossReport(double sal_mse, double bpp, double lambda,
                          const std::optional<FusionLoss>& fusion) {
  LossReport r;
  r.sal_mse = sal_mse;
  r.bpp = bpp;
  r.lambda = lambda;
  r.total = RdLoss(sal_mse, bpp, lambda);
  if (fusion) {
    r.kld = fusion->kld;
    r.cc = fusion->cc;
    r.fusion = fusion->fusion;
  }
  return r;
}

}  // namespace odic
