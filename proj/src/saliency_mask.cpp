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

#include "odic/saliency_mask.hpp"

#include <algorithm>
#include <cmath>

#include "odic/sphere_geom.hpp"

namespace odic {

double Sigmoid(double t) { return 1.0 / (1.0 + std::exp(-t)); }

SaliencyMap RescaleAndSigmoid(const SaliencyMap& raw) {
  if (raw.values.size() == 0 || !raw.values.allFinite())
    throw ArgumentError("saliency map must be non-empty and finite");
  const double lo = raw.values.minCoeff();
  const double hi = raw.values.maxCoeff();
  if (!(hi > lo))
    throw DegenerateError("constant saliency map cannot be rescaled");
  const double scale = 255.0 / (hi - lo);
  return SaliencyMap(raw.values.unaryExpr(
      [lo, scale](double v) { return Sigmoid((v - lo) * scale); }));
}

DownsampledMask DownsampleMask(const SaliencyMap& s, Index factor) {
  if (factor < 1) throw ArgumentError("downsample factor must be >= 1");
  const Index H = s.height();
  const Index W = s.width();
  if (H < 1 || W < 1) throw ArgumentError("empty saliency map");
  if (factor > H && factor > W)
    throw ArgumentError("downsample factor exceeds both map dimensions");
  const Index h = (H + factor - 1) / factor;
  const Index w = (W + factor - 1) / factor;
  DownsampledMask m{Plane(h, w)};
  for (Index by = 0; by < h; ++by) {
    const Index y0 = by * factor;
    const Index bh = std::min(factor, H - y0);
    for (Index bx = 0; bx < w; ++bx) {
      const Index x0 = bx * factor;
      const Index bw = std::min(factor, W - x0);
      m.values(by, bx) = s.values.block(y0, x0, bh, bw).sum() /
                         static_cast<double>(bh * bw);
    }
  }
  return m;
}

MaskResidual ComputeMaskResidual(const DownsampledMask& m, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw ArgumentError("alpha must be a positive finite value");
  return MaskResidual{(m.values + alpha) / alpha, alpha};
}

MaskResidual SaliencyToResidual(const SaliencyMap& raw, Index factor,
                                double alpha) {
  return ComputeMaskResidual(DownsampleMask(RescaleAndSigmoid(raw), factor),
                             alpha);
}

double GreatCircleDistance(double lat1, double lon1, double lat2,
                           double lon2) {
  // Haversine form, well conditioned for small separations.
  const double dlat = lat2 - lat1;
  const double dlon = lon2 - lon1;
  const double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1) * std::cos(lat2) * std::sin(dlon / 2) *
                       std::sin(dlon / 2);
  return 2.0 * std::asin(std::min(1.0, std::sqrt(a)));
}

SaliencyMap EquatorPriorSaliency(Index width, Index height, double sigma_lat,
                                 const std::vector<Hotspot>& hotspots) {
  if (!(sigma_lat > 0.0)) throw ArgumentError("sigma_lat must be positive");
  if (width < 1 || height < 1) throw ArgumentError("empty saliency grid");
  SaliencyMap out(width, height);
  for (Index v = 0; v < height; ++v) {
    for (Index u = 0; u < width; ++u) {
      const Spherical s = ErpPixelToSpherical(u, v, width, height);
      double value =
          std::exp(-s.latitude * s.latitude / (2.0 * sigma_lat * sigma_lat));
      for (const Hotspot& hs : hotspots) {
        if (!(hs.angular_sigma > 0.0))
          throw ArgumentError("hotspot sigma must be positive");
        const double d = GreatCircleDistance(s.latitude, s.longitude,
                                             hs.latitude, hs.longitude);
        value += hs.amplitude *
                 std::exp(-d * d / (2.0 * hs.angular_sigma * hs.angular_sigma));
      }
      out(v, u) = std::isfinite(value) ? std::max(value, 0.0) : 0.0;
    }
  }
  return out;
}

}  // namespace odic
