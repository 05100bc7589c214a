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

#include "odic/augment.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace odic {
namespace {

template <typename Fn>
ErpImage MapPlanes(const ErpImage& img, Fn fn) {
  ErpImage out = img;
  for (auto& p : out.planes) p = fn(p);
  return out;
}

Plane RotatePlane(const Plane& p, Index shift) {
  const Index w = p.cols();
  const Index s = ((shift % w) + w) % w;
  Plane out(p.rows(), w);
  // out(:, j) = p(:, (j + s) mod w)
  out.leftCols(w - s) = p.rightCols(w - s);
  out.rightCols(s) = p.leftCols(s);
  return out;
}

Plane CropPlane(const Plane& p, CropOffset at, CropSize crop) {
  Plane out(crop.height, crop.width);
  const Index w = p.cols();
  for (Index x = 0; x < crop.width; ++x)
    out.col(x) = p.col((at.x + x) % w).segment(at.y, crop.height);
  return out;
}

// 1-D resampling matrix (target x source) applied along one axis.
Eigen::MatrixXd ResampleMatrix(Index src, Index dst) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dst, src);
  if (dst == src) return Eigen::MatrixXd::Identity(dst, src);
  const double ratio = static_cast<double>(src) / static_cast<double>(dst);
  if (dst < src) {
    for (Index i = 0; i < dst; ++i) {
      const double lo = static_cast<double>(i) * ratio;
      const double hi = static_cast<double>(i + 1) * ratio;
      for (Index k = static_cast<Index>(std::floor(lo));
           k < std::min<Index>(src, static_cast<Index>(std::ceil(hi))); ++k) {
        const double overlap = std::min(hi, static_cast<double>(k + 1)) -
                               std::max(lo, static_cast<double>(k));
        if (overlap > 0.0) m(i, k) = overlap / ratio;
      }
    }
  } else {
    for (Index i = 0; i < dst; ++i) {
      const double c = std::clamp((static_cast<double>(i) + 0.5) * ratio - 0.5,
                                  0.0, static_cast<double>(src - 1));
      const Index k0 = static_cast<Index>(std::floor(c));
      const Index k1 = std::min(k0 + 1, src - 1);
      const double f = c - static_cast<double>(k0);
      m(i, k0) += 1.0 - f;
      m(i, k1) += f;
    }
  }
  return m;
}

}  // namespace

ErpImage HFlip(const ErpImage& img) {
  return MapPlanes(img, [](const Plane& p) -> Plane { return p.rowwise().reverse(); });
}
SaliencyMap HFlip(const SaliencyMap& map) {
  return SaliencyMap(map.values.rowwise().reverse().eval());
}

ErpImage VMirror(const ErpImage& img) {
  return MapPlanes(img, [](const Plane& p) -> Plane { return p.colwise().reverse(); });
}
SaliencyMap VMirror(const SaliencyMap& map) {
  return SaliencyMap(map.values.colwise().reverse().eval());
}

ErpImage WrapRotate(const ErpImage& img, Index shift) {
  return MapPlanes(img, [shift](const Plane& p) { return RotatePlane(p, shift); });
}
SaliencyMap WrapRotate(const SaliencyMap& map, Index shift) {
  return SaliencyMap(RotatePlane(map.values, shift));
}

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

CropOffset DrawCropOffset(Index src_width, Index src_height, CropSize crop,
                          std::uint64_t seed) {
  if (crop.width < 1 || crop.height < 1)
    throw ArgumentError("crop size must be positive");
  if (crop.height > src_height)
    throw ArgumentError("crop is taller than the source image");
  if (crop.width > src_width)
    throw ArgumentError("crop is wider than the source image");
  // mt19937_64 plus a multiply-shift range reduction is specified bit for
  // bit, unlike std::uniform_int_distribution.
  std::mt19937_64 rng(seed);
  auto below = [&rng](Index n) {
    const unsigned __int128 r = rng();
    return static_cast<Index>((r * static_cast<unsigned __int128>(n)) >> 64);
  };
  const Index x = crop.width == src_width ? 0 : below(src_width);
  const Index y = below(src_height - crop.height + 1);
  return {x, y};
}

ErpImage CropAt(const ErpImage& img, CropOffset at, CropSize crop) {
  return MapPlanes(img, [&](const Plane& p) { return CropPlane(p, at, crop); });
}

SaliencyMap CropAt(const SaliencyMap& map, CropOffset at, CropSize crop) {
  return SaliencyMap(CropPlane(map.values, at, crop));
}

CropResult RandomCrop(const ErpImage& img, const SaliencyMap& saliency,
                      CropSize crop, std::uint64_t seed) {
  if (img.empty()) throw ArgumentError("empty image");
  if (saliency.width() != img.width() || saliency.height() != img.height())
    throw ArgumentError("saliency map missing or not co-registered");
  const CropOffset at = DrawCropOffset(img.width(), img.height(), crop, seed);
  return {CropAt(img, at, crop), CropAt(saliency, at, crop), at};
}

Plane ResizePlane(const Plane& src, Index target_w, Index target_h) {
  if (target_w < 1 || target_h < 1) throw ArgumentError("zero resize target");
  if (src.size() == 0) throw ArgumentError("empty plane");
  if (target_w == src.cols() && target_h == src.rows()) return src;
  const Eigen::MatrixXd ry = ResampleMatrix(src.rows(), target_h);
  const Eigen::MatrixXd rx = ResampleMatrix(src.cols(), target_w);
  return (ry * src.matrix() * rx.transpose()).array();
}

ErpImage Resize(const ErpImage& img, Index target_w, Index target_h) {
  ErpImage out = MapPlanes(img, [&](const Plane& p) {
    return ResizePlane(p, target_w, target_h);
  });
  for (auto& p : out.planes) p = p.max(0.0).min(img.max_value);
  return out;
}

SaliencyMap Resize(const SaliencyMap& map, Index target_w, Index target_h) {
  return SaliencyMap(ResizePlane(map.values, target_w, target_h).max(0.0).eval());
}

}  // namespace odic
