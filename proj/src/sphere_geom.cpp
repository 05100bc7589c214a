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

#include "odic/sphere_geom.hpp"

#include <algorithm>
#include <cmath>

namespace odic {

Spherical ErpPixelToSpherical(Index u, Index v, Index width, Index height) {
  if (width < 1 || height < 1 || u < 0 || v < 0 || u >= width ||
      v >= height) {
    throw ArgumentError("pixel index outside ERP grid");
  }
  const double lat =
      (0.5 - (static_cast<double>(v) + 0.5) / static_cast<double>(height)) *
      kPi;
  const double lon =
      ((static_cast<double>(u) + 0.5) / static_cast<double>(width)) * 2.0 *
          kPi -
      kPi;
  return {lat, lon};
}

Spherical ErpPositionToSpherical(double x, double y, Index width,
                                 Index height) {
  return {(0.5 - y / static_cast<double>(height)) * kPi,
          (x / static_cast<double>(width)) * 2.0 * kPi - kPi};
}

Eigen::Vector2d SphericalToErpPosition(const Spherical& s, Index width,
                                       Index height) {
  return {(s.longitude + kPi) / (2.0 * kPi) * static_cast<double>(width),
          (0.5 - s.latitude / kPi) * static_cast<double>(height)};
}

Eigen::Vector3d SphericalToDirection(const Spherical& s) {
  const double c = std::cos(s.latitude);
  return {c * std::sin(s.longitude), std::sin(s.latitude),
          c * std::cos(s.longitude)};
}

Spherical DirectionToSpherical(const Eigen::Vector3d& d) {
  const double n = d.norm();
  return {std::asin(std::clamp(d.y() / n, -1.0, 1.0)),
          std::atan2(d.x(), d.z())};
}

SphericalCoordChannels SphericalCoordinateChannels(Index width,
                                                   Index height) {
  if (width < 1 || height < 1)
    throw ArgumentError("spherical channels need a non-empty grid");
  SphericalCoordChannels out{Plane(height, width), Plane(height, width)};
  for (Index v = 0; v < height; ++v) {
    for (Index u = 0; u < width; ++u) {
      const Spherical s = ErpPixelToSpherical(u, v, width, height);
      out.latitude(v, u) = s.latitude;
      out.longitude(v, u) = s.longitude;
    }
  }
  return out;
}

std::string_view CubeFaceName(CubeFace face) {
  switch (face) {
    case CubeFace::kFront: return "front";
    case CubeFace::kRight: return "right";
    case CubeFace::kBack: return "back";
    case CubeFace::kLeft: return "left";
    case CubeFace::kTop: return "top";
    case CubeFace::kBottom: return "bottom";
  }
  return "?";
}

const FaceFrame& GetFaceFrame(CubeFace face) {
  using V = Eigen::Vector3d;
  static const std::array<FaceFrame, kNumCubeFaces> kFrames = {{
      {V(0, 0, 1), V(1, 0, 0), V(0, 1, 0)},    // front  (+z)
      {V(1, 0, 0), V(0, 0, -1), V(0, 1, 0)},   // right  (+x)
      {V(0, 0, -1), V(-1, 0, 0), V(0, 1, 0)},  // back   (-z)
      {V(-1, 0, 0), V(0, 0, 1), V(0, 1, 0)},   // left   (-x)
      {V(0, 1, 0), V(1, 0, 0), V(0, 0, -1)},   // top    (+y)
      {V(0, -1, 0), V(1, 0, 0), V(0, 0, 1)},   // bottom (-y)
  }};
  return kFrames[static_cast<size_t>(face)];
}

Eigen::Vector3d FaceRay(CubeFace face, double a, double b) {
  const FaceFrame& f = GetFaceFrame(face);
  return f.forward + a * f.right + b * f.up;
}

Eigen::Vector3d FacePixelRay(CubeFace face, Index col, Index row,
                             Index face_size) {
  const double n = static_cast<double>(face_size);
  const double a = 2.0 * (static_cast<double>(col) + 0.5) / n - 1.0;
  const double b = 1.0 - 2.0 * (static_cast<double>(row) + 0.5) / n;
  return FaceRay(face, a, b);
}

CubeFace SelectFace(const Eigen::Vector3d& d) {
  int best = 0;
  double best_val = -1.0;
  for (int f = 0; f < kNumCubeFaces; ++f) {
    const double v = d.dot(GetFaceFrame(static_cast<CubeFace>(f)).forward);
    if (v > best_val) {
      best_val = v;
      best = f;
    }
  }
  return static_cast<CubeFace>(best);
}

bool CubeFaceSet::consistent() const {
  const Index n = faces[0].width();
  if (n < 1) return false;
  for (const auto& f : faces) {
    if (f.width() != n || f.height() != n) return false;
    if (f.channels() != faces[0].channels()) return false;
    if (f.max_value != faces[0].max_value) return false;
  }
  return true;
}

double SampleErpBilinear(const Plane& plane, double x, double y) {
  const Index w = plane.cols();
  const Index h = plane.rows();
  const double cx = x - 0.5;
  const double cy = std::clamp(y - 0.5, 0.0, static_cast<double>(h - 1));
  const double x0f = std::floor(cx);
  const double y0f = std::floor(cy);
  const double fx = cx - x0f;
  const double fy = cy - y0f;
  auto wrap = [w](Index i) { return ((i % w) + w) % w; };
  const Index x0 = wrap(static_cast<Index>(x0f));
  const Index x1 = wrap(static_cast<Index>(x0f) + 1);
  const Index y0 = static_cast<Index>(y0f);
  const Index y1 = std::min(y0 + 1, h - 1);
  const double top = (1.0 - fx) * plane(y0, x0) + fx * plane(y0, x1);
  const double bot = (1.0 - fx) * plane(y1, x0) + fx * plane(y1, x1);
  return (1.0 - fy) * top + fy * bot;
}

namespace {

// Bilinear lookup with clamping on both axes (cube faces are not periodic).
double SampleClamped(const Plane& plane, double x, double y) {
  const double cx =
      std::clamp(x - 0.5, 0.0, static_cast<double>(plane.cols() - 1));
  const double cy =
      std::clamp(y - 0.5, 0.0, static_cast<double>(plane.rows() - 1));
  const Index x0 = static_cast<Index>(std::floor(cx));
  const Index y0 = static_cast<Index>(std::floor(cy));
  const Index x1 = std::min(x0 + 1, plane.cols() - 1);
  const Index y1 = std::min(y0 + 1, plane.rows() - 1);
  const double fx = cx - static_cast<double>(x0);
  const double fy = cy - static_cast<double>(y0);
  const double top = (1.0 - fx) * plane(y0, x0) + fx * plane(y0, x1);
  const double bot = (1.0 - fx) * plane(y1, x0) + fx * plane(y1, x1);
  return (1.0 - fy) * top + fy * bot;
}

void CheckImage(const ErpImage& img) {
  if (img.empty() || !img.valid())
    throw ArgumentError("invalid or empty ERP image");
}

}  // namespace

CubeFaceSet ErpToCubemap(const ErpImage& img, Index face_size) {
  if (face_size < 2) throw ArgumentError("face_size must be >= 2");
  CheckImage(img);
  CubeFaceSet out;
  for (int f = 0; f < kNumCubeFaces; ++f) {
    const auto face = static_cast<CubeFace>(f);
    ErpImage dst(face_size, face_size, img.channels(), img.max_value);
    for (Index row = 0; row < face_size; ++row) {
      for (Index col = 0; col < face_size; ++col) {
        const Spherical s =
            DirectionToSpherical(FacePixelRay(face, col, row, face_size));
        const Eigen::Vector2d p =
            SphericalToErpPosition(s, img.width(), img.height());
        for (int c = 0; c < img.channels(); ++c) {
          dst[c](row, col) = SampleErpBilinear(img[c], p.x(), p.y());
        }
      }
    }
    out.faces[static_cast<size_t>(f)] = std::move(dst);
  }
  return out;
}

ErpImage CubemapToErp(const CubeFaceSet& faces, Index width, Index height) {
  if (!faces.consistent()) throw ArgumentError("inconsistent cube faces");
  if (width < 2 || height < 1 || width != 2 * height)
    throw ArgumentError("cubemap_to_erp needs width == 2 * height");
  const Index n = faces.face_size();
  const double nd = static_cast<double>(n);
  const ErpImage& first = faces.faces[0];
  ErpImage out(width, height, first.channels(), first.max_value);
  for (Index v = 0; v < height; ++v) {
    for (Index u = 0; u < width; ++u) {
      const Eigen::Vector3d d =
          SphericalToDirection(ErpPixelToSpherical(u, v, width, height));
      const CubeFace face = SelectFace(d);
      const FaceFrame& fr = GetFaceFrame(face);
      const double t = d.dot(fr.forward);
      const double a = d.dot(fr.right) / t;
      const double b = d.dot(fr.up) / t;
      const double fx = (a + 1.0) * 0.5 * nd;
      const double fy = (1.0 - b) * 0.5 * nd;
      const ErpImage& src = faces[face];
      for (int c = 0; c < out.channels(); ++c) {
        out[c](v, u) = SampleClamped(src[c], fx, fy);
      }
    }
  }
  return out;
}

ErpImage CubemapToStrip(const CubeFaceSet& faces) {
  if (!faces.consistent()) throw ArgumentError("inconsistent cube faces");
  const Index n = faces.face_size();
  const ErpImage& first = faces.faces[0];
  ErpImage strip(kNumCubeFaces * n, n, first.channels(), first.max_value);
  for (int f = 0; f < kNumCubeFaces; ++f) {
    for (int c = 0; c < strip.channels(); ++c) {
      strip[c].block(0, f * n, n, n) = faces.faces[static_cast<size_t>(f)][c];
    }
  }
  return strip;
}

CubeFaceSet StripToCubemap(const ErpImage& strip) {
  const Index n = strip.height();
  if (n < 2 || strip.width() != kNumCubeFaces * n)
    throw ArgumentError("cubemap strip must be 6N x N");
  CubeFaceSet out;
  for (int f = 0; f < kNumCubeFaces; ++f) {
    ErpImage face(n, n, strip.channels(), strip.max_value);
    for (int c = 0; c < strip.channels(); ++c) {
      face[c] = strip[c].block(0, f * n, n, n);
    }
    out.faces[static_cast<size_t>(f)] = std::move(face);
  }
  return out;
}

}  // namespace odic
