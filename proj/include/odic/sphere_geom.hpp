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

#include <array>
#include <cmath>
#include <string_view>

#include <Eigen/Core>

#include "odic/numeric.hpp"
#include "odic/types.hpp"

// Spherical geometry for equirectangular (ERP) rasters.
//
// Conventions, shared by every module:
//  * latitude is positive up, +pi/2 at the top edge of the image;
//  * longitude is -pi at the left edge and increases to the right;
//  * integer pixel (u, v) refers to the pixel center (u + 0.5, v + 0.5).
//
// Unit direction for (lat, lon): x = cos(lat) sin(lon), y = sin(lat),
// z = cos(lat) cos(lon), so lon 0 looks down +z and lon +pi/2 down +x.
namespace odic {

struct Spherical {
  double latitude;
  double longitude;
};

// Pixel-center spherical coordinates for integer pixel (u, v).
// Throws ArgumentError when (u, v) is outside the grid.
Spherical ErpPixelToSpherical(Index u, Index v, Index width, Index height);

// Continuous versions; (x, y) are in pixel units where x = u is the left edge
// of column u and pixel centers sit at half-integers.
Spherical ErpPositionToSpherical(double x, double y, Index width,
                                 Index height);
Eigen::Vector2d SphericalToErpPosition(const Spherical& s, Index width,
                                       Index height);

Eigen::Vector3d SphericalToDirection(const Spherical& s);
Spherical DirectionToSpherical(const Eigen::Vector3d& d);

// Per-row latitude weights w(j) = cos(latitude of row center).
template <typename Scalar = double>
Eigen::Array<Scalar, Eigen::Dynamic, 1> LatitudeWeightMap(Index height) {
  if (height < 1) throw ArgumentError("latitude weights need height >= 1");
  Eigen::Array<Scalar, Eigen::Dynamic, 1> w(height);
  const double h = static_cast<double>(height);
  for (Index j = 0; j < height; ++j) {
    const double mirrored = static_cast<double>(std::min(j, height - 1 - j));
    // Evaluate on the upper half and mirror so w(j) == w(h-1-j) bit for bit.
    // sin((m + 0.5) pi / h) equals cos(latitude) without cancellation near
    // the poles.
    w(j) = static_cast<Scalar>(std::sin((mirrored + 0.5) * kPi / h));
  }
  return w;
}

inline Eigen::ArrayXd LatitudeWeightMap(Index width, Index height) {
  (void)width;
  return LatitudeWeightMap<double>(height);
}

template <typename Scalar>
struct SphericalCoordChannelsT {
  PlaneT<Scalar> latitude;
  PlaneT<Scalar> longitude;
};
using SphericalCoordChannels = SphericalCoordChannelsT<double>;

// Two per-pixel planes holding exactly ErpPixelToSpherical for every pixel.
SphericalCoordChannels SphericalCoordinateChannels(Index width, Index height);

// ---------------------------------------------------------------------------
// Cubemap

// Frozen face order; also the tie-break priority when an ERP direction is
// equidistant to several faces (earlier face wins).
enum class CubeFace : int { kFront = 0, kRight, kBack, kLeft, kTop, kBottom };
inline constexpr int kNumCubeFaces = 6;
std::string_view CubeFaceName(CubeFace face);

// Orthonormal frame of a face: forward axis through the face center, right
// and up axes spanning the image plane.
struct FaceFrame {
  Eigen::Vector3d forward;
  Eigen::Vector3d right;
  Eigen::Vector3d up;
};
const FaceFrame& GetFaceFrame(CubeFace face);

// Unnormalized ray through face-plane coordinates (a, b) in [-1, 1]^2,
// a to the right, b up.
Eigen::Vector3d FaceRay(CubeFace face, double a, double b);

// Ray through the center of face pixel (col, row).
Eigen::Vector3d FacePixelRay(CubeFace face, Index col, Index row,
                             Index face_size);

// Face that owns direction d (largest |component| along the face's forward
// axis, ties resolved by face order).
CubeFace SelectFace(const Eigen::Vector3d& d);

struct CubeFaceSet {
  std::array<ErpImage, kNumCubeFaces> faces;

  Index face_size() const { return faces[0].width(); }
  ErpImage& operator[](CubeFace f) { return faces[static_cast<int>(f)]; }
  const ErpImage& operator[](CubeFace f) const {
    return faces[static_cast<int>(f)];
  }
  bool consistent() const;
};

// Bilinear ERP lookup at continuous pixel position, wrapping horizontally
// and clamping vertically.
double SampleErpBilinear(const Plane& plane, double x, double y);

CubeFaceSet ErpToCubemap(const ErpImage& img, Index face_size);
ErpImage CubemapToErp(const CubeFaceSet& faces, Index width, Index height);

// Horizontal strip of the six faces in face order (6N x N). Used as the
// on-disk cubemap layout.
ErpImage CubemapToStrip(const CubeFaceSet& faces);
CubeFaceSet StripToCubemap(const ErpImage& strip);

}  // namespace odic
