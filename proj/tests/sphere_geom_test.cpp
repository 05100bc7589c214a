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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "odic/quality_metrics.hpp"
#include "synthetic.hpp"

namespace odic {
namespace {

TEST(ErpPixelToSpherical, ClosedFormExamples) {
  Spherical s = ErpPixelToSpherical(1, 0, 4, 2);
  EXPECT_DOUBLE_EQ(s.latitude, kPi / 4);
  EXPECT_DOUBLE_EQ(s.longitude, -kPi / 4);

  s = ErpPixelToSpherical(0, 0, 2, 1);
  EXPECT_DOUBLE_EQ(s.latitude, 0.0);
  EXPECT_DOUBLE_EQ(s.longitude, -kPi / 2);
}

TEST(ErpPixelToSpherical, MatchesPerPixelFormula) {
  const Index w = 8, h = 4;
  for (Index v = 0; v < h; ++v) {
    for (Index u = 0; u < w; ++u) {
      const Spherical s = ErpPixelToSpherical(u, v, w, h);
      EXPECT_EQ(s.latitude, (0.5 - (v + 0.5) / h) * kPi);
      EXPECT_EQ(s.longitude, ((u + 0.5) / w) * 2 * kPi - kPi);
    }
  }
}

TEST(ErpPixelToSpherical, RejectsOutOfRange) {
  EXPECT_THROW(ErpPixelToSpherical(-1, 0, 4, 2), ArgumentError);
  EXPECT_THROW(ErpPixelToSpherical(4, 0, 4, 2), ArgumentError);
  EXPECT_THROW(ErpPixelToSpherical(0, 2, 4, 2), ArgumentError);
  EXPECT_THROW(ErpPixelToSpherical(0, 0, 0, 0), ArgumentError);
}

TEST(Direction, RoundTripsThroughSpherical) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lat(-1.5, 1.5), lon(-3.1, 3.1);
  for (int i = 0; i < 200; ++i) {
    const Spherical s{lat(rng), lon(rng)};
    const Eigen::Vector3d d = SphericalToDirection(s);
    EXPECT_NEAR(d.norm(), 1.0, 1e-15);
    const Spherical back = DirectionToSpherical(d);
    EXPECT_NEAR(back.latitude, s.latitude, 1e-12);
    EXPECT_NEAR(back.longitude, s.longitude, 1e-12);
  }
}

TEST(LatitudeWeightMap, HeightTwo) {
  const Eigen::ArrayXd w = LatitudeWeightMap(4, 2);
  ASSERT_EQ(w.size(), 2);
  EXPECT_NEAR(w(0), std::sqrt(2.0) / 2, 1e-15);
  EXPECT_EQ(w(0), w(1));
}

TEST(LatitudeWeightMap, SymmetricPositiveAndBounded) {
  for (Index h : {1, 2, 3, 7, 64, 255, 256, 1024}) {
    const Eigen::ArrayXd w = LatitudeWeightMap(2 * h, h);
    // Odd heights have a row on the equator.
    const double bound = h % 2 ? 1.0 : std::cos(kPi / (2.0 * h));
    for (Index j = 0; j < h; ++j) {
      EXPECT_EQ(w(j), w(h - 1 - j)) << "h=" << h << " j=" << j;
      EXPECT_GT(w(j), 0.0);
      EXPECT_LE(w(j), bound + 1e-15);
    }
    // Maximal at the centre row(s).
    EXPECT_EQ(w.maxCoeff(), w((h - 1) / 2));
  }
}

TEST(LatitudeWeightMap, TopRowAt256MatchesHighPrecisionValue) {
  // cos(127.5 pi / 256) evaluated with mpmath at 50 digits.
  const double oracle = 0.0061358846491544753596;
  EXPECT_NEAR(LatitudeWeightMap(512, 256)(0), oracle, 2e-18);
}

TEST(SphericalCoordinateChannels, TwoByOne) {
  const SphericalCoordChannels c = SphericalCoordinateChannels(2, 1);
  EXPECT_EQ(c.latitude(0, 0), 0.0);
  EXPECT_EQ(c.latitude(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(c.longitude(0, 0), -kPi / 2);
  EXPECT_DOUBLE_EQ(c.longitude(0, 1), kPi / 2);
}

TEST(SphericalCoordinateChannels, MatchesBruteForceAndIsMonotone) {
  const Index w = 16, h = 8;
  const SphericalCoordChannels c = SphericalCoordinateChannels(w, h);
  for (Index v = 0; v < h; ++v) {
    for (Index u = 0; u < w; ++u) {
      const Spherical s = ErpPixelToSpherical(u, v, w, h);
      EXPECT_EQ(c.latitude(v, u), s.latitude);
      EXPECT_EQ(c.longitude(v, u), s.longitude);
      if (v > 0) {
        EXPECT_LT(c.latitude(v, u), c.latitude(v - 1, u));
      }
      if (u > 0) {
        EXPECT_GT(c.longitude(v, u), c.longitude(v, u - 1));
      }
    }
  }
  EXPECT_EQ(c.latitude.maxCoeff(), c.latitude(0, 0));
}

TEST(CubeFaces, FramesAreRightHandedOrthonormal) {
  for (int f = 0; f < kNumCubeFaces; ++f) {
    const FaceFrame& fr = GetFaceFrame(static_cast<CubeFace>(f));
    EXPECT_NEAR(fr.forward.dot(fr.right), 0.0, 1e-15);
    EXPECT_NEAR(fr.forward.dot(fr.up), 0.0, 1e-15);
    EXPECT_NEAR(fr.right.dot(fr.up), 0.0, 1e-15);
    EXPECT_EQ(SelectFace(fr.forward), static_cast<CubeFace>(f));
  }
}

TEST(CubeFaces, CenterRaysHitExpectedDirections) {
  struct Case {
    CubeFace face;
    double lat, lon;
  };
  const Case cases[] = {{CubeFace::kFront, 0, 0},
                        {CubeFace::kRight, 0, kPi / 2},
                        {CubeFace::kBack, 0, kPi},
                        {CubeFace::kLeft, 0, -kPi / 2},
                        {CubeFace::kTop, kPi / 2, 0},
                        {CubeFace::kBottom, -kPi / 2, 0}};
  for (const Case& c : cases) {
    const Eigen::Vector3d ray = FaceRay(c.face, 0.0, 0.0).normalized();
    const Eigen::Vector3d expect = SphericalToDirection({c.lat, c.lon});
    EXPECT_NEAR((ray - expect).norm(), 0.0, 1e-15) << CubeFaceName(c.face);
  }
}

TEST(CubeFaces, TiesGoToEarlierFace) {
  // Equidistant between front (+z) and right (+x).
  EXPECT_EQ(SelectFace(Eigen::Vector3d(1, 0, 1)), CubeFace::kFront);
  // Corner shared by front, right and top.
  EXPECT_EQ(SelectFace(Eigen::Vector3d(1, 1, 1)), CubeFace::kFront);
  EXPECT_EQ(SelectFace(Eigen::Vector3d(-1, 1, 0)), CubeFace::kLeft);
}

TEST(ErpToCubemap, ConstantImageGivesConstantFaces) {
  const ErpImage img(64, 32, 3, 255.0, 77.0);
  const CubeFaceSet faces = ErpToCubemap(img, 16);
  ASSERT_TRUE(faces.consistent());
  for (const ErpImage& f : faces.faces) {
    EXPECT_EQ(f.width(), 16);
    for (int c = 0; c < 3; ++c) EXPECT_TRUE((f[c] == 77.0).all());
  }
  EXPECT_THROW(ErpToCubemap(img, 1), ArgumentError);
}

TEST(ErpToCubemap, FaceCentersSampleAnalyticDirections) {
  // A smooth function of direction; face centres must read it back at the
  // analytic centre rays within bilinear interpolation error.
  const ErpImage img = testing::MakeBandLimitedScene(512, 256);
  const Index n = 64;  // even: centre lies between four face pixels
  const CubeFaceSet faces = ErpToCubemap(img, n);
  for (int f = 0; f < kNumCubeFaces; ++f) {
    const auto face = static_cast<CubeFace>(f);
    const ErpImage& fi = faces[face];
    const double centre =
        0.25 * (fi[0](n / 2 - 1, n / 2 - 1) + fi[0](n / 2 - 1, n / 2) +
                fi[0](n / 2, n / 2 - 1) + fi[0](n / 2, n / 2));
    const Eigen::Vector2d p = SphericalToErpPosition(
        DirectionToSpherical(FaceRay(face, 0, 0)), 512, 256);
    const double expect = SampleErpBilinear(img[0], p.x(), p.y());
    EXPECT_NEAR(centre, expect, 0.5) << CubeFaceName(face);
  }
}

TEST(ErpToCubemap, ProjectionConsistency) {
  // Every face pixel ray, pushed through the ERP position mapping and back
  // through the pixel-centre convention, reproduces its direction.
  const Index w = 32, h = 16, n = 8;
  for (int f = 0; f < kNumCubeFaces; ++f) {
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) {
        const Eigen::Vector3d d =
            FacePixelRay(static_cast<CubeFace>(f), c, r, n).normalized();
        const Eigen::Vector2d p =
            SphericalToErpPosition(DirectionToSpherical(d), w, h);
        const Spherical s = ErpPositionToSpherical(p.x(), p.y(), w, h);
        const Eigen::Vector3d back = SphericalToDirection(s);
        EXPECT_LT((back - d).norm(), 1e-12);
      }
    }
  }
}

TEST(CubemapToErp, ConstantFacesGiveConstantErp) {
  CubeFaceSet faces;
  for (ErpImage& f : faces.faces) f = ErpImage(8, 8, 1, 255.0, 12.0);
  const ErpImage erp = CubemapToErp(faces, 40, 20);
  EXPECT_EQ(erp.width(), 40);
  EXPECT_EQ(erp.height(), 20);
  EXPECT_TRUE((erp[0] == 12.0).all());
  EXPECT_THROW(CubemapToErp(faces, 40, 21), ArgumentError);
}

TEST(CubemapToErp, InconsistentFacesRejected) {
  CubeFaceSet faces;
  for (ErpImage& f : faces.faces) f = ErpImage(8, 8, 1);
  faces.faces[3] = ErpImage(9, 9, 1);
  EXPECT_FALSE(faces.consistent());
  EXPECT_THROW(CubemapToErp(faces, 32, 16), ArgumentError);
}

TEST(CubemapToErp, LatitudeGradientKeepsRowMeans) {
  const Index w = 256, h = 128;
  ErpImage img(w, h, 1);
  for (Index v = 0; v < h; ++v)
    img[0].row(v).setConstant(
        127.5 + 100.0 * ErpPixelToSpherical(0, v, w, h).latitude / kPi);
  const ErpImage back = CubemapToErp(ErpToCubemap(img, 64), w, h);
  for (Index v = 0; v < h; ++v) {
    const double a = img[0].row(v).mean(), b = back[0].row(v).mean();
    EXPECT_NEAR(b, a, 0.01 * a) << "row " << v;
  }
}

TEST(CubemapToErp, RoundTripPsnrRegressionBound) {
  const ErpImage img = testing::MakeBandLimitedScene(512, 256);
  const ErpImage back = CubemapToErp(ErpToCubemap(img, 128), 512, 256);
  // Measured 93.9 dB when frozen; 30 dB is the contractual floor.
  EXPECT_GE(Psnr(img, back), 30.0);
}

TEST(Strip, RoundTripsAndChecksShape) {
  CubeFaceSet faces;
  for (int f = 0; f < kNumCubeFaces; ++f)
    faces.faces[f] = ErpImage(4, 4, 3, 255.0, 10.0 * f);
  const ErpImage strip = CubemapToStrip(faces);
  EXPECT_EQ(strip.width(), 24);
  EXPECT_EQ(strip.height(), 4);
  const CubeFaceSet back = StripToCubemap(strip);
  for (int f = 0; f < kNumCubeFaces; ++f) EXPECT_EQ(back.faces[f], faces.faces[f]);
  EXPECT_THROW(StripToCubemap(ErpImage(25, 4, 3)), ArgumentError);
}

TEST(SampleErpBilinear, WrapsHorizontallyAndClampsVertically) {
  Plane p(2, 4);
  p << 0, 1, 2, 3, 4, 5, 6, 7;
  // Pixel centres are at x + 0.5.
  EXPECT_DOUBLE_EQ(SampleErpBilinear(p, 1.5, 0.5), 1.0);
  // Halfway between the last and first column.
  EXPECT_DOUBLE_EQ(SampleErpBilinear(p, 4.0, 0.5), 1.5);
  EXPECT_DOUBLE_EQ(SampleErpBilinear(p, 0.0, 0.5), 1.5);
  EXPECT_DOUBLE_EQ(SampleErpBilinear(p, 1.5, -3.0), 1.0);
  EXPECT_DOUBLE_EQ(SampleErpBilinear(p, 1.5, 9.0), 5.0);
}

}  // namespace
}  // namespace odic
