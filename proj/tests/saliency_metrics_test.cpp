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

#include "odic/saliency_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

namespace odic {
namespace {

SaliencyMap RandomMap(Index w, Index h, std::uint64_t seed, int levels = 0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  SaliencyMap s(w, h);
  for (Index i = 0; i < s.values.size(); ++i) {
    double v = d(rng);
    if (levels) v = std::floor(v * levels) / levels;  // forces ties
    s.values.data()[i] = v;
  }
  return s;
}

FixationMap RandomFixations(Index w, Index h, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FixationMap f(w, h);
  while (f.fixation_count() < n)
    f.set(static_cast<Index>(rng() % h), static_cast<Index>(rng() % w));
  return f;
}

double PearsonOracle(const SaliencyMap& a, const SaliencyMap& b) {
  const double n = a.values.size();
  const double ma = a.values.sum() / n, mb = b.values.sum() / n;
  double sab = 0, saa = 0, sbb = 0;
  for (Index i = 0; i < a.values.size(); ++i) {
    const double x = a.values.data()[i] - ma, y = b.values.data()[i] - mb;
    sab += x * y;
    saa += x * x;
    sbb += y * y;
  }
  return sab / std::sqrt(saa * sbb);
}

// Threshold enumeration straight from the definition.
double AucOracle(const SaliencyMap& p, const FixationMap& f) {
  std::set<double, std::greater<>> thresholds;
  Index nfix = 0, nother = 0;
  for (Index v = 0; v < p.height(); ++v)
    for (Index u = 0; u < p.width(); ++u) {
      if (f.at(v, u)) {
        thresholds.insert(p(v, u));
        ++nfix;
      } else {
        ++nother;
      }
    }
  std::vector<std::pair<double, double>> pts{{0.0, 0.0}};
  for (double t : thresholds) {
    Index tp = 0, fp = 0;
    for (Index v = 0; v < p.height(); ++v)
      for (Index u = 0; u < p.width(); ++u)
        if (p(v, u) >= t) (f.at(v, u) ? tp : fp)++;
    pts.emplace_back(static_cast<double>(fp) / nother,
                     static_cast<double>(tp) / nfix);
  }
  pts.emplace_back(1.0, 1.0);
  double area = 0;
  for (size_t i = 1; i < pts.size(); ++i)
    area += (pts[i].first - pts[i - 1].first) *
            (pts[i].second + pts[i - 1].second) / 2;
  return area;
}

TEST(Cc, SelfAndAntiCorrelation) {
  const SaliencyMap s = RandomMap(16, 8, 1);
  EXPECT_NEAR(Cc(s, s), 1.0, 1e-15);
  const SaliencyMap anti(Plane(3.0 - s.values));
  EXPECT_NEAR(Cc(s, anti), -1.0, 1e-15);
}

TEST(Cc, MatchesDirectFormulaAndAffineInvariance) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SaliencyMap a = RandomMap(32, 16, seed), b = RandomMap(32, 16, seed + 50);
    EXPECT_NEAR(Cc(a, b), PearsonOracle(a, b), 1e-12);
    const SaliencyMap a2(Plane(4.0 * a.values + 2.0));
    EXPECT_NEAR(Cc(a2, b), Cc(a, b), 1e-12);
  }
}

TEST(Cc, Errors) {
  EXPECT_THROW(Cc(SaliencyMap(8, 4, 1.0), RandomMap(8, 4, 1)), DegenerateError);
  EXPECT_THROW(Cc(RandomMap(8, 4, 1), RandomMap(4, 8, 1)), ArgumentError);
}

TEST(Kld, SelfIsZero) {
  const SaliencyMap s = RandomMap(32, 16, 2);
  EXPECT_LE(std::abs(Kld(s, s)), 1e-9);
}

TEST(Kld, DeltaAgainstUniform) {
  const Index n = 128;
  SaliencyMap delta(16, 8, 0.0);
  delta(3, 4) = 5.0;
  const SaliencyMap uniform(16, 8, 2.0);
  const double eps = 1e-7;
  const double oracle = std::log((1.0 + eps) / (1.0 / n + eps));
  EXPECT_NEAR(Kld(delta, uniform), oracle, 1e-12);
  EXPECT_NEAR(Kld(delta, uniform), std::log(static_cast<double>(n)), 1e-4);
}

TEST(Kld, ScaleInvariantAndNonNegative) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SaliencyMap g = RandomMap(16, 8, seed), p = RandomMap(16, 8, seed + 9);
    const double k = Kld(g, p);
    EXPECT_GE(k, -1e-5);
    EXPECT_NEAR(Kld(SaliencyMap(Plane(g.values * 7.0)),
                    SaliencyMap(Plane(p.values * 0.01))),
                k, 1e-12);
  }
}

TEST(Kld, Errors) {
  EXPECT_THROW(Kld(SaliencyMap(4, 2, 0.0), RandomMap(4, 2, 1)), DegenerateError);
  EXPECT_THROW(Kld(RandomMap(4, 2, 1), SaliencyMap(4, 2, 0.0)), DegenerateError);
  EXPECT_THROW(Kld(RandomMap(4, 2, 1), RandomMap(2, 4, 1)), ArgumentError);
}

TEST(Nss, FixationAtMaximum) {
  const Index w = 16, h = 8;
  SaliencyMap s(w, h);
  for (Index v = 0; v < h; ++v)
    for (Index u = 0; u < w; ++u)
      s(v, u) = std::exp(-((v - 3) * (v - 3) + (u - 9) * (u - 9)) / 6.0);
  FixationMap f(w, h);
  f.set(3, 9);
  const double mean = s.values.mean();
  const double sd = std::sqrt((s.values - mean).square().mean());
  EXPECT_NEAR(Nss(s, f), (1.0 - mean) / sd, 1e-12);
  EXPECT_GT(Nss(s, f), 0.0);
}

TEST(Nss, UniformFixationsGiveZero) {
  const SaliencyMap s = RandomMap(16, 8, 3);
  FixationMap all(16, 8);
  all.cells.setOnes();
  EXPECT_NEAR(Nss(s, all), 0.0, 1e-12);
}

TEST(Nss, MatchesOracleAndAffineInvariance) {
  const SaliencyMap s = RandomMap(16, 8, 4);
  const FixationMap f = RandomFixations(16, 8, 9, 5);
  const double mean = s.values.mean();
  const double sd = std::sqrt((s.values - mean).square().mean());
  double acc = 0;
  for (Index v = 0; v < 8; ++v)
    for (Index u = 0; u < 16; ++u)
      if (f.at(v, u)) acc += (s(v, u) - mean) / sd;
  EXPECT_NEAR(Nss(s, f), acc / 9, 1e-12);
  EXPECT_NEAR(Nss(SaliencyMap(Plane(s.values * 3 + 1)), f), Nss(s, f), 1e-12);
}

TEST(Nss, Errors) {
  EXPECT_THROW(Nss(SaliencyMap(8, 4, 1.0), RandomFixations(8, 4, 2, 1)),
               DegenerateError);
  EXPECT_THROW(Nss(RandomMap(8, 4, 1), FixationMap(8, 4)), ArgumentError);
}

TEST(AucJudd, PerfectSeparation) {
  SaliencyMap s(16, 8, 0.1);
  const FixationMap f = RandomFixations(16, 8, 7, 6);
  for (Index v = 0; v < 8; ++v)
    for (Index u = 0; u < 16; ++u)
      if (f.at(v, u)) s(v, u) = 0.9 + 0.001 * u;
  EXPECT_EQ(AucJudd(s, f), 1.0);
}

TEST(AucJudd, ConstantPredictionIsHalf) {
  EXPECT_EQ(AucJudd(SaliencyMap(16, 8, 0.3), RandomFixations(16, 8, 5, 7)), 0.5);
}

TEST(AucJudd, MatchesThresholdEnumeration) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SaliencyMap s = RandomMap(16, 8, seed, seed % 2 ? 6 : 0);
    const FixationMap f = RandomFixations(16, 8, 1 + seed % 11, seed + 30);
    EXPECT_NEAR(AucJudd(s, f), AucOracle(s, f), 1e-12) << seed;
  }
}

TEST(AucJudd, InvariantUnderMonotoneTransform) {
  const SaliencyMap s = RandomMap(16, 8, 8);
  const FixationMap f = RandomFixations(16, 8, 10, 9);
  const SaliencyMap t(Plane(s.values.cube() * 5.0 + 1.0));
  EXPECT_EQ(AucJudd(s, f), AucJudd(t, f));
}

TEST(AucJudd, Errors) {
  EXPECT_THROW(AucJudd(RandomMap(8, 4, 1), FixationMap(8, 4)), ArgumentError);
  FixationMap all(8, 4);
  all.cells.setOnes();
  EXPECT_THROW(AucJudd(RandomMap(8, 4, 1), all), DegenerateError);
}

}  // namespace
}  // namespace odic
