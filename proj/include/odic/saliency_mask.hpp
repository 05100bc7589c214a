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

#include <vector>

#include "odic/types.hpp"

// Saliency-driven latent masking: map -> sigmoid -> pooled mask -> residual
// multiplier -> masked latent channels.
namespace odic {

inline constexpr Index kDefaultDownsample = 16;
inline constexpr Index kDefaultLatentChannels = 192;
inline constexpr Index kDefaultPreservedChannels = 48;

// Pooled mask on the latent grid, values in [0, 1].
struct DownsampledMask {
  Plane values;
  Index h() const { return values.rows(); }
  Index w() const { return values.cols(); }
};

// Per-cell multiplier (mask + alpha) / alpha, values in [1, (1 + alpha)/alpha].
struct MaskResidual {
  Plane values;
  double alpha = 1.0;
  Index h() const { return values.rows(); }
  Index w() const { return values.cols(); }
};

double Sigmoid(double t);

// Min-max rescale to [0, 255] followed by the logistic function. Output lies
// in [0.5, 1]. Throws DegenerateError for constant input.
SaliencyMap RescaleAndSigmoid(const SaliencyMap& raw);

// Non-overlapping factor x factor average pooling. Edge blocks average over
// their in-bounds pixels, so the grid is ceil(H/D) x ceil(W/D).
DownsampledMask DownsampleMask(const SaliencyMap& s, Index factor);

MaskResidual ComputeMaskResidual(const DownsampledMask& m, double alpha);

// Channels [0, split) are copied verbatim, channels [split, C) are multiplied
// by the residual broadcast across channels.
template <typename Scalar>
LatentTensorT<Scalar> ApplyLatentMask(const LatentTensorT<Scalar>& y,
                                      const MaskResidual& r, Index split) {
  if (r.h() != y.h || r.w() != y.w)
    throw ArgumentError("mask residual does not match latent grid");
  if (split < 0 || split > y.channels())
    throw ArgumentError("split outside [0, C]");
  LatentTensorT<Scalar> out = y;
  // Plane is row-major, so its storage order matches the flattened grid.
  const Eigen::Array<Scalar, 1, Eigen::Dynamic> flat =
      Eigen::Map<const Eigen::Array<double, 1, Eigen::Dynamic>>(
          r.values.data(), r.values.size())
          .template cast<Scalar>();
  for (Index c = split; c < y.channels(); ++c) {
    out.coeffs.row(c) = y.coeffs.row(c) * flat;
  }
  return out;
}

// Inverse of ApplyLatentMask given the same residual.
template <typename Scalar>
LatentTensorT<Scalar> RemoveLatentMask(const LatentTensorT<Scalar>& y,
                                       const MaskResidual& r, Index split) {
  if (r.h() != y.h || r.w() != y.w)
    throw ArgumentError("mask residual does not match latent grid");
  if (split < 0 || split > y.channels())
    throw ArgumentError("split outside [0, C]");
  LatentTensorT<Scalar> out = y;
  // Plane is row-major, so its storage order matches the flattened grid.
  const Eigen::Array<Scalar, 1, Eigen::Dynamic> flat =
      Eigen::Map<const Eigen::Array<double, 1, Eigen::Dynamic>>(
          r.values.data(), r.values.size())
          .template cast<Scalar>();
  for (Index c = split; c < y.channels(); ++c) {
    out.coeffs.row(c) = y.coeffs.row(c) / flat;
  }
  return out;
}

// Full map -> residual pipeline.
MaskResidual SaliencyToResidual(const SaliencyMap& raw, Index factor,
                                double alpha);

struct Hotspot {
  double latitude;
  double longitude;
  double amplitude;
  double angular_sigma;
};

// Synthetic stand-in for a learned predictor: exp(-lat^2 / (2 sigma^2)) plus
// Gaussian bumps in great-circle distance around each hotspot.
SaliencyMap EquatorPriorSaliency(Index width, Index height, double sigma_lat,
                                 const std::vector<Hotspot>& hotspots = {});

double GreatCircleDistance(double lat1, double lon1, double lat2,
                           double lon2);

}  // namespace odic
