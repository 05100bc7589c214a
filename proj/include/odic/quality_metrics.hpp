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

#include <string_view>

#include "odic/types.hpp"

// Full-reference quality metrics for ERP images. All reductions use
// fixed-order pairwise summation so scores are bit-reproducible.
namespace odic {

inline constexpr double kPsnrCapDb = 99.0;

enum class MetricId { kWsPsnr, kSalPsnr, kWsSsim };
std::string_view MetricName(MetricId id);

struct QualityScore {
  MetricId metric;
  double value;
  bool cap_applied = false;
};

// How saliency and latitude weights are combined for SAL-PSNR.
enum class SalWeighting {
  kMultiplicative,  // (s + floor) * w(j)
  kAdditive,        // (s + floor) / max + w(j)
};

// Per-pixel squared error averaged over channels.
Plane SquaredErrorMap(const ErpImage& ref, const ErpImage& dist);

// 10 log10(max^2 / WMSE) with per-pixel weights; zero error gives the cap.
QualityScore WeightedPsnr(const ErpImage& ref, const ErpImage& dist,
                          const Plane& weights, MetricId id);

double Psnr(const ErpImage& ref, const ErpImage& dist);
double Mse(const ErpImage& ref, const ErpImage& dist);

QualityScore WsPsnr(const ErpImage& ref, const ErpImage& dist);

// The saliency floor is 1% of the map maximum, which keeps every pixel's
// weight positive.
QualityScore SalPsnr(const ErpImage& ref, const ErpImage& dist,
                     const SaliencyMap& saliency,
                     SalWeighting mode = SalWeighting::kMultiplicative);

// BT.601 luma for 3-channel input, the plane itself for 1 channel.
Plane Luma(const ErpImage& img);

inline constexpr int kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;

// SSIM map over the valid region (every window fully inside the image), of
// size (H - 10) x (W - 10). Map row j is centered on image row j + 5.
Plane SsimMap(const Plane& a, const Plane& b, double max_value);

// Mean of the SSIM map with per-image-row weights (length H).
double WeightedSsim(const ErpImage& ref, const ErpImage& dist,
                    const Eigen::ArrayXd& row_weights);

QualityScore WsSsim(const ErpImage& ref, const ErpImage& dist);

}  // namespace odic
