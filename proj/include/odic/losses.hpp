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

#include <cstdint>
#include <optional>

#include "odic/types.hpp"

namespace odic {

// Training objectives evaluated as plain numbers.
struct LossReport {
  double sal_mse = 0.0;
  double bpp = 0.0;
  double lambda = 0.0;
  double total = 0.0;
  std::optional<double> kld;
  std::optional<double> cc;
  std::optional<double> fusion;

  // total == lambda * sal_mse + bpp and fusion == kld - cc.
  bool consistent(double rel_tol = 1e-12) const;
};

// sum(S * e^2) / sum(S), with e^2 the per-pixel squared error averaged over
// channels. S is used as given; see SigmoidWeights for the usual convention.
double SalMse(const ErpImage& x, const ErpImage& x_hat, const SaliencyMap& s);

// Elementwise logistic of a ground-truth map.
SaliencyMap SigmoidWeights(const SaliencyMap& raw);

// lambda * distortion + rate.
double RdLoss(double distortion, double rate, double lambda);

struct FusionLoss {
  double kld;
  double cc;
  double fusion;  // kld - cc
  std::optional<double> nss;
};

// KLD(gt || pred) and CC. When fixations are supplied NSS is reported too.
FusionLoss ComputeFusionLoss(const SaliencyMap& pred, const SaliencyMap& gt,
                             const FixationMap* fixations = nullptr);

// 8 * bytes / (width * height).
double BitsPerPixel(std::uint64_t bytes, Index width, Index height);

LossReport MakeLossReport(double sal_mse, double bpp, double lambda,
                          const std::optional<FusionLoss>& fusion = {});

}  // namespace odic
