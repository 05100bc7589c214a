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

#include <string>
#include <vector>

#include "odic/bjontegaard.hpp"
#include "odic/codec/codec.hpp"
#include "odic/losses.hpp"
#include "odic/quality_metrics.hpp"

namespace odic::codec {

struct RdPoint {
  int lambda_index = 0;
  double lambda = 0.0;
  double bpp = 0.0;
  double ws_psnr = 0.0;
  double sal_psnr = 0.0;
  double ws_ssim = 0.0;
  LossReport loss;
};

// Encodes, decodes and scores one ladder point. SAL-PSNR uses `saliency`
// when given (else it equals WS-PSNR); Sal-MSE weights are the logistic of
// the saliency map, or uniform without one.
RdPoint EvaluateRdPoint(const ErpImage& img, const SaliencyMap* saliency,
                        int lambda_index, const CodecConfig& cfg);

// One point per ladder entry, in ladder order.
std::vector<RdPoint> RdSweep(const ErpImage& img, const SaliencyMap* saliency,
                             const CodecConfig& cfg);

RdCurve ToRdCurve(const std::vector<RdPoint>& points, MetricId metric);

}  // namespace odic::codec
