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

#include "odic/codec/rd_sweep.hpp"

#include "odic/parallel.hpp"

namespace odic::codec {

RdPoint EvaluateRdPoint(const ErpImage& img, const SaliencyMap* saliency,
                        int lambda_index, const CodecConfig& cfg) {
  const Bitstream bs = Encode(img, saliency, lambda_index, cfg);
  const std::vector<std::uint8_t> bytes = bs.Serialize();
  const ErpImage rec = Decode(Bitstream::Parse(bytes), cfg);
  RdPoint p;
  p.lambda_index = lambda_index;
  p.lambda = cfg.Lambda(lambda_index);
  p.bpp = BitsPerPixel(bytes.size(), img.width(), img.height());
  p.ws_psnr = WsPsnr(img, rec).value;
  p.sal_psnr = saliency ? SalPsnr(img, rec, *saliency).value : p.ws_psnr;
  p.ws_ssim = WsSsim(img, rec).value;
  const SaliencyMap weights =
      saliency ? SigmoidWeights(*saliency)
               : SaliencyMap(img.width(), img.height(), 1.0);
  p.loss = MakeLossReport(SalMse(img, rec, weights), p.bpp, p.lambda);
  return p;
}

std::vector<RdPoint> RdSweep(const ErpImage& img, const SaliencyMap* saliency,
                             const CodecConfig& cfg) {
  cfg.Validate();
  std::vector<RdPoint> out(cfg.lambda_ladder.size());
  ParallelFor(out.size(), [&](size_t i) {
    out[i] = EvaluateRdPoint(img, saliency, static_cast<int>(i), cfg);
  });
  return out;
}

RdCurve ToRdCurve(const std::vector<RdPoint>& points, MetricId metric) {
  std::vector<RdSample> s;
  for (const RdPoint& p : points) {
    const double q = metric == MetricId::kWsPsnr    ? p.ws_psnr
                     : metric == MetricId::kSalPsnr ? p.sal_psnr
                                                    : p.ws_ssim;
    s.push_back({p.bpp, q});
  }
  return RdCurve::FromPoints(std::move(s));
}

}  // namespace odic::codec
