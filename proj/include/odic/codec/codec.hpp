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
#include <optional>
#include <string>
#include <vector>

#include "odic/codec/bitstream.hpp"
#include "odic/codec/latent_coder.hpp"
#include "odic/saliency_mask.hpp"
#include "odic/types.hpp"

// Reference saliency-aware codec:
//
//   block DCT analysis -> latent masking of the high-frequency channels
//   -> uniform quantization with step base / sqrt(lambda) -> range coding.
//
// The decoder never sees the saliency map. When saliency mode is on, the
// encoder ships the 4-bit quantized mask residual (one level per latent
// cell) so the decoder can undo the channel amplification; those bytes are
// part of the bitstream and therefore of the reported bpp.
namespace odic::codec {

inline const std::vector<double> kDefaultLambdaLadder = {
    0.0018, 0.0035, 0.0067, 0.013, 0.025, 0.0483, 0.0932, 0.18};

// Calibrated so that lambda = 0.18 lands near 0.8 bpp on the bundled
// 512x256 test images.
inline constexpr double kDefaultBaseStep = 24.0;

inline constexpr int kResidualLevels = 16;

struct CodecConfig {
  int block_size = 16;
  double preserved_fraction = 0.25;
  std::vector<double> lambda_ladder = kDefaultLambdaLadder;
  double alpha = 1.0;
  bool saliency_mode = true;
  // Quantization regulator: step(lambda) = base_step_constant / sqrt(lambda).
  double base_step_constant = kDefaultBaseStep;

  // Throws ArgumentError on an invalid configuration.
  void Validate() const;
  Index PreservedChannels(Index channels) const;
  double StepSize(int lambda_index) const;
  double Lambda(int lambda_index) const;
};

// `key = value` lines, '#' comments. Keys: block_size, preserved_fraction,
// lambda_ladder ([a, b, ...]), alpha, saliency_mode (on/off), base_step.
CodecConfig ParseCodecConfig(const std::string& text,
                             CodecConfig base = CodecConfig{});
CodecConfig LoadCodecConfig(const std::string& path,
                            CodecConfig base = CodecConfig{});

LatentTensor Analysis(const ErpImage& img, const CodecConfig& cfg);
// Inverse transform, crop and clip to [0, max_value].
ErpImage Synthesis(const LatentTensor& y, const CodecConfig& cfg,
                   Index width, Index height, int planes,
                   double max_value = 255.0);

// Mid-tread uniform quantizer and its bin-center reconstruction.
QuantizedLatent Quantize(const LatentTensor& y, double step);
LatentTensor Dequantize(const QuantizedLatent& q, double step);

// Residual in [1, (1 + alpha) / alpha] mapped linearly onto 16 levels.
LevelGrid QuantizeResidual(const MaskResidual& r);
MaskResidual DequantizeResidual(const LevelGrid& levels, double alpha);

// Intermediate products of the encoder, exposed for inspection.
struct EncoderState {
  LatentTensor latent;
  std::optional<LevelGrid> residual_levels;
  std::optional<MaskResidual> residual;  // dequantized, as the decoder sees it
  QuantizedLatent quantized;
  Index preserved_channels = 0;
  double step = 0.0;
};

EncoderState RunEncoderFrontEnd(const ErpImage& img,
                                const SaliencyMap* saliency, int lambda_index,
                                const CodecConfig& cfg);

// Requires an 8-bit image (max_value 255) with 1 or 3 channels. A saliency
// map of the image's size is required when cfg.saliency_mode is set.
Bitstream Encode(const ErpImage& img, const SaliencyMap* saliency,
                 int lambda_index, const CodecConfig& cfg);

// Reconstruction with integer samples in [0, 255].
ErpImage Decode(const Bitstream& bs, const CodecConfig& cfg);

}  // namespace odic::codec
