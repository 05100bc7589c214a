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
#include <span>
#include <vector>

#include <Eigen/Core>

#include "odic/types.hpp"

// Entropy layer for quantized latents and the residual side information.
//
// Latent symbols are coded channel-major, raster-minor. Each channel first
// sends an "all zero" flag; non-empty channels send, per symbol, a
// significance bit, a sign bit and the magnitude as a truncated unary code
// with adaptive bits (an adaptive two-sided geometric model), escaping to
// Exp-Golomb for outliers. Contexts come from the left and upper neighbors
// in the same channel. The first `dc_channels` channels are DPCM coded
// against the left (else upper) neighbor.
namespace odic::codec {

using SymbolGrid =
    Eigen::Array<std::int32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using LevelGrid =
    Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// C x (h*w) integers, channel rows in raster order.
struct QuantizedLatent {
  SymbolGrid q;
  Index h = 0;
  Index w = 0;
  Index channels() const { return q.rows(); }
};

inline constexpr int kUnaryLength = 14;

std::vector<std::uint8_t> EncodeLatentSymbols(const QuantizedLatent& y,
                                              int dc_channels);

// Throws DecodeError(kTruncated) if the payload ends early and
// DecodeError(kCorruptHeader) for impossible escape codes.
QuantizedLatent DecodeLatentSymbols(std::span<const std::uint8_t> payload,
                                    Index channels, Index h, Index w,
                                    int dc_channels);

// 4-bit residual levels, raster order, context = previous level.
std::vector<std::uint8_t> EncodeMaskLevels(const LevelGrid& levels);
LevelGrid DecodeMaskLevels(std::span<const std::uint8_t> bytes, Index h,
                           Index w);

}  // namespace odic::codec
