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

#include "odic/codec/latent_coder.hpp"

#include <array>
#include <cstdlib>
#include <limits>

#include "odic/codec/range_coder.hpp"
#include "odic/error.hpp"

namespace odic::codec {
namespace {

constexpr int kActivityContexts = 3;

struct ChannelModel {
  std::array<BitModel, kActivityContexts> zero;
  std::array<BitModel, kActivityContexts> sign;
  std::array<std::array<BitModel, kUnaryLength>, kActivityContexts> mag;
};

struct LatentModel {
  explicit LatentModel(Index channels)
      : channels(static_cast<size_t>(channels)) {}
  std::vector<ChannelModel> channels;
  std::array<BitModel, 2> empty;
};

int ActivityContext(const std::int32_t* row, Index h_index, Index w_index,
                    Index w) {
  const std::int64_t left =
      w_index > 0 ? std::abs(std::int64_t{row[h_index * w + w_index - 1]}) : 0;
  const std::int64_t up =
      h_index > 0 ? std::abs(std::int64_t{row[(h_index - 1) * w + w_index]}) : 0;
  const std::int64_t a = left + up;
  return a == 0 ? 0 : (a <= 2 ? 1 : 2);
}

std::int32_t DcPrediction(const std::int32_t* q, Index r, Index c, Index w) {
  if (c > 0) return q[r * w + c - 1];
  if (r > 0) return q[(r - 1) * w + c];
  return 0;
}

void EncodeEscape(RangeEncoder& enc, std::uint32_t v) {
  // Exp-Golomb order 0 with equiprobable bits.
  const std::uint64_t x = static_cast<std::uint64_t>(v) + 1;
  int n = 0;
  while ((x >> (n + 1)) != 0) ++n;
  for (int i = 0; i < n; ++i) enc.EncodeDirect(1, 1);
  enc.EncodeDirect(0, 1);
  if (n > 0)
    enc.EncodeDirect(static_cast<std::uint32_t>(x & ((1ull << n) - 1)), n);
}

std::uint32_t DecodeEscape(RangeDecoder& dec) {
  int n = 0;
  while (dec.DecodeDirect(1) == 1) {
    if (++n > 31 || dec.overrun())
      throw DecodeError(ErrorCode::kCorruptHeader, "invalid escape code");
  }
  const std::uint64_t low = n > 0 ? dec.DecodeDirect(n) : 0;
  return static_cast<std::uint32_t>(((1ull << n) | low) - 1);
}

void EncodeSymbol(RangeEncoder& enc, ChannelModel& m, int ctx,
                  std::int32_t s) {
  enc.EncodeBit(m.zero[static_cast<size_t>(ctx)], s != 0);
  if (s == 0) return;
  if (s == std::numeric_limits<std::int32_t>::min())
    throw ArgumentError("latent symbol out of range");
  enc.EncodeBit(m.sign[static_cast<size_t>(ctx)], s < 0);
  const std::uint32_t mag =
      static_cast<std::uint32_t>(std::abs(static_cast<std::int64_t>(s)) - 1);
  auto& unary = m.mag[static_cast<size_t>(ctx)];
  for (std::uint32_t i = 0; i < kUnaryLength; ++i) {
    if (mag == i) {
      enc.EncodeBit(unary[i], 0);
      return;
    }
    enc.EncodeBit(unary[i], 1);
  }
  EncodeEscape(enc, mag - kUnaryLength);
}

std::int32_t DecodeSymbol(RangeDecoder& dec, ChannelModel& m, int ctx) {
  if (dec.DecodeBit(m.zero[static_cast<size_t>(ctx)]) == 0) return 0;
  const bool negative = dec.DecodeBit(m.sign[static_cast<size_t>(ctx)]) != 0;
  auto& unary = m.mag[static_cast<size_t>(ctx)];
  std::uint32_t mag = 0;
  while (mag < kUnaryLength && dec.DecodeBit(unary[mag]) == 1) ++mag;
  if (mag == kUnaryLength) {
    const std::uint32_t extra = DecodeEscape(dec);
    if (extra > 0x7FFFFFFEu - kUnaryLength)
      throw DecodeError(ErrorCode::kCorruptHeader, "symbol out of range");
    mag += extra;
  }
  const auto v = static_cast<std::int32_t>(mag + 1);
  return negative ? -v : v;
}

}  // namespace

std::vector<std::uint8_t> EncodeLatentSymbols(const QuantizedLatent& y,
                                              int dc_channels) {
  const Index n = y.h * y.w;
  if (y.q.cols() != n) throw ArgumentError("symbol grid shape mismatch");
  RangeEncoder enc;
  LatentModel model(y.channels());
  SymbolGrid coded = y.q;
  int prev_empty = 0;
  for (Index c = 0; c < y.channels(); ++c) {
    std::int32_t* row = coded.row(c).data();
    if (c < dc_channels) {
      const std::int32_t* src = y.q.row(c).data();
      for (Index r = 0; r < y.h; ++r)
        for (Index k = 0; k < y.w; ++k)
          row[r * y.w + k] = src[r * y.w + k] - DcPrediction(src, r, k, y.w);
    }
    const bool empty = (coded.row(c) == 0).all();
    enc.EncodeBit(model.empty[static_cast<size_t>(prev_empty)], empty);
    prev_empty = empty;
    if (empty) continue;
    ChannelModel& m = model.channels[static_cast<size_t>(c)];
    for (Index r = 0; r < y.h; ++r)
      for (Index k = 0; k < y.w; ++k)
        EncodeSymbol(enc, m, ActivityContext(row, r, k, y.w), row[r * y.w + k]);
  }
  return enc.Finish();
}

QuantizedLatent DecodeLatentSymbols(std::span<const std::uint8_t> payload,
                                    Index channels, Index h, Index w,
                                    int dc_channels) {
  RangeDecoder dec(payload);
  LatentModel model(channels);
  QuantizedLatent y{SymbolGrid::Zero(channels, h * w), h, w};
  int prev_empty = 0;
  for (Index c = 0; c < channels; ++c) {
    const bool empty =
        dec.DecodeBit(model.empty[static_cast<size_t>(prev_empty)]) != 0;
    prev_empty = empty;
    if (dec.overrun())
      throw DecodeError(ErrorCode::kTruncated, "latent payload truncated");
    if (empty) continue;
    std::int32_t* row = y.q.row(c).data();
    ChannelModel& m = model.channels[static_cast<size_t>(c)];
    for (Index r = 0; r < h; ++r)
      for (Index k = 0; k < w; ++k)
        row[r * w + k] = DecodeSymbol(dec, m, ActivityContext(row, r, k, w));
    if (dec.overrun())
      throw DecodeError(ErrorCode::kTruncated, "latent payload truncated");
    if (c < dc_channels) {
      // Undo DPCM in raster order so predictions see reconstructed values.
      for (Index r = 0; r < h; ++r)
        for (Index k = 0; k < w; ++k)
          row[r * w + k] += DcPrediction(row, r, k, w);
    }
  }
  if (dec.overrun())
    throw DecodeError(ErrorCode::kTruncated, "latent payload truncated");
  return y;
}

std::vector<std::uint8_t> EncodeMaskLevels(const LevelGrid& levels) {
  RangeEncoder enc;
  std::array<std::array<BitModel, 16>, 16> tree{};
  int prev = 0;
  for (Index r = 0; r < levels.rows(); ++r) {
    for (Index c = 0; c < levels.cols(); ++c) {
      const int v = levels(r, c);
      if (v > 15) throw ArgumentError("mask level exceeds 4 bits");
      const int ctx = c > 0 ? levels(r, c - 1) : (r > 0 ? levels(r - 1, c) : prev);
      int node = 1;
      for (int b = 3; b >= 0; --b) {
        const int bit = (v >> b) & 1;
        enc.EncodeBit(tree[static_cast<size_t>(ctx)][static_cast<size_t>(node)], bit);
        node = node * 2 + bit;
      }
      prev = v;
    }
  }
  return enc.Finish();
}

LevelGrid DecodeMaskLevels(std::span<const std::uint8_t> bytes, Index h,
                           Index w) {
  RangeDecoder dec(bytes);
  std::array<std::array<BitModel, 16>, 16> tree{};
  LevelGrid levels(h, w);
  int prev = 0;
  for (Index r = 0; r < h; ++r) {
    for (Index c = 0; c < w; ++c) {
      const int ctx = c > 0 ? levels(r, c - 1) : (r > 0 ? levels(r - 1, c) : prev);
      int node = 1;
      for (int b = 0; b < 4; ++b)
        node = node * 2 +
               dec.DecodeBit(tree[static_cast<size_t>(ctx)][static_cast<size_t>(node)]);
      levels(r, c) = static_cast<std::uint8_t>(node - 16);
      prev = levels(r, c);
    }
  }
  if (dec.overrun())
    throw DecodeError(ErrorCode::kTruncated, "mask side info truncated");
  return levels;
}

}  // namespace odic::codec
