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

#include "odic/codec/bitstream.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

#include "odic/error.hpp"
#include "odic/losses.hpp"

namespace odic::codec {
namespace {

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i)
    out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> b) : b_(b) {}
  std::uint8_t U8() {
    Need(1);
    return b_[pos_++];
  }
  std::uint32_t U32() {
    Need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(b_[pos_++]) << (8 * i);
    return v;
  }
  std::vector<std::uint8_t> Bytes(std::uint32_t n) {
    Need(n);
    std::vector<std::uint8_t> out(b_.begin() + static_cast<long>(pos_),
                                  b_.begin() + static_cast<long>(pos_ + n));
    pos_ += n;
    return out;
  }
  size_t remaining() const { return b_.size() - pos_; }

 private:
  void Need(size_t n) const {
    if (b_.size() - pos_ < n)
      throw DecodeError(ErrorCode::kTruncated, "bitstream truncated");
  }
  std::span<const std::uint8_t> b_;
  size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> Bitstream::Serialize() const {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.push_back(header.version);
  out.push_back(header.flags);
  PutU32(out, header.width);
  PutU32(out, header.height);
  out.push_back(header.channels);
  out.push_back(header.lambda_index);
  PutU32(out, std::bit_cast<std::uint32_t>(header.alpha));
  PutU32(out, static_cast<std::uint32_t>(mask.size()));
  out.insert(out.end(), mask.begin(), mask.end());
  PutU32(out, static_cast<std::uint32_t>(payload.size()));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Bitstream Bitstream::Parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size())
    throw DecodeError(ErrorCode::kTruncated, "bitstream shorter than magic");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin()))
    throw DecodeError(ErrorCode::kBadMagic, "not an ODIC bitstream");
  Reader r(bytes.subspan(kMagic.size()));
  Bitstream bs;
  bs.header.version = r.U8();
  if (bs.header.version != kVersion)
    throw DecodeError(ErrorCode::kUnsupportedVersion,
                      "unsupported bitstream version " +
                          std::to_string(bs.header.version));
  bs.header.flags = r.U8();
  bs.header.width = r.U32();
  bs.header.height = r.U32();
  bs.header.channels = r.U8();
  bs.header.lambda_index = r.U8();
  bs.header.alpha = std::bit_cast<float>(r.U32());
  if ((bs.header.flags & ~kFlagSaliency) != 0)
    throw DecodeError(ErrorCode::kCorruptHeader, "unknown flag bits set");
  if (bs.header.width == 0 || bs.header.height == 0)
    throw DecodeError(ErrorCode::kCorruptHeader, "zero image dimensions");
  if (bs.header.channels != 1 && bs.header.channels != 3)
    throw DecodeError(ErrorCode::kCorruptHeader, "channels must be 1 or 3");
  if (!(bs.header.alpha > 0.0f) || !std::isfinite(bs.header.alpha))
    throw DecodeError(ErrorCode::kCorruptHeader, "alpha must be positive");
  bs.mask = r.Bytes(r.U32());
  if (!bs.header.saliency_mode() && !bs.mask.empty())
    throw DecodeError(ErrorCode::kCorruptHeader,
                      "mask bytes present without saliency flag");
  bs.payload = r.Bytes(r.U32());
  if (r.remaining() != 0)
    throw DecodeError(ErrorCode::kCorruptHeader, "trailing bytes after payload");
  return bs;
}

double Bitstream::bpp() const {
  return BitsPerPixel(size_bytes(), header.width, header.height);
}

}  // namespace odic::codec
