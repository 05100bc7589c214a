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

#include "odic/codec/range_coder.hpp"

namespace odic::codec {

namespace {
constexpr std::uint32_t kTop = 1u << 24;
}

void RangeEncoder::EncodeBit(BitModel& m, int bit) {
  const std::uint32_t bound = (range_ >> kProbBits) * m.p0;
  if (bit == 0) {
    range_ = bound;
    m.p0 = static_cast<std::uint16_t>(m.p0 + ((kProbOne - m.p0) >> kAdaptShift));
  } else {
    low_ += bound;
    range_ -= bound;
    m.p0 = static_cast<std::uint16_t>(m.p0 - (m.p0 >> kAdaptShift));
  }
  while (range_ < kTop) {
    range_ <<= 8;
    ShiftLow();
  }
}

void RangeEncoder::EncodeDirect(std::uint32_t value, int nbits) {
  for (int i = nbits - 1; i >= 0; --i) {
    range_ >>= 1;
    if ((value >> i) & 1u) low_ += range_;
    while (range_ < kTop) {
      range_ <<= 8;
      ShiftLow();
    }
  }
}

void RangeEncoder::ShiftLow() {
  if (static_cast<std::uint32_t>(low_) < 0xFF000000u || (low_ >> 32) != 0) {
    const auto carry = static_cast<std::uint8_t>(low_ >> 32);
    std::uint8_t temp = cache_;
    do {
      out_.push_back(static_cast<std::uint8_t>(temp + carry));
      temp = 0xFF;
    } while (--cache_size_ != 0);
    cache_ = static_cast<std::uint8_t>(low_ >> 24);
  }
  ++cache_size_;
  low_ = (low_ & 0x00FFFFFFu) << 8;
}

std::vector<std::uint8_t> RangeEncoder::Finish() {
  for (int i = 0; i < 5; ++i) ShiftLow();
  return std::move(out_);
}

RangeDecoder::RangeDecoder(std::span<const std::uint8_t> data) : data_(data) {
  for (int i = 0; i < 5; ++i) code_ = (code_ << 8) | NextByte();
}

std::uint8_t RangeDecoder::NextByte() {
  if (pos_ >= data_.size()) {
    overrun_ = true;
    return 0;
  }
  return data_[pos_++];
}

int RangeDecoder::DecodeBit(BitModel& m) {
  const std::uint32_t bound = (range_ >> kProbBits) * m.p0;
  int bit;
  if (code_ < bound) {
    range_ = bound;
    m.p0 = static_cast<std::uint16_t>(m.p0 + ((kProbOne - m.p0) >> kAdaptShift));
    bit = 0;
  } else {
    code_ -= bound;
    range_ -= bound;
    m.p0 = static_cast<std::uint16_t>(m.p0 - (m.p0 >> kAdaptShift));
    bit = 1;
  }
  while (range_ < kTop) {
    range_ <<= 8;
    code_ = (code_ << 8) | NextByte();
  }
  return bit;
}

std::uint32_t RangeDecoder::DecodeDirect(int nbits) {
  std::uint32_t v = 0;
  for (int i = 0; i < nbits; ++i) {
    range_ >>= 1;
    std::uint32_t bit = 0;
    if (code_ >= range_) {
      code_ -= range_;
      bit = 1;
    }
    v = (v << 1) | bit;
    while (range_ < kTop) {
      range_ <<= 8;
      code_ = (code_ << 8) | NextByte();
    }
  }
  return v;
}

}  // namespace odic::codec
