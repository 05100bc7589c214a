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

// Binary adaptive range coder (carry-propagating, 32-bit range, byte output).
namespace odic::codec {

inline constexpr int kProbBits = 15;
inline constexpr std::uint32_t kProbOne = 1u << kProbBits;
inline constexpr int kAdaptShift = 5;

// Adaptive probability that the next bit is 0.
struct BitModel {
  std::uint16_t p0 = kProbOne / 2;
};

class RangeEncoder {
 public:
  void EncodeBit(BitModel& m, int bit);
  // Equiprobable bits, most significant first.
  void EncodeDirect(std::uint32_t value, int nbits);
  std::vector<std::uint8_t> Finish();

 private:
  void ShiftLow();

  std::uint64_t low_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
  std::uint8_t cache_ = 0;
  std::uint64_t cache_size_ = 1;
  std::vector<std::uint8_t> out_;
};

class RangeDecoder {
 public:
  explicit RangeDecoder(std::span<const std::uint8_t> data);
  int DecodeBit(BitModel& m);
  std::uint32_t DecodeDirect(int nbits);
  // True once the decoder has needed bytes past the end of its input.
  bool overrun() const { return overrun_; }

 private:
  std::uint8_t NextByte();

  std::span<const std::uint8_t> data_;
  size_t pos_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
  std::uint32_t code_ = 0;
  bool overrun_ = false;
};

}  // namespace odic::codec
