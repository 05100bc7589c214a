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
#include <cstdint>
#include <span>
#include <vector>

// Container layout (all integers little-endian):
//
//   offset  size  field
//   0       4     magic "ODIC"
//   4       1     version (1)
//   5       1     flags, bit0 = saliency mode; other bits must be 0
//   6       4     width  (u32)
//   10      4     height (u32)
//   14      1     channels (1 or 3)
//   15      1     lambda_index
//   16      4     alpha (IEEE-754 f32)
//   20      4     mask_len (u32)
//   24      n     mask bytes (range-coded 4-bit residual levels)
//   24+n    4     payload_len (u32)
//   28+n    m     payload (range-coded latent symbols)
namespace odic::codec {

inline constexpr std::array<std::uint8_t, 4> kMagic = {'O', 'D', 'I', 'C'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::uint8_t kFlagSaliency = 0x01;
inline constexpr size_t kFixedHeaderBytes = 24;

struct BitstreamHeader {
  std::uint8_t version = kVersion;
  std::uint8_t flags = 0;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint8_t channels = 0;
  std::uint8_t lambda_index = 0;
  float alpha = 1.0f;

  bool saliency_mode() const { return (flags & kFlagSaliency) != 0; }
  friend bool operator==(const BitstreamHeader&,
                         const BitstreamHeader&) = default;
};

struct Bitstream {
  BitstreamHeader header;
  std::vector<std::uint8_t> mask;
  std::vector<std::uint8_t> payload;

  std::vector<std::uint8_t> Serialize() const;
  // Distinct DecodeError codes for bad magic, unknown version, corrupt
  // header fields and truncation.
  static Bitstream Parse(std::span<const std::uint8_t> bytes);

  size_t size_bytes() const {
    return kFixedHeaderBytes + mask.size() + 4 + payload.size();
  }
  // 8 * size_bytes() / (width * height).
  double bpp() const;
};

}  // namespace odic::codec
