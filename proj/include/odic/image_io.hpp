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
#include <string>
#include <vector>

#include "odic/types.hpp"

// PNG (8/16-bit gray or RGB, alpha dropped) and binary PGM/PPM (P5/P6,
// maxval up to 65535) readers and writers. Files are sniffed by content on
// load and selected by extension on save (.png, else PNM).
namespace odic {

ErpImage DecodeImage(std::span<const std::uint8_t> bytes);
ErpImage LoadImage(const std::string& path);

// Integer samples; max_value 255 writes 8-bit, anything larger 16-bit.
std::vector<std::uint8_t> EncodePnm(const ErpImage& img);
std::vector<std::uint8_t> EncodePng(const ErpImage& img);
void SaveImage(const std::string& path, const ErpImage& img);

// Samples are rounded to the nearest integer and clipped to [0, max_value].
ErpImage Quantized(const ErpImage& img);

// Converts between integer ranges, e.g. 16-bit to 8-bit.
ErpImage RescaledTo(const ErpImage& img, double max_value);

// Saliency maps are normalized to [0, 1] by the file's max value (first
// channel, or luma for RGB files).
SaliencyMap LoadSaliency(const std::string& path);
// Written as 16-bit grayscale; values are divided by max(1, map max).
void SaveSaliency(const std::string& path, const SaliencyMap& map);

// Any nonzero sample marks a fixation.
FixationMap LoadFixations(const std::string& path);
void SaveFixations(const std::string& path, const FixationMap& fix);

// Float raster: "F32R", u32 width, u32 height, u32 planes, then
// planes * height * width little-endian IEEE-754 f32 values, plane-major,
// rows top to bottom.
void WriteFloatRaster(const std::string& path, std::span<const Plane> planes);
std::vector<Plane> ReadFloatRaster(const std::string& path);

std::vector<std::uint8_t> ReadFileBytes(const std::string& path);
void WriteFileBytes(const std::string& path,
                    std::span<const std::uint8_t> bytes);

}  // namespace odic
