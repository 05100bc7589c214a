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

#include "odic/types.hpp"

// Training-style augmentation of ERP images and their saliency maps.
namespace odic {

// Left-right flip (longitude reversal).
ErpImage HFlip(const ErpImage& img);
SaliencyMap HFlip(const SaliencyMap& map);

// Top-bottom mirror (latitude reversal).
ErpImage VMirror(const ErpImage& img);
SaliencyMap VMirror(const SaliencyMap& map);

// Cyclic shift by `shift` columns (a yaw rotation). Not one of the classic
// flip/crop recipes; provided because ERP is periodic in longitude.
ErpImage WrapRotate(const ErpImage& img, Index shift);
SaliencyMap WrapRotate(const SaliencyMap& map, Index shift);

struct CropSize {
  Index width;
  Index height;
};
inline constexpr CropSize kCropLandscape{1024, 512};
inline constexpr CropSize kCropPortrait{512, 1024};

struct CropOffset {
  Index x;
  Index y;
};

// splitmix64 of (base, index); order-independent per-record seeds.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index);

// Uniform top-left corner. x may be any column (crops wrap around the
// longitude seam) unless the crop spans the full width, in which case x = 0.
CropOffset DrawCropOffset(Index src_width, Index src_height, CropSize crop,
                          std::uint64_t seed);

struct CropResult {
  ErpImage image;
  SaliencyMap saliency;
  CropOffset offset;
};

// Same offset applied to image and saliency. Throws ArgumentError when the
// crop exceeds the source or the rasters are not co-registered.
CropResult RandomCrop(const ErpImage& img, const SaliencyMap& saliency,
                      CropSize crop, std::uint64_t seed);

ErpImage CropAt(const ErpImage& img, CropOffset at, CropSize crop);
SaliencyMap CropAt(const SaliencyMap& map, CropOffset at, CropSize crop);

// Area averaging along axes that shrink, bilinear along axes that grow,
// plain copy along unchanged axes.
Plane ResizePlane(const Plane& src, Index target_w, Index target_h);
ErpImage Resize(const ErpImage& img, Index target_w, Index target_h);
SaliencyMap Resize(const SaliencyMap& map, Index target_w, Index target_h);

}  // namespace odic
