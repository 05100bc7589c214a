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

#include <vector>

#include <Eigen/Core>

#include "odic/types.hpp"

namespace odic::codec {

// Orthonormal DCT-II matrix, rows are basis functions.
Eigen::MatrixXd DctMatrix(int n);

// zigzag position -> raster index (row * n + col) inside an n x n block.
const std::vector<int>& ZigzagOrder(int n);

// Channel of coefficient (plane, zigzag position). Channels are
// frequency-major so the first channels hold the lowest frequencies of every
// plane.
inline Index LatentChannel(int plane, int zigzag, int planes) {
  return static_cast<Index>(zigzag) * planes + plane;
}

// Block DCT of every plane after reflective padding to block multiples.
// Produces C = planes * n^2 channels on a ceil(H/n) x ceil(W/n) grid.
LatentTensor BlockDctAnalysis(const ErpImage& img, int block_size);

// Inverse of BlockDctAnalysis; crops the padding. Samples are not clipped.
ErpImage BlockDctSynthesis(const LatentTensor& y, int block_size, int planes,
                           Index width, Index height, double max_value);

}  // namespace odic::codec
