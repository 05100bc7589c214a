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

#include "odic/codec/block_dct.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "odic/numeric.hpp"

namespace odic::codec {

Eigen::MatrixXd DctMatrix(int n) {
  Eigen::MatrixXd t(n, n);
  for (int k = 0; k < n; ++k) {
    const double s = k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
    for (int i = 0; i < n; ++i)
      t(k, i) = s * std::cos(kPi * (2 * i + 1) * k / (2.0 * n));
  }
  return t;
}

const std::vector<int>& ZigzagOrder(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n * n));
  for (int s = 0; s < 2 * n - 1; ++s) {
    // Odd anti-diagonals run top-right to bottom-left, even ones the reverse.
    if (s % 2 == 0) {
      for (int r = std::min(s, n - 1); r >= 0 && s - r < n; --r)
        order.push_back(r * n + (s - r));
    } else {
      for (int c = std::min(s, n - 1); c >= 0 && s - c < n; --c)
        order.push_back((s - c) * n + c);
    }
  }
  return cache.emplace(n, std::move(order)).first->second;
}

namespace {

Index Reflect(Index i, Index n) {
  // Half-sample symmetric: ... 1 0 | 0 1 ... n-1 | n-1 n-2 ...
  const Index period = 2 * n;
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - 1 - i;
}

}  // namespace

LatentTensor BlockDctAnalysis(const ErpImage& img, int block_size) {
  if (img.empty()) throw ArgumentError("cannot analyze an empty image");
  if (block_size < 1) throw ArgumentError("block size must be >= 1");
  const Index n = block_size;
  const Index h = (img.height() + n - 1) / n;
  const Index w = (img.width() + n - 1) / n;
  const int planes = img.channels();
  const Eigen::MatrixXd t = DctMatrix(block_size);
  const std::vector<int>& zz = ZigzagOrder(block_size);
  LatentTensor y(planes * n * n, h, w);
  Eigen::MatrixXd block(n, n);
  for (int p = 0; p < planes; ++p) {
    const Plane& src = img[p];
    for (Index by = 0; by < h; ++by) {
      for (Index bx = 0; bx < w; ++bx) {
        for (Index r = 0; r < n; ++r)
          for (Index c = 0; c < n; ++c)
            block(r, c) = src(Reflect(by * n + r, src.rows()),
                              Reflect(bx * n + c, src.cols()));
        const Eigen::MatrixXd coef = t * block * t.transpose();
        for (int z = 0; z < n * n; ++z) {
          const int raster = zz[static_cast<size_t>(z)];
          y.at(LatentChannel(p, z, planes), by, bx) =
              coef(raster / n, raster % n);
        }
      }
    }
  }
  return y;
}

ErpImage BlockDctSynthesis(const LatentTensor& y, int block_size, int planes,
                           Index width, Index height, double max_value) {
  const Index n = block_size;
  if (block_size < 1 || planes < 1 || y.channels() != planes * n * n ||
      y.h != (height + n - 1) / n || y.w != (width + n - 1) / n)
    throw ArgumentError("latent shape does not match synthesis request");
  const Eigen::MatrixXd t = DctMatrix(block_size);
  const std::vector<int>& zz = ZigzagOrder(block_size);
  ErpImage out(width, height, planes, max_value);
  Eigen::MatrixXd coef(n, n);
  for (int p = 0; p < planes; ++p) {
    for (Index by = 0; by < y.h; ++by) {
      for (Index bx = 0; bx < y.w; ++bx) {
        for (int z = 0; z < n * n; ++z) {
          const int raster = zz[static_cast<size_t>(z)];
          coef(raster / n, raster % n) =
              y.at(LatentChannel(p, z, planes), by, bx);
        }
        const Eigen::MatrixXd block = t.transpose() * coef * t;
        const Index rows = std::min(n, height - by * n);
        const Index cols = std::min(n, width - bx * n);
        out[p].block(by * n, bx * n, rows, cols) =
            block.topLeftCorner(rows, cols).array();
      }
    }
  }
  return out;
}

}  // namespace odic::codec
