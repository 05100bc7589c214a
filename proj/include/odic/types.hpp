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
#include <vector>

#include <Eigen/Core>

#include "odic/error.hpp"

namespace odic {

using Index = Eigen::Index;

// A single raster plane, row-major so that (row, col) walks memory the same
// way the image files do.
template <typename Scalar>
using PlaneT =
    Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Plane = PlaneT<double>;

// Equirectangular image with planar channels. Samples live in
// [0, max_value]; 8-bit sources use max_value 255, 16-bit sources 65535.
template <typename Scalar>
struct ErpImageT {
  std::vector<PlaneT<Scalar>> planes;
  Scalar max_value = Scalar(255);

  ErpImageT() = default;
  ErpImageT(Index width, Index height, int channels,
            Scalar max_value = Scalar(255), Scalar fill = Scalar(0))
      : planes(static_cast<size_t>(channels),
               PlaneT<Scalar>::Constant(height, width, fill)),
        max_value(max_value) {}

  Index width() const { return planes.empty() ? 0 : planes.front().cols(); }
  Index height() const { return planes.empty() ? 0 : planes.front().rows(); }
  int channels() const { return static_cast<int>(planes.size()); }
  bool empty() const { return width() == 0 || height() == 0; }

  PlaneT<Scalar>& operator[](int c) { return planes[static_cast<size_t>(c)]; }
  const PlaneT<Scalar>& operator[](int c) const {
    return planes[static_cast<size_t>(c)];
  }

  // Canonical ERP is 2:1.
  bool is_canonical() const { return !empty() && width() == 2 * height(); }

  bool in_range() const {
    for (const auto& p : planes) {
      if (p.size() && (p.minCoeff() < Scalar(0) || p.maxCoeff() > max_value))
        return false;
    }
    return true;
  }

  // Valid means 1 or 3 consistent, finite planes within range.
  bool valid() const {
    if (planes.empty() || (channels() != 1 && channels() != 3)) return false;
    for (const auto& p : planes) {
      if (p.rows() != height() || p.cols() != width()) return false;
      if (!p.allFinite()) return false;
    }
    return !empty() && in_range();
  }

  friend bool operator==(const ErpImageT& a, const ErpImageT& b) {
    if (a.max_value != b.max_value || a.planes.size() != b.planes.size())
      return false;
    for (size_t c = 0; c < a.planes.size(); ++c) {
      if (a.planes[c].rows() != b.planes[c].rows() ||
          a.planes[c].cols() != b.planes[c].cols() ||
          !(a.planes[c] == b.planes[c]).all())
        return false;
    }
    return true;
  }
};
using ErpImage = ErpImageT<double>;

// Continuous attention density over the ERP grid.
template <typename Scalar>
struct SaliencyMapT {
  PlaneT<Scalar> values;

  SaliencyMapT() = default;
  explicit SaliencyMapT(PlaneT<Scalar> v) : values(std::move(v)) {}
  SaliencyMapT(Index width, Index height, Scalar fill = Scalar(0))
      : values(PlaneT<Scalar>::Constant(height, width, fill)) {}

  Index width() const { return values.cols(); }
  Index height() const { return values.rows(); }
  Scalar& operator()(Index row, Index col) { return values(row, col); }
  Scalar operator()(Index row, Index col) const { return values(row, col); }

  bool valid() const {
    return values.size() > 0 && values.allFinite() &&
           values.minCoeff() >= Scalar(0);
  }
};
using SaliencyMap = SaliencyMapT<double>;

// Binary grid of recorded gaze landing points.
struct FixationMap {
  Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>
      cells;

  FixationMap() = default;
  FixationMap(Index width, Index height)
      : cells(decltype(cells)::Zero(height, width)) {}

  Index width() const { return cells.cols(); }
  Index height() const { return cells.rows(); }
  void set(Index row, Index col) { cells(row, col) = 1; }
  bool at(Index row, Index col) const { return cells(row, col) != 0; }
  Index fixation_count() const { return (cells != 0).count(); }
};

// C x h x w coefficient volume; one row per channel, each row an h*w raster.
template <typename Scalar>
struct LatentTensorT {
  Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>
      coeffs;
  Index h = 0;
  Index w = 0;

  LatentTensorT() = default;
  LatentTensorT(Index channels, Index h, Index w)
      : coeffs(decltype(coeffs)::Zero(channels, h * w)), h(h), w(w) {}

  Index channels() const { return coeffs.rows(); }

  auto channel(Index c) {
    return Eigen::Map<PlaneT<Scalar>>(coeffs.row(c).data(), h, w);
  }
  auto channel(Index c) const {
    return Eigen::Map<const PlaneT<Scalar>>(coeffs.row(c).data(), h, w);
  }
  Scalar& at(Index c, Index row, Index col) { return coeffs(c, row * w + col); }
  Scalar at(Index c, Index row, Index col) const {
    return coeffs(c, row * w + col);
  }
};
using LatentTensor = LatentTensorT<double>;

}  // namespace odic
