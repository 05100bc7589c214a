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

#include <numbers>
#include <span>

#include <Eigen/Core>

namespace odic {

inline constexpr double kPi = std::numbers::pi;

// Fixed-order pairwise summation. The tree shape depends only on the length,
// so results are reproducible to the last bit regardless of scheduling.
double PairwiseSum(std::span<const double> values);

template <typename Derived>
double PairwiseSum(const Eigen::DenseBase<Derived>& expr) {
  const Eigen::Array<double, Eigen::Dynamic, 1> flat =
      expr.derived().template cast<double>().reshaped();
  return PairwiseSum(std::span<const double>(flat.data(),
                                             static_cast<size_t>(flat.size())));
}

}  // namespace odic
