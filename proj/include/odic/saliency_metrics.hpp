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

#include "odic/types.hpp"

namespace odic {

inline constexpr double kKldEpsilon = 1e-7;

// Pearson linear correlation over all pixels. Throws DegenerateError when
// either map has zero variance.
double Cc(const SaliencyMap& pred, const SaliencyMap& gt);

// KL(gt || pred) after normalizing both maps to unit sum:
//   sum p * log((p + eps) / (q + eps)).
double Kld(const SaliencyMap& gt, const SaliencyMap& pred,
           double epsilon = kKldEpsilon);

// Mean z-score of pred (population standard deviation) over fixated cells.
double Nss(const SaliencyMap& pred, const FixationMap& fix);

// AUC-Judd. Thresholds are the distinct predicted values at fixations, in
// descending order. At each threshold t a pixel counts as detected when its
// value is >= t; TPR is taken over fixated cells and FPR over the rest. The
// curve is anchored at (0,0) and (1,1) and integrated with trapezoids.
double AucJudd(const SaliencyMap& pred, const FixationMap& fix);

}  // namespace odic
