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

#include "odic/saliency_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "odic/numeric.hpp"

namespace odic {
namespace {

void CheckSameSize(Index w1, Index h1, Index w2, Index h2) {
  if (w1 != w2 || h1 != h2 || w1 < 1 || h1 < 1)
    throw ArgumentError("saliency inputs differ in size or are empty");
}

struct Moments {
  double mean;
  double stddev;
};

Moments MeanStd(const Plane& v) {
  const double n = static_cast<double>(v.size());
  const double mean = PairwiseSum(v) / n;
  const double var = PairwiseSum((v - mean).square().eval()) / n;
  return {mean, std::sqrt(var)};
}

}  // namespace

double Cc(const SaliencyMap& pred, const SaliencyMap& gt) {
  CheckSameSize(pred.width(), pred.height(), gt.width(), gt.height());
  const double n = static_cast<double>(pred.values.size());
  const Plane a = pred.values - PairwiseSum(pred.values) / n;
  const Plane b = gt.values - PairwiseSum(gt.values) / n;
  const double saa = PairwiseSum(a.square().eval());
  const double sbb = PairwiseSum(b.square().eval());
  if (!(saa > 0.0) || !(sbb > 0.0))
    throw DegenerateError("CC undefined for a zero-variance map");
  const double r = PairwiseSum((a * b).eval()) / std::sqrt(saa * sbb);
  return std::clamp(r, -1.0, 1.0);
}

double Kld(const SaliencyMap& gt, const SaliencyMap& pred, double epsilon) {
  CheckSameSize(gt.width(), gt.height(), pred.width(), pred.height());
  if (!gt.valid() || !pred.valid())
    throw ArgumentError("KLD inputs must be finite and non-negative");
  if (!(epsilon >= 0.0)) throw ArgumentError("epsilon must be >= 0");
  const double sp = PairwiseSum(gt.values);
  const double sq = PairwiseSum(pred.values);
  if (!(sp > 0.0) || !(sq > 0.0))
    throw DegenerateError("KLD undefined for an all-zero map");
  const Plane p = gt.values / sp;
  const Plane q = pred.values / sq;
  const Plane terms = p * ((p + epsilon) / (q + epsilon)).log();
  // 0 * log(...) contributes nothing even when the log is -inf with eps = 0.
  return PairwiseSum((p > 0.0).select(terms, 0.0).eval());
}

double Nss(const SaliencyMap& pred, const FixationMap& fix) {
  CheckSameSize(pred.width(), pred.height(), fix.width(), fix.height());
  if (fix.fixation_count() == 0) throw ArgumentError("no fixations");
  const Moments m = MeanStd(pred.values);
  if (!(m.stddev > 0.0))
    throw DegenerateError("NSS undefined for a zero-variance map");
  std::vector<double> z;
  z.reserve(static_cast<size_t>(fix.fixation_count()));
  for (Index r = 0; r < pred.height(); ++r)
    for (Index c = 0; c < pred.width(); ++c)
      if (fix.at(r, c)) z.push_back((pred(r, c) - m.mean) / m.stddev);
  return PairwiseSum(z) / static_cast<double>(z.size());
}

double AucJudd(const SaliencyMap& pred, const FixationMap& fix) {
  CheckSameSize(pred.width(), pred.height(), fix.width(), fix.height());
  if (!pred.values.allFinite()) throw ArgumentError("non-finite prediction");
  const Index n_fix = fix.fixation_count();
  const Index n_all = pred.values.size();
  if (n_fix == 0) throw ArgumentError("no fixations");
  if (n_fix == n_all) throw DegenerateError("every pixel is a fixation");
  const double n_non = static_cast<double>(n_all - n_fix);

  std::vector<std::pair<double, bool>> px;
  px.reserve(static_cast<size_t>(n_all));
  for (Index r = 0; r < pred.height(); ++r)
    for (Index c = 0; c < pred.width(); ++c)
      px.emplace_back(pred(r, c), fix.at(r, c));
  std::sort(px.begin(), px.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<double> fpr{0.0}, tpr{0.0};
  Index tp = 0, fp = 0;
  size_t i = 0;
  while (i < px.size()) {
    // Consume one group of equal values; it becomes a threshold only when
    // it contains at least one fixation.
    const double v = px[i].first;
    bool has_fix = false;
    for (; i < px.size() && px[i].first == v; ++i) {
      if (px[i].second) {
        ++tp;
        has_fix = true;
      } else {
        ++fp;
      }
    }
    if (has_fix) {
      tpr.push_back(static_cast<double>(tp) / static_cast<double>(n_fix));
      fpr.push_back(static_cast<double>(fp) / n_non);
    }
  }
  fpr.push_back(1.0);
  tpr.push_back(1.0);
  double area = 0.0;
  for (size_t k = 1; k < fpr.size(); ++k)
    area += (fpr[k] - fpr[k - 1]) * (tpr[k] + tpr[k - 1]) * 0.5;
  return area;
}

}  // namespace odic
