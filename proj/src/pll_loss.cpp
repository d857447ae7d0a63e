// Copyright 2026 The LEGNN-cpp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "legnn/pll_loss.hpp"

#include <cmath>

#include "legnn/error.hpp"

namespace legnn {

namespace {

void check_shapes(const DenseMatrix& probs, const DenseMatrix& weights) {
  if (probs.rows() == 0) throw ValidationError("partial-label loss: no nodes");
  if (weights.rows() != probs.rows() || weights.cols() != probs.cols())
    throw ValidationError("partial-label loss: snapshot shape does not match Z");
}

// (1/N) sum_ij w_ij * -log(max(s_ij, floor)) with s = Z (sign = +1) or
// s = 1 - Z (sign = -1); the gradient is returned with respect to Z.
LossValue weighted_nll(const DenseMatrix& probs, const DenseMatrix& weights, double sign) {
  check_shapes(probs, weights);
  const double scale = 1.0 / static_cast<double>(probs.rows());
  LossValue out{0.0, DenseMatrix(probs.rows(), probs.cols())};
  for (std::size_t i = 0; i < probs.rows(); ++i) {
    const auto z = probs.row(i);
    const auto w = weights.row(i);
    auto d = out.d_probs.row(i);
    double row_loss = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (w[j] == 0.0) continue;
      const double s = sign > 0.0 ? z[j] : 1.0 - z[j];
      row_loss -= w[j] * std::log(std::max(s, kProbFloor));
      if (s > kProbFloor) d[j] = -sign * w[j] * scale / s;
    }
    out.loss += row_loss * scale;
  }
  return out;
}

}  // namespace

LossValue positive_loss(const DenseMatrix& probs, const EnsembleSnapshot& snapshot) {
  return weighted_nll(probs, snapshot.weights, 1.0);
}

LossValue negative_loss(const DenseMatrix& probs, const EnsembleSnapshot& snapshot) {
  return weighted_nll(probs, snapshot.neg_weights, -1.0);
}

LossReport bidirectional_loss(const DenseMatrix& probs, const EnsembleSnapshot& snapshot,
                              bool use_negative) {
  LossValue pos = positive_loss(probs, snapshot);
  LossReport report{pos.loss, pos.loss, 0.0, std::move(pos.d_probs)};
  if (use_negative) {
    LossValue neg = negative_loss(probs, snapshot);
    report.negative = neg.loss;
    report.total = report.positive + report.negative;
    auto& d = report.d_probs.data();
    const auto& dn = neg.d_probs.data();
    for (std::size_t k = 0; k < d.size(); ++k) d[k] += dn[k];
  }
  return report;
}

}  // namespace legnn
