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

#pragma once

#include "legnn/dense.hpp"
#include "legnn/ensemble.hpp"
#include "legnn/gcn.hpp"

namespace legnn {

// Weighted partial-label loss on the high-probability candidates:
// (1/N) sum_i sum_j w_ij * -log(max(Z_ij, 1e-12)). Weights are taken from the
// snapshot and receive no gradient.
LossValue positive_loss(const DenseMatrix& probs, const EnsembleSnapshot& snapshot);

// The same loss applied to 1 - Z over the low-probability candidates.
LossValue negative_loss(const DenseMatrix& probs, const EnsembleSnapshot& snapshot);

struct LossReport {
  double total = 0.0;
  double positive = 0.0;
  double negative = 0.0;
  DenseMatrix d_probs;
};

// positive + negative; `use_negative = false` drops the low-probability term.
LossReport bidirectional_loss(const DenseMatrix& probs, const EnsembleSnapshot& snapshot,
                              bool use_negative = true);

}  // namespace legnn
