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

#include "legnn/noise.hpp"

#include <string>

#include "legnn/error.hpp"

namespace legnn {

void LabelSet::check() const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int y = labels[i];
    if (y == kUnlabeled) continue;
    if (y < 0 || static_cast<std::size_t>(y) >= num_classes)
      throw ValidationError("label of node " + std::to_string(i) + " is " + std::to_string(y) +
                            ", expected -1 or a class id below " + std::to_string(num_classes));
  }
}

std::string_view to_string(NoiseKind kind) {
  return kind == NoiseKind::kSymmetric ? "symmetric" : "pair";
}

NoiseKind parse_noise_kind(std::string_view text) {
  if (text == "symmetric" || text == "sym") return NoiseKind::kSymmetric;
  if (text == "pair") return NoiseKind::kPair;
  throw ValidationError("unknown noise kind '" + std::string(text) + "' (expected symmetric|pair)");
}

void NoiseSpec::check() const {
  if (num_classes < 2) throw ValidationError("noise: at least 2 classes are required");
  if (!(tau >= 0.0 && tau < 1.0)) throw ValidationError("noise: rate must lie in [0, 1)");
}

DenseMatrix build_transition(const NoiseSpec& spec) {
  spec.check();
  const std::size_t c = spec.num_classes;
  DenseMatrix t(c, c);
  for (std::size_t i = 0; i < c; ++i) {
    t(i, i) = 1.0 - spec.tau;
    if (spec.kind == NoiseKind::kSymmetric) {
      const double off = spec.tau / static_cast<double>(c - 1);
      for (std::size_t j = 0; j < c; ++j)
        if (j != i) t(i, j) = off;
    } else {
      t(i, (i + 1) % c) = spec.tau;
    }
  }
  return t;
}

LabelSet flip_labels(const LabelSet& clean, const DenseMatrix& transition, Rng& rng) {
  if (transition.rows() != clean.num_classes || transition.cols() != clean.num_classes)
    throw ValidationError("flip_labels: transition matrix must be C x C");
  LabelSet noisy = clean;
  for (int& y : noisy.labels) {
    if (y == kUnlabeled) continue;
    const auto row = transition.row(static_cast<std::size_t>(y));
    const double u = uniform01(rng);
    double cumulative = 0.0;
    std::size_t pick = row.size() - 1;
    for (std::size_t j = 0; j < row.size(); ++j) {
      cumulative += row[j];
      if (u < cumulative) {
        pick = j;
        break;
      }
    }
    // Guard against rounding in the cumulative sum landing on a zero entry.
    while (row[pick] == 0.0 && pick > 0) --pick;
    y = static_cast<int>(pick);
  }
  return noisy;
}

}  // namespace legnn
