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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "legnn/dense.hpp"
#include "legnn/rng.hpp"

namespace legnn {

inline constexpr int kUnlabeled = -1;

enum class LabelRole { kClean, kNoisyTrain, kNoisyVal };

// One class id per node, kUnlabeled where absent.
struct LabelSet {
  std::vector<int> labels;
  std::size_t num_classes = 0;
  LabelRole role = LabelRole::kClean;

  std::size_t size() const { return labels.size(); }
  bool has(std::size_t node) const { return labels[node] != kUnlabeled; }
  int operator[](std::size_t node) const { return labels[node]; }

  // Throws ValidationError if a present id is out of range.
  void check() const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
};

enum class NoiseKind { kSymmetric, kPair };

std::string_view to_string(NoiseKind kind);
NoiseKind parse_noise_kind(std::string_view text);

struct NoiseSpec {
  NoiseKind kind = NoiseKind::kSymmetric;
  double tau = 0.0;
  std::size_t num_classes = 2;

  void check() const;
};

// Row-stochastic C x C matrix; entry (i, j) is the probability that true
// class i is observed as j. Pair noise flips i to (i + 1) mod C.
DenseMatrix build_transition(const NoiseSpec& spec);

// Resamples every present label from its row of `transition`.
LabelSet flip_labels(const LabelSet& clean, const DenseMatrix& transition, Rng& rng);

}  // namespace legnn
