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
#include <cstdint>
#include <span>
#include <vector>

#include "legnn/dense.hpp"
#include "legnn/gcn.hpp"
#include "legnn/graph.hpp"

namespace legnn {

// N x C boolean matrix of candidate labels.
class MultiLabelMatrix {
 public:
  MultiLabelMatrix() = default;
  MultiLabelMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool test(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool on = true) { bits_[r * cols_ + c] = on ? 1 : 0; }
  std::size_t row_count(std::size_t r) const;
  std::size_t total_count() const;

  // Row as an integer bitmask; requires cols() <= 64.
  std::uint64_t row_mask(std::size_t r) const;
  // Bitwise "this is a subset of other".
  bool subset_of(const MultiLabelMatrix& other) const;

  friend bool operator==(const MultiLabelMatrix&, const MultiLabelMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

enum class WeightRule {
  // w_ij = s_ij / sum_{k in candidates} s_ik
  kCandidateNormalized,
  // w_ij = s_ij / sum_k s_ik over all classes (reduces to s_ij for row-stochastic Z)
  kLiteral,
};

// Frozen state of one gathering event.
struct EnsembleSnapshot {
  MultiLabelMatrix yp;
  MultiLabelMatrix yn;
  DenseMatrix weights;      // positive-side weights, zero off yp
  DenseMatrix neg_weights;  // negative-side weights over 1 - Z, zero off yn
  std::size_t source_epoch = 0;
};

// Computes the frozen weights for `candidates` from confidence scores.
// For the negative side pass scores = 1 - Z.
DenseMatrix candidate_weights(const DenseMatrix& scores, const MultiLabelMatrix& candidates,
                              WeightRule rule);

enum class MaskStrategy { kRandom, kNearest };

struct BootstrapOptions {
  double mask_rate = 0.5;
  std::size_t views = 15;
  std::uint64_t seed = 0;
  MaskStrategy strategy = MaskStrategy::kRandom;
  MaskMode mode = MaskMode::kDirected;
  const DenseMatrix* features = nullptr;  // required for kNearest
};

// View i draws from make_stream(seed, i).
std::vector<MaskedGraph> bootstrap_views(const SparseGraph& graph, const BootstrapOptions& options);

// Inference on each view, argmax/argmin set-union, and weights from the
// prediction on the unmasked (normalized) `graph`. Never mutates the model.
EnsembleSnapshot gather_labels(const GcnModel& model, const SparseGraph& graph,
                               std::span<const MaskedGraph> views, const DenseMatrix& x,
                               WeightRule rule = WeightRule::kCandidateNormalized);

// Union of argmax (into yp) and argmin (into yn) of each row of each matrix.
void accumulate_votes(const DenseMatrix& probs, MultiLabelMatrix& yp, MultiLabelMatrix& yn);

// Probability that at least half of `neighbors` votes are wrong when each is
// independently wrong with probability `alpha`. Odd counts need a strict
// majority; for even counts a tie counts as an error.
double voting_error_rate(std::size_t neighbors, double alpha);

}  // namespace legnn
