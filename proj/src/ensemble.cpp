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

#include "legnn/ensemble.hpp"

#include <cmath>
#include <string>

#include "legnn/error.hpp"

namespace legnn {

std::size_t MultiLabelMatrix::row_count(std::size_t r) const {
  std::size_t n = 0;
  for (std::size_t c = 0; c < cols_; ++c) n += bits_[r * cols_ + c];
  return n;
}

std::size_t MultiLabelMatrix::total_count() const {
  std::size_t n = 0;
  for (auto b : bits_) n += b;
  return n;
}

std::uint64_t MultiLabelMatrix::row_mask(std::size_t r) const {
  if (cols_ > 64) throw ValidationError("row_mask: more than 64 classes");
  std::uint64_t mask = 0;
  for (std::size_t c = 0; c < cols_; ++c)
    if (test(r, c)) mask |= std::uint64_t{1} << c;
  return mask;
}

bool MultiLabelMatrix::subset_of(const MultiLabelMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] && !other.bits_[k]) return false;
  return true;
}

DenseMatrix candidate_weights(const DenseMatrix& scores, const MultiLabelMatrix& candidates,
                              WeightRule rule) {
  if (scores.rows() != candidates.rows() || scores.cols() != candidates.cols())
    throw ValidationError("candidate_weights: score and candidate shapes differ");
  DenseMatrix w(scores.rows(), scores.cols());
  for (std::size_t i = 0; i < scores.rows(); ++i) {
    const auto s = scores.row(i);
    double denom = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      const bool on = candidates.test(i, k);
      count += on;
      if (rule == WeightRule::kLiteral || on) denom += s[k];
    }
    if (count == 0) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!candidates.test(i, j)) continue;
      // All candidate scores underflowed: spread the weight evenly.
      w(i, j) = denom > 0.0 ? s[j] / denom : 1.0 / static_cast<double>(count);
    }
  }
  return w;
}

std::vector<MaskedGraph> bootstrap_views(const SparseGraph& graph, const BootstrapOptions& options) {
  if (options.views == 0) throw ValidationError("bootstrap_views: need at least one view");
  std::vector<MaskedGraph> views;
  views.reserve(options.views);
  for (std::size_t v = 0; v < options.views; ++v) {
    if (options.strategy == MaskStrategy::kNearest) {
      if (options.features == nullptr)
        throw ValidationError("bootstrap_views: nearest masking needs node features");
      views.push_back(mask_nearest(graph, *options.features, options.mask_rate, options.mode));
    } else {
      Rng rng = make_stream(options.seed, v);
      views.push_back(mask_random(graph, options.mask_rate, rng, options.mode));
    }
  }
  return views;
}

void accumulate_votes(const DenseMatrix& probs, MultiLabelMatrix& yp, MultiLabelMatrix& yn) {
  for (std::size_t k = 0; k < probs.rows(); ++k) {
    const auto row = probs.row(k);
    yp.set(k, argmax(row));
    yn.set(k, argmin(row));
  }
}

EnsembleSnapshot gather_labels(const GcnModel& model, const SparseGraph& graph,
                               std::span<const MaskedGraph> views, const DenseMatrix& x,
                               WeightRule rule) {
  if (views.empty()) throw ValidationError("gather_labels: no views");
  const std::size_t n = graph.num_nodes();
  const std::size_t c = model.num_classes();
  const DenseMatrix projected = project_features(model, x);
  EnsembleSnapshot snap{MultiLabelMatrix(n, c), MultiLabelMatrix(n, c), {}, {}, 0};
  for (const MaskedGraph& view : views) {
    if (view.view.num_nodes() != n)
      throw ValidationError("gather_labels: view has " + std::to_string(view.view.num_nodes()) +
                            " nodes, graph has " + std::to_string(n));
    accumulate_votes(infer_projected(model, view.view, projected), snap.yp, snap.yn);
  }
  const DenseMatrix z = infer_projected(model, graph, projected);
  DenseMatrix complement = z;
  for (double& v : complement.data()) v = 1.0 - v;
  snap.weights = candidate_weights(z, snap.yp, rule);
  snap.neg_weights = candidate_weights(complement, snap.yn, rule);
  return snap;
}

double voting_error_rate(std::size_t neighbors, double alpha) {
  if (neighbors == 0) throw ValidationError("voting_error_rate: need at least one neighbor");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("voting_error_rate: alpha outside [0, 1]");
  const std::size_t p = neighbors;
  double total = 0.0;
  double binom = 1.0;  // C(p, j), updated incrementally
  for (std::size_t j = 0; j <= p; ++j) {
    if (j > 0) binom = binom * static_cast<double>(p - j + 1) / static_cast<double>(j);
    if (2 * j >= p)
      total += binom * std::pow(alpha, static_cast<double>(j)) *
               std::pow(1.0 - alpha, static_cast<double>(p - j));
  }
  return total;
}

}  // namespace legnn
