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
#include "legnn/graph.hpp"
#include "legnn/rng.hpp"

namespace legnn {

struct GcnHyper {
  std::size_t hidden = 64;
  double dropout = 0.5;
  double learning_rate = 0.05;
  double momentum = 0.9;
  double weight_decay = 5e-4;

  friend bool operator==(const GcnHyper&, const GcnHyper&) = default;
};

// Two-layer GCN: Z = softmax(A relu(A X W1) W2), with dropout after the
// hidden activation in training mode.
struct GcnModel {
  DenseMatrix w1;  // d x h
  DenseMatrix w2;  // h x C
  DenseMatrix m1;  // momentum buffers
  DenseMatrix m2;
  GcnHyper hyper;

  std::size_t input_dim() const { return w1.rows(); }
  std::size_t hidden_dim() const { return w1.cols(); }
  std::size_t num_classes() const { return w2.cols(); }

  friend bool operator==(const GcnModel&, const GcnModel&) = default;
};

// Glorot-uniform weights, zero momentum buffers.
GcnModel init_model(std::size_t input_dim, std::size_t num_classes, const GcnHyper& hyper,
                    Rng& rng);

enum class Mode { kTrain, kInfer };

struct ForwardCache {
  const SparseGraph* graph = nullptr;
  const DenseMatrix* features = nullptr;
  DenseMatrix pre_hidden;    // A X W1
  DenseMatrix hidden;        // dropout(relu(pre_hidden))
  DenseMatrix dropout_scale; // per-entry multiplier, empty in inference mode
  DenseMatrix probs;         // Z
};

struct ForwardResult {
  DenseMatrix probs;
  ForwardCache cache;
};

struct Gradients {
  DenseMatrix w1;
  DenseMatrix w2;
  DenseMatrix logits;  // dL/dlogits, kept for inspection
};

// `rng` is only consumed in training mode with a positive dropout rate.
ForwardResult gcn_forward(const GcnModel& model, const SparseGraph& graph, const DenseMatrix& x,
                          Mode mode, Rng* rng = nullptr);

// Inference-only shortcut returning Z.
DenseMatrix gcn_infer(const GcnModel& model, const SparseGraph& graph, const DenseMatrix& x);

// X W1, shared by every inference over the same features and weights.
DenseMatrix project_features(const GcnModel& model, const DenseMatrix& x);
// Inference from precomputed X W1. Bit-identical to gcn_infer.
DenseMatrix infer_projected(const GcnModel& model, const SparseGraph& graph,
                            const DenseMatrix& projected);

// Reverse pass given dL/dZ.
Gradients gcn_backward(const GcnModel& model, const ForwardCache& cache, const DenseMatrix& d_probs);

// buffer <- momentum * buffer + grad + weight_decay * W;  W <- W - lr * buffer
void sgd_step(GcnModel& model, const Gradients& grads);

struct LossValue {
  double loss = 0.0;
  DenseMatrix d_probs;
};

inline constexpr double kProbFloor = 1e-12;

// Mean over `index_set` of -log(max(Z[i, labels[i]], 1e-12)).
LossValue cross_entropy(const DenseMatrix& probs, std::span<const int> labels,
                        std::span<const std::size_t> index_set);

std::vector<int> predict(const DenseMatrix& probs);

}  // namespace legnn
