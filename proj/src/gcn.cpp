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

#include "legnn/gcn.hpp"

#include <cmath>
#include <string>

#include "legnn/error.hpp"

namespace legnn {

namespace {

void glorot(DenseMatrix& w, Rng& rng) {
  const double limit = std::sqrt(6.0 / static_cast<double>(w.rows() + w.cols()));
  for (double& v : w.data()) v = (2.0 * uniform01(rng) - 1.0) * limit;
}

void require_finite(const DenseMatrix& m, const char* what) {
  if (!m.all_finite()) throw NumericalError(std::string("non-finite values in ") + what);
}

DenseMatrix relu(const DenseMatrix& m) {
  DenseMatrix out = m;
  for (double& v : out.data())
    if (v < 0.0) v = 0.0;
  return out;
}

// Shared tail of every forward pass: logits = A (H W2), Z = softmax(logits).
// H W2 is taken as row dot products against W2^T: with few classes the
// axpy form of matmul is dominated by branches on ReLU zeros.
DenseMatrix output_layer(const GcnModel& model, const SparseGraph& graph, const DenseMatrix& hidden) {
  DenseMatrix w2t(model.w2.cols(), model.w2.rows());
  for (std::size_t r = 0; r < model.w2.rows(); ++r)
    for (std::size_t c = 0; c < model.w2.cols(); ++c) w2t(c, r) = model.w2(r, c);
  DenseMatrix logits = spmm(graph, matmul_nt(hidden, w2t));
  require_finite(logits, "output logits");
  return softmax_rows(logits);
}

}  // namespace

GcnModel init_model(std::size_t input_dim, std::size_t num_classes, const GcnHyper& hyper, Rng& rng) {
  if (input_dim == 0 || num_classes < 2 || hyper.hidden == 0)
    throw ValidationError("init_model: need input_dim >= 1, hidden >= 1 and at least 2 classes");
  GcnModel model;
  model.hyper = hyper;
  model.w1 = DenseMatrix(input_dim, hyper.hidden);
  model.w2 = DenseMatrix(hyper.hidden, num_classes);
  glorot(model.w1, rng);
  glorot(model.w2, rng);
  model.m1 = DenseMatrix(input_dim, hyper.hidden);
  model.m2 = DenseMatrix(hyper.hidden, num_classes);
  return model;
}

DenseMatrix project_features(const GcnModel& model, const DenseMatrix& x) {
  if (x.cols() != model.input_dim())
    throw ValidationError("feature dimension " + std::to_string(x.cols()) +
                          " does not match model input dimension " +
                          std::to_string(model.input_dim()));
  return matmul(x, model.w1);
}

DenseMatrix infer_projected(const GcnModel& model, const SparseGraph& graph,
                            const DenseMatrix& projected) {
  if (projected.rows() != graph.num_nodes())
    throw ValidationError("inference: feature rows do not match graph size");
  DenseMatrix hidden = relu(spmm(graph, projected));
  require_finite(hidden, "hidden layer");
  return output_layer(model, graph, hidden);
}

DenseMatrix gcn_infer(const GcnModel& model, const SparseGraph& graph, const DenseMatrix& x) {
  return infer_projected(model, graph, project_features(model, x));
}

ForwardResult gcn_forward(const GcnModel& model, const SparseGraph& graph, const DenseMatrix& x,
                          Mode mode, Rng* rng) {
  if (x.rows() != graph.num_nodes())
    throw ValidationError("gcn_forward: X has " + std::to_string(x.rows()) + " rows, graph has " +
                          std::to_string(graph.num_nodes()) + " nodes");
  ForwardCache cache;
  cache.graph = &graph;
  cache.features = &x;
  cache.pre_hidden = spmm(graph, project_features(model, x));
  cache.hidden = relu(cache.pre_hidden);
  require_finite(cache.hidden, "hidden layer");

  const double rate = model.hyper.dropout;
  if (mode == Mode::kTrain && rate > 0.0) {
    if (rng == nullptr) throw ValidationError("gcn_forward: training with dropout needs a generator");
    const double keep_scale = 1.0 / (1.0 - rate);
    cache.dropout_scale = DenseMatrix(cache.hidden.rows(), cache.hidden.cols());
    auto& scale = cache.dropout_scale.data();
    auto& h = cache.hidden.data();
    for (std::size_t k = 0; k < h.size(); ++k) {
      scale[k] = uniform01(*rng) < rate ? 0.0 : keep_scale;
      h[k] *= scale[k];
    }
  }
  cache.probs = output_layer(model, graph, cache.hidden);
  ForwardResult result{cache.probs, std::move(cache)};
  return result;
}

Gradients gcn_backward(const GcnModel& model, const ForwardCache& cache, const DenseMatrix& d_probs) {
  const DenseMatrix& z = cache.probs;
  if (cache.graph == nullptr || cache.features == nullptr)
    throw ValidationError("gcn_backward: cache is not from a forward pass");
  if (d_probs.rows() != z.rows() || d_probs.cols() != z.cols())
    throw ValidationError("gcn_backward: dZ shape does not match the cached output");
  if (cache.hidden.cols() != model.hidden_dim() || z.cols() != model.num_classes())
    throw ValidationError("gcn_backward: cache does not match the model shape");

  Gradients g;
  g.logits = DenseMatrix(z.rows(), z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i) {
    auto zi = z.row(i);
    auto dzi = d_probs.row(i);
    double dot = 0.0;
    for (std::size_t j = 0; j < zi.size(); ++j) dot += dzi[j] * zi[j];
    auto out = g.logits.row(i);
    for (std::size_t j = 0; j < zi.size(); ++j) out[j] = zi[j] * (dzi[j] - dot);
  }

  const SparseGraph& graph = *cache.graph;
  const DenseMatrix d_out = spmm_transpose(graph, g.logits);  // dL/d(H W2)
  g.w2 = matmul_tn(cache.hidden, d_out);
  DenseMatrix d_hidden = matmul_nt(d_out, model.w2);
  auto& dh = d_hidden.data();
  if (!cache.dropout_scale.data().empty()) {
    const auto& scale = cache.dropout_scale.data();
    for (std::size_t k = 0; k < dh.size(); ++k) dh[k] *= scale[k];
  }
  const auto& pre = cache.pre_hidden.data();
  for (std::size_t k = 0; k < dh.size(); ++k)
    if (pre[k] <= 0.0) dh[k] = 0.0;
  g.w1 = matmul_tn(*cache.features, spmm_transpose(graph, d_hidden));
  return g;
}

void sgd_step(GcnModel& model, const Gradients& grads) {
  require_finite(grads.w1, "W1 gradient");
  require_finite(grads.w2, "W2 gradient");
  const auto& h = model.hyper;
  auto update = [&](DenseMatrix& w, DenseMatrix& buf, const DenseMatrix& g) {
    if (g.rows() != w.rows() || g.cols() != w.cols())
      throw ValidationError("sgd_step: gradient shape does not match weights");
    auto& wd = w.data();
    auto& bd = buf.data();
    const auto& gd = g.data();
    for (std::size_t k = 0; k < wd.size(); ++k) {
      bd[k] = h.momentum * bd[k] + gd[k] + h.weight_decay * wd[k];
      wd[k] -= h.learning_rate * bd[k];
    }
  };
  update(model.w1, model.m1, grads.w1);
  update(model.w2, model.m2, grads.w2);
  require_finite(model.w1, "W1 after update");
  require_finite(model.w2, "W2 after update");
}

LossValue cross_entropy(const DenseMatrix& probs, std::span<const int> labels,
                        std::span<const std::size_t> index_set) {
  if (index_set.empty()) throw ValidationError("cross_entropy: empty index set");
  LossValue out{0.0, DenseMatrix(probs.rows(), probs.cols())};
  const double scale = 1.0 / static_cast<double>(index_set.size());
  for (std::size_t i : index_set) {
    const int y = labels[i];
    if (y < 0 || static_cast<std::size_t>(y) >= probs.cols())
      throw ValidationError("cross_entropy: node " + std::to_string(i) + " has invalid label " +
                            std::to_string(y));
    const double p = probs(i, static_cast<std::size_t>(y));
    out.loss -= std::log(std::max(p, kProbFloor)) * scale;
    if (p > kProbFloor) out.d_probs(i, static_cast<std::size_t>(y)) -= scale / p;
  }
  return out;
}

std::vector<int> predict(const DenseMatrix& probs) {
  std::vector<int> out(probs.rows());
  for (std::size_t i = 0; i < probs.rows(); ++i) out[i] = static_cast<int>(argmax(probs.row(i)));
  return out;
}

}  // namespace legnn
