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

#include "legnn/trainers.hpp"

#include <chrono>
#include <fstream>
#include <string>

#include "legnn/error.hpp"
#include "legnn/pll_loss.hpp"

namespace legnn {

void TrainConfig::check() const {
  if (epochs == 0) throw ValidationError("train: epochs must be at least 1");
  if (!(mask_rate >= 0.0 && mask_rate < 1.0)) throw ValidationError("train: mask rate must lie in [0, 1)");
  if (mask_iterations == 0) throw ValidationError("train: mask iterations must be at least 1");
  if (!(anchor_weight >= 0.0)) throw ValidationError("train: anchor weight must be non-negative");
  if (regather_patience == 0) throw ValidationError("train: regather patience must be at least 1");
  if (round_epochs == 0) throw ValidationError("train: round_epochs must be at least 1");
  if (!(hyper.dropout >= 0.0 && hyper.dropout < 1.0)) throw ValidationError("train: dropout must lie in [0, 1)");
  if (hyper.hidden == 0) throw ValidationError("train: hidden width must be positive");
  if (!(hyper.learning_rate >= 0.0)) throw ValidationError("train: learning rate must be non-negative");
}

double label_accuracy(const DenseMatrix& probs, const LabelSet& labels,
                      const std::vector<std::size_t>& nodes) {
  std::size_t seen = 0, correct = 0;
  for (std::size_t i : nodes) {
    if (!labels.has(i)) continue;
    ++seen;
    correct += static_cast<int>(argmax(probs.row(i))) == labels[i];
  }
  return seen == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(seen);
}

MultiLabelMatrix neighbor_label_union(const SparseGraph& graph, const std::vector<int>& labels,
                                      std::size_t num_classes) {
  MultiLabelMatrix out(graph.num_nodes(), num_classes);
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    bool any = false;
    for (NodeId j : graph.neighbors(i)) {
      if (j == i || labels[j] == kUnlabeled) continue;
      out.set(i, static_cast<std::size_t>(labels[j]));
      any = true;
    }
    if (!any && labels[i] != kUnlabeled) out.set(i, static_cast<std::size_t>(labels[i]));
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Model, best-validation snapshot and trace for one training run.
class Session {
 public:
  Session(const TrainInputs& in, const TrainConfig& cfg)
      : in_(in), cfg_(cfg), dropout_rng_(make_stream(cfg.seed, Stream::kDropout)) {
    if (in.features.rows() != in.graph.num_nodes())
      throw ValidationError("train: feature rows do not match the graph");
    if (in.noisy.size() != in.graph.num_nodes())
      throw ValidationError("train: label count does not match the graph");
    if (in.splits.train.empty()) throw ValidationError("train: empty train split");
    for (std::size_t i : in.splits.train)
      if (i >= in.noisy.size() || !in.noisy.has(i))
        throw ValidationError("train: train node " + std::to_string(i) + " has no label");
    Rng init_rng = make_stream(cfg.seed, Stream::kInit);
    model = init_model(in.features.cols(), in.noisy.num_classes, cfg.hyper, init_rng);
    best = model;
    record(Phase::kWarmup, 0.0, false);
  }

  const TrainInputs& in() const { return in_; }
  std::size_t num_classes() const { return in_.noisy.num_classes; }

  DenseMatrix infer() const { return gcn_infer(model, in_.graph, in_.features); }

  double validate() const { return label_accuracy(infer(), in_.noisy, in_.splits.val); }

  // Appends the record for the current weights; returns the val accuracy.
  double record(Phase phase, double loss, bool regathered) {
    return record(phase, loss, regathered, validate());
  }

  double record(Phase phase, double loss, bool regathered, double val) {
    EpochRecord rec{epoch_, phase, loss, val, regathered};
    trace.epochs.push_back(rec);
    // The first epoch of a selection window always replaces the snapshot, so
    // neither a lucky initialization nor the warmup can win selection.
    if (epoch_ <= trace.selection_start || val > trace.best_val_accuracy) {
      trace.best_val_accuracy = val;
      trace.best_epoch = epoch_;
      best = model;
    }
    ++epoch_;
    return val;
  }

  double ce_step(const std::vector<int>& labels, const std::vector<std::size_t>& nodes) {
    ForwardResult f = gcn_forward(model, in_.graph, in_.features, Mode::kTrain, &dropout_rng_);
    LossValue loss = cross_entropy(f.probs, labels, nodes);
    sgd_step(model, gcn_backward(model, f.cache, loss.d_probs));
    return loss.loss;
  }

  double pll_step(const EnsembleSnapshot& snapshot) {
    ForwardResult f = gcn_forward(model, in_.graph, in_.features, Mode::kTrain, &dropout_rng_);
    LossReport loss = bidirectional_loss(f.probs, snapshot, cfg_.use_negative_loss);
    if (cfg_.anchor_weight > 0.0) {
      const LossValue ce = cross_entropy(f.probs, in_.noisy.labels, in_.splits.train);
      loss.total += cfg_.anchor_weight * ce.loss;
      auto& d = loss.d_probs.data();
      const auto& dc = ce.d_probs.data();
      for (std::size_t k = 0; k < d.size(); ++k) d[k] += cfg_.anchor_weight * dc[k];
    }
    sgd_step(model, gcn_backward(model, f.cache, loss.d_probs));
    return loss.total;
  }

  void fit_ce(const std::vector<int>& labels, const std::vector<std::size_t>& nodes,
              std::size_t epochs, Phase phase) {
    for (std::size_t e = 0; e < epochs; ++e) record(phase, ce_step(labels, nodes), false);
  }

  // Continue from the best-validation weights of the warmup; selection then
  // restarts so the returned model comes from the main phase.
  void restore_best() {
    model = best;
    trace.selection_start = epoch_;
  }

  TrainResult finish(Clock::time_point start, std::optional<MultiLabelMatrix> gathered) {
    trace.total_seconds = seconds_since(start);
    return TrainResult{best, model, std::move(trace), std::move(gathered)};
  }

  GcnModel model;
  GcnModel best;
  TrainTrace trace;

 private:
  const TrainInputs& in_;
  const TrainConfig& cfg_;
  Rng dropout_rng_;
  std::size_t epoch_ = 0;
};

EnsembleSnapshot snapshot_from(const DenseMatrix& z, MultiLabelMatrix yp, MultiLabelMatrix yn,
                               WeightRule rule, std::size_t epoch) {
  DenseMatrix complement = z;
  for (double& v : complement.data()) v = 1.0 - v;
  EnsembleSnapshot snap;
  snap.weights = candidate_weights(z, yp, rule);
  snap.neg_weights = candidate_weights(complement, yn, rule);
  snap.yp = std::move(yp);
  snap.yn = std::move(yn);
  snap.source_epoch = epoch;
  return snap;
}

}  // namespace

TrainResult train_gcn_ce(const TrainInputs& in, const TrainConfig& cfg) {
  const auto start = Clock::now();
  Session s(in, cfg);
  s.fit_ce(in.noisy.labels, in.splits.train, cfg.epochs, Phase::kMain);
  return s.finish(start, std::nullopt);
}

TrainResult train_legnn(const TrainInputs& in, const TrainConfig& cfg) {
  cfg.check();
  const auto start = Clock::now();
  Session s(in, cfg);
  s.fit_ce(in.noisy.labels, in.splits.train, cfg.warmup_epochs, Phase::kWarmup);
  s.restore_best();

  const std::uint64_t mask_base = splitmix64(cfg.seed + static_cast<std::uint64_t>(Stream::kMask));
  auto gather = [&](std::size_t epoch) {
    const auto t0 = Clock::now();
    BootstrapOptions opts;
    opts.mask_rate = cfg.mask_rate;
    opts.views = cfg.mask_iterations;
    opts.seed = splitmix64(mask_base + s.trace.gather_events);
    opts.strategy = cfg.mask_strategy;
    opts.mode = cfg.mask_mode;
    opts.features = &in.features;
    const auto views = bootstrap_views(in.graph, opts);
    EnsembleSnapshot snap = gather_labels(s.model, in.graph, views, in.features, cfg.weight_rule);
    snap.source_epoch = epoch;
    ++s.trace.gather_events;
    s.trace.gather_seconds += seconds_since(t0);
    return snap;
  };

  EnsembleSnapshot snapshot = gather(s.trace.epochs.size());
  std::size_t below = 0;
  for (std::size_t e = 1; e <= cfg.epochs; ++e) {
    const double loss = s.pll_step(snapshot);
    const double best_before = s.trace.best_val_accuracy;
    const double val = s.validate();
    below = val < best_before ? below + 1 : 0;
    const bool regather = e > 1 && below >= cfg.regather_patience;
    if (regather) {
      snapshot = gather(s.trace.epochs.size());
      below = 0;
    }
    s.record(Phase::kMain, loss, regather, val);
  }
  return s.finish(start, std::move(snapshot.yp));
}

TrainResult train_propagation(const TrainInputs& in, const TrainConfig& cfg) {
  cfg.check();
  const auto start = Clock::now();
  Session s(in, cfg);
  s.fit_ce(in.noisy.labels, in.splits.train, cfg.warmup_epochs, Phase::kWarmup);
  s.restore_best();

  const std::size_t c = s.num_classes();
  std::vector<int> current(in.graph.num_nodes(), kUnlabeled);
  for (std::size_t i : in.splits.train) current[i] = in.noisy[i];

  MultiLabelMatrix candidates;
  std::size_t done = 0;
  while (done < cfg.epochs) {
    const auto t0 = Clock::now();
    candidates = neighbor_label_union(in.graph, current, c);
    const DenseMatrix z = s.infer();
    MultiLabelMatrix yn(z.rows(), c);
    for (std::size_t i = 0; i < z.rows(); ++i) yn.set(i, argmin(z.row(i)));
    const EnsembleSnapshot snap =
        snapshot_from(z, candidates, std::move(yn), cfg.weight_rule, s.trace.epochs.size());
    ++s.trace.gather_events;
    s.trace.gather_seconds += seconds_since(t0);

    const std::size_t round = std::min(cfg.round_epochs, cfg.epochs - done);
    for (std::size_t e = 0; e < round; ++e) s.record(Phase::kMain, s.pll_step(snap), false);
    done += round;
    current = predict(s.infer());
  }
  return s.finish(start, std::move(candidates));
}

TrainResult train_confidence(const TrainInputs& in, const TrainConfig& cfg) {
  cfg.check();
  const auto start = Clock::now();
  Session s(in, cfg);
  s.fit_ce(in.noisy.labels, in.splits.train, cfg.warmup_epochs, Phase::kWarmup);
  s.restore_best();

  const std::size_t c = s.num_classes();
  MultiLabelMatrix selected_bits(in.graph.num_nodes(), c);
  std::size_t done = 0;
  while (done < cfg.epochs) {
    const DenseMatrix z = s.infer();
    std::vector<int> labels(z.rows(), kUnlabeled);
    std::vector<std::size_t> selected;
    selected_bits = MultiLabelMatrix(z.rows(), c);
    for (std::size_t i = 0; i < z.rows(); ++i) {
      const std::size_t top = argmax(z.row(i));
      if (z(i, top) > cfg.confidence_threshold) {
        labels[i] = static_cast<int>(top);
        selected.push_back(i);
        selected_bits.set(i, top);
      }
    }
    ++s.trace.gather_events;
    if (selected.empty()) {
      // The model is unchanged, so every later round would select nothing too.
      s.trace.warnings.push_back("confidence: no node exceeds threshold " +
                                 format_double(cfg.confidence_threshold) +
                                 "; skipping the remaining rounds");
      break;
    }
    const std::size_t round = std::min(cfg.round_epochs, cfg.epochs - done);
    s.fit_ce(labels, selected, round, Phase::kMain);
    done += round;
  }
  return s.finish(start, std::move(selected_bits));
}

void write_trace_csv(const TrainTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "epoch,train_loss,val_acc,regathered\n";
  for (const auto& r : trace.epochs)
    out << r.epoch << ',' << format_double(r.train_loss) << ',' << format_double(r.val_accuracy) << ','
        << (r.regathered ? 1 : 0) << '\n';
}

}  // namespace legnn
