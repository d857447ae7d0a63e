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
#include <optional>
#include <string>
#include <vector>

#include "legnn/dataset.hpp"
#include "legnn/ensemble.hpp"
#include "legnn/gcn.hpp"
#include "legnn/graph.hpp"
#include "legnn/noise.hpp"

namespace legnn {

struct TrainConfig {
  std::size_t epochs = 200;
  // CE epochs used to initialize LEGNN, Propagation and Confidence.
  std::size_t warmup_epochs = 50;
  GcnHyper hyper;
  double mask_rate = 0.5;
  std::size_t mask_iterations = 15;
  std::uint64_t seed = 0;
  MaskStrategy mask_strategy = MaskStrategy::kRandom;
  MaskMode mask_mode = MaskMode::kDirected;
  WeightRule weight_rule = WeightRule::kCandidateNormalized;
  bool use_negative_loss = true;
  // LEGNN re-gathers after this many consecutive epochs below the best val
  // accuracy; 1 re-gathers on every decline.
  std::size_t regather_patience = 1;
  // Weight of the noisy-label CE term added to the partial-label loss after
  // warmup; 0 trains on gathered labels alone.
  double anchor_weight = 1.0;
  // Propagation / Confidence retrain for this many epochs between label updates.
  std::size_t round_epochs = 10;
  double confidence_threshold = 0.99;

  void check() const;
};

enum class Phase { kWarmup, kMain };

struct EpochRecord {
  std::size_t epoch = 0;
  Phase phase = Phase::kMain;
  double train_loss = 0.0;
  double val_accuracy = 0.0;
  bool regathered = false;
};

struct TrainTrace {
  std::vector<EpochRecord> epochs;
  double best_val_accuracy = 0.0;
  std::size_t best_epoch = 0;  // 0 only when no epoch was trained
  // First epoch eligible for best-val selection: 1 for plain training, the
  // first main-phase epoch after a warmup.
  std::size_t selection_start = 1;
  std::size_t gather_events = 0;
  double gather_seconds = 0.0;
  double total_seconds = 0.0;
  std::vector<std::string> warnings;
};

struct TrainResult {
  GcnModel model;        // best-validation snapshot
  GcnModel final_model;  // weights after the last epoch
  TrainTrace trace;
  // Candidate labels of the last gathering (LEGNN), propagation round
  // (Propagation) or confident selection (Confidence).
  std::optional<MultiLabelMatrix> gathered;
};

// Inputs shared by every trainer. `noisy` holds labels on train and val nodes;
// clean labels are never passed in.
struct TrainInputs {
  const SparseGraph& graph;  // normalized
  const DenseMatrix& features;
  const LabelSet& noisy;
  const Splits& splits;
};

// Plain full-batch GCN with cross-entropy on the train split. epochs == 0
// returns the initialization.
TrainResult train_gcn_ce(const TrainInputs& in, const TrainConfig& cfg);

// CE warmup, bootstrapped label gathering, then the weighted bidirectional
// loss over all nodes (plus the anchor term); re-gathers once validation
// accuracy has stayed below the running best for `regather_patience` epochs.
TrainResult train_legnn(const TrainInputs& in, const TrainConfig& cfg);

// Multi-labels are the union of neighbors' current labels; after each round
// every node's label becomes the model argmax.
TrainResult train_propagation(const TrainInputs& in, const TrainConfig& cfg);

// Retrains with CE on nodes whose top probability exceeds the threshold.
TrainResult train_confidence(const TrainInputs& in, const TrainConfig& cfg);

// Fraction of `nodes` whose argmax prediction equals `labels` (present labels only).
double label_accuracy(const DenseMatrix& probs, const LabelSet& labels,
                      const std::vector<std::size_t>& nodes);

// Propagation candidate sets: union of present neighbor labels (self excluded),
// falling back to the node's own label when no neighbor is labeled.
MultiLabelMatrix neighbor_label_union(const SparseGraph& graph, const std::vector<int>& labels,
                                      std::size_t num_classes);

void write_trace_csv(const TrainTrace& trace, const std::filesystem::path& path);

}  // namespace legnn
