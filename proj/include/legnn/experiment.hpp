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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "legnn/dataset.hpp"
#include "legnn/metrics.hpp"
#include "legnn/noise.hpp"
#include "legnn/trainers.hpp"

namespace legnn {

enum class Method {
  kGcn,               // backbone with cross-entropy
  kLegnn,             // full method
  kLegnnNoNegative,   // without the low-probability term
  kLabelCorrection,   // without gathering: one unmasked view
  kLabelCorrectionPositive,  // without gathering and without the low-probability term
  kLegnnNearest,      // nearest-neighbor masking
  kPropagation,
  kConfidence,
};

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

// Applies the method's fixed overrides (e.g. one view for label correction).
TrainConfig configure_method(Method method, TrainConfig cfg);
TrainResult run_method(Method method, const TrainInputs& in, const TrainConfig& cfg);

// Noisy labels for train and val nodes; test nodes are left unlabeled.
LabelSet inject_noise(const DatasetBundle& data, const NoiseSpec& spec, std::uint64_t seed);

TrainConfig train_config_from_json(const nlohmann::json& j, TrainConfig base = {});
nlohmann::json to_json(const TrainConfig& cfg);

struct ExperimentConfig {
  std::optional<std::filesystem::path> dataset_dir;
  std::optional<SbmParams> sbm;
  std::vector<Method> methods;
  NoiseSpec noise;  // num_classes filled from the dataset
  std::vector<std::uint64_t> seeds{0};
  TrainConfig train;
  // Each key names a TrainConfig field; the cartesian product is run.
  nlohmann::json grid = nlohmann::json::object();
  MetricSplit metric_split = MetricSplit::kUnlabeled;
  bool label_quality = false;
};

ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentConfig& cfg);

struct SeedRun {
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  double test_accuracy = 0.0;
  double val_accuracy = 0.0;  // best noisy validation accuracy
  double seconds = 0.0;
  double gather_seconds = 0.0;
  std::optional<LabelQuality> quality;
};

struct RunResult {
  Method method = Method::kGcn;
  nlohmann::json params = nlohmann::json::object();
  std::vector<SeedRun> runs;
  double test_mean = 0.0;
  double test_std = 0.0;
  double val_mean = 0.0;
  double seconds_mean = 0.0;
  double gather_seconds_mean = 0.0;
  std::optional<LabelQuality> quality;  // mean over successful seeds
  bool selected = false;  // best grid point for this method by validation accuracy
};

// Mean and population standard deviation.
std::pair<double, double> mean_std(const std::vector<double>& values);

std::vector<RunResult> run_experiment(const ExperimentConfig& cfg, const DatasetBundle& data);
// Loads the dataset named in the config (or generates the SBM) and runs it.
std::vector<RunResult> run_experiment(const std::filesystem::path& config_file);

nlohmann::json results_to_json(const ExperimentConfig& cfg, const std::vector<RunResult>& results);
void write_results(const ExperimentConfig& cfg, const std::vector<RunResult>& results,
                   const std::filesystem::path& out_dir);

struct OverheadReport {
  double backbone_seconds = 0.0;  // median
  double legnn_seconds = 0.0;     // median
  double gather_seconds = 0.0;    // median of one gathering event
  double ratio = 0.0;             // legnn / backbone
  std::size_t gather_events = 0;
};

// Median-of-`repeats` wall times of CE training, LEGNN training and one
// gathering event on `data` with labels corrupted by `noise`. Dataset loading
// is excluded.
OverheadReport bench_overhead(const DatasetBundle& data, const TrainConfig& cfg,
                              const NoiseSpec& noise, std::size_t repeats = 3);

struct ScalingPoint {
  std::size_t edges = 0;
  std::size_t views = 0;
  double gather_seconds = 0.0;
};

struct ScalingReport {
  std::vector<ScalingPoint> by_edges;  // fixed views, growing graphs
  std::vector<ScalingPoint> by_views;  // fixed graph, views and 2x views
  // (t_{k+1} / t_k) / (|E|_{k+1} / |E|_k) for consecutive sizes.
  std::vector<double> edge_ratio_of_ratios;
  double views_ratio = 0.0;
};

// Gathering time on SBMs with about `target_edges` edges each (average degree
// fixed), and with the view count doubled on the first graph.
ScalingReport bench_scaling(const std::vector<std::size_t>& target_edges, std::size_t views,
                            const TrainConfig& cfg, std::size_t feature_dim = 16,
                            std::size_t repeats = 3);

nlohmann::json to_json(const OverheadReport& report);
nlohmann::json to_json(const ScalingReport& report);

}  // namespace legnn
