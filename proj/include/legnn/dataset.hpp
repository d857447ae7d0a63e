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
#include <string>
#include <vector>

#include "legnn/dense.hpp"
#include "legnn/graph.hpp"
#include "legnn/noise.hpp"

namespace legnn {

struct Splits {
  std::vector<std::size_t> train;
  std::vector<std::size_t> val;
  std::vector<std::size_t> test;

  friend bool operator==(const Splits&, const Splits&) = default;
};

struct DatasetMeta {
  std::string name;
  std::size_t num_nodes = 0;
  std::size_t num_features = 0;
  std::size_t num_classes = 0;

  friend bool operator==(const DatasetMeta&, const DatasetMeta&) = default;
};

struct DatasetBundle {
  DatasetMeta meta;
  std::vector<Edge> edges;  // undirected, each stored once, src < dst
  SparseGraph graph;        // normalized
  DenseMatrix features;
  LabelSet clean_labels;
  Splits splits;

  friend bool operator==(const DatasetBundle&, const DatasetBundle&) = default;
};

// Assembles graph and validates every invariant, listing all violations.
DatasetBundle make_bundle(DatasetMeta meta, std::vector<Edge> edges, DenseMatrix features,
                          LabelSet clean, Splits splits);

// Reads meta.json, edges.tsv, features.csv, labels.csv and splits.json.
DatasetBundle load_dataset(const std::filesystem::path& dir);
void write_dataset(const DatasetBundle& bundle, const std::filesystem::path& dir);

std::vector<Edge> read_edges_tsv(const std::filesystem::path& path);
void write_edges_tsv(const std::vector<Edge>& edges, const std::filesystem::path& path);

// One class id per line, -1 for unlabeled.
std::vector<int> read_label_column(const std::filesystem::path& path);
void write_label_column(const std::vector<int>& labels, const std::filesystem::path& path);

struct SbmParams {
  std::size_t num_classes = 5;
  std::size_t nodes_per_class = 100;
  double p_in = 0.05;
  double p_out = 0.005;
  std::size_t feature_dim = 32;
  double feature_shift = 1.0;
  double train_fraction = 0.05;
  double val_fraction = 0.15;
  std::uint64_t seed = 0;
};

// Planted-partition graph with per-class stratified splits; class c has mean shift/sqrt(2) * e_c so distinct
// class means are `feature_shift` apart, plus unit Gaussian noise.
DatasetBundle gen_sbm(const SbmParams& params);

// Random train/val/test partition with the given fractions (rounded).
Splits random_splits(std::size_t num_nodes, double train_fraction, double val_fraction, Rng& rng);

// Shortest round-trip decimal.
std::string format_double(double value);

}  // namespace legnn
