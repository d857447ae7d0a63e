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
#include <span>
#include <string_view>
#include <vector>

#include "legnn/dataset.hpp"
#include "legnn/ensemble.hpp"
#include "legnn/noise.hpp"

namespace legnn {

struct LabelQuality {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double coverage = 0.0;
};

double accuracy(std::span<const int> predictions, const LabelSet& clean,
                std::span<const std::size_t> index_set);

// Each set bit counts as one predicted label: precision = hits / set bits,
// recall = hits / |index_set|.
LabelQuality multilabel_prf(const MultiLabelMatrix& yp, const LabelSet& clean,
                            std::span<const std::size_t> index_set);

// Fraction of nodes whose clean label is among the candidates.
double clean_coverage(const MultiLabelMatrix& yp, const LabelSet& clean,
                      std::span<const std::size_t> index_set);

enum class MetricSplit {
  kAll,        // every node
  kTest,       // test split
  kUnlabeled,  // every node outside the train split
};

MetricSplit parse_metric_split(std::string_view text);
std::string_view to_string(MetricSplit split);
std::vector<std::size_t> metric_nodes(const Splits& splits, std::size_t num_nodes, MetricSplit split);

}  // namespace legnn
