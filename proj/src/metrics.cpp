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

#include "legnn/metrics.hpp"

#include <string>

#include "legnn/error.hpp"

namespace legnn {

namespace {

void check_nodes(const LabelSet& clean, std::span<const std::size_t> index_set, const char* what) {
  if (index_set.empty()) throw ValidationError(std::string(what) + ": empty node set");
  for (std::size_t i : index_set) {
    if (i >= clean.size() || !clean.has(i))
      throw ValidationError(std::string(what) + ": node " + std::to_string(i) +
                            " has no clean label");
  }
}

std::size_t hits(const MultiLabelMatrix& yp, const LabelSet& clean,
                 std::span<const std::size_t> index_set) {
  std::size_t n = 0;
  for (std::size_t i : index_set) n += yp.test(i, static_cast<std::size_t>(clean[i]));
  return n;
}

}  // namespace

double accuracy(std::span<const int> predictions, const LabelSet& clean,
                std::span<const std::size_t> index_set) {
  check_nodes(clean, index_set, "accuracy");
  std::size_t correct = 0;
  for (std::size_t i : index_set) correct += predictions[i] == clean[i];
  return static_cast<double>(correct) / static_cast<double>(index_set.size());
}

LabelQuality multilabel_prf(const MultiLabelMatrix& yp, const LabelSet& clean,
                            std::span<const std::size_t> index_set) {
  check_nodes(clean, index_set, "multilabel_prf");
  std::size_t set_bits = 0;
  for (std::size_t i : index_set) set_bits += yp.row_count(i);
  if (set_bits == 0) throw ValidationError("multilabel_prf: no labels are set on the node set");
  const double tp = static_cast<double>(hits(yp, clean, index_set));
  LabelQuality q;
  q.precision = tp / static_cast<double>(set_bits);
  q.recall = tp / static_cast<double>(index_set.size());
  q.f1 = (q.precision + q.recall) > 0.0 ? 2.0 * q.precision * q.recall / (q.precision + q.recall) : 0.0;
  q.coverage = clean_coverage(yp, clean, index_set);
  return q;
}

double clean_coverage(const MultiLabelMatrix& yp, const LabelSet& clean,
                      std::span<const std::size_t> index_set) {
  check_nodes(clean, index_set, "clean_coverage");
  return static_cast<double>(hits(yp, clean, index_set)) / static_cast<double>(index_set.size());
}

MetricSplit parse_metric_split(std::string_view text) {
  if (text == "all") return MetricSplit::kAll;
  if (text == "test") return MetricSplit::kTest;
  if (text == "unlabeled") return MetricSplit::kUnlabeled;
  throw ValidationError("unknown metric split '" + std::string(text) + "' (expected all|test|unlabeled)");
}

std::string_view to_string(MetricSplit split) {
  switch (split) {
    case MetricSplit::kAll: return "all";
    case MetricSplit::kTest: return "test";
    case MetricSplit::kUnlabeled: return "unlabeled";
  }
  return "unlabeled";
}

std::vector<std::size_t> metric_nodes(const Splits& splits, std::size_t num_nodes, MetricSplit split) {
  if (split == MetricSplit::kTest) return splits.test;
  std::vector<std::uint8_t> skip(num_nodes, 0);
  if (split == MetricSplit::kUnlabeled)
    for (std::size_t i : splits.train) skip[i] = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < num_nodes; ++i)
    if (!skip[i]) out.push_back(i);
  return out;
}

}  // namespace legnn
