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
#include <utility>
#include <vector>

#include "legnn/dense.hpp"
#include "legnn/error.hpp"
#include "legnn/rng.hpp"

namespace legnn {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Compressed sparse row adjacency. Row i lists the entries aggregated into
// node i; column indices are strictly increasing within a row.
class SparseGraph {
 public:
  SparseGraph() = default;
  SparseGraph(std::size_t num_nodes, std::vector<std::size_t> row_offsets,
              std::vector<NodeId> col_indices, std::vector<double> values);

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_entries() const { return col_indices_.size(); }

  const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
  const std::vector<NodeId>& col_indices() const { return col_indices_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }

  std::span<const NodeId> neighbors(std::size_t row) const {
    return {col_indices_.data() + row_offsets_[row], row_offsets_[row + 1] - row_offsets_[row]};
  }
  std::size_t row_degree(std::size_t row) const {
    return row_offsets_[row + 1] - row_offsets_[row];
  }

  // Position of entry (row, col) in the CSR arrays, or npos.
  std::size_t find(std::size_t row, std::size_t col) const;
  // Weight of (row, col), 0 when the entry is absent.
  double value(std::size_t row, std::size_t col) const;
  bool has_self_loops() const;
  // Number of undirected non-self edges, assuming the structure is symmetric.
  std::size_t num_undirected_edges() const;

  // Throws ValidationError when the CSR arrays are not canonical.
  void check_invariants() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const SparseGraph&, const SparseGraph&) = default;

 private:
  std::size_t num_nodes_ = 0;
  std::vector<std::size_t> row_offsets_{0};
  std::vector<NodeId> col_indices_;
  std::vector<double> values_;
};

// Builds A + I in canonical CSR from an undirected edge list. Both directions
// of every edge are stored, values start at 1. Duplicate edges (in either
// orientation) and explicit self-loops are dropped with a warning.
SparseGraph build_graph(std::span<const Edge> edges, std::size_t num_nodes,
                        const WarningSink& warn = stderr_warning);

// Symmetric normalization D^-1/2 (A + I) D^-1/2 where the degree of a node is
// its entry count (structure only), so the operation is idempotent.
SparseGraph normalize(const SparseGraph& graph);

// Dense copy, used by tests and small-instance oracles.
DenseMatrix to_dense(const SparseGraph& graph);

// y = graph * x
DenseMatrix spmm(const SparseGraph& graph, const DenseMatrix& x);
// y = graph^T * x
DenseMatrix spmm_transpose(const SparseGraph& graph, const DenseMatrix& x);

enum class MaskMode {
  // Each node drops a fraction of its own incoming entries; views may be
  // structurally asymmetric.
  kDirected,
  // Each node chooses neighbors the same way but the edge is removed in both
  // directions.
  kUndirected,
};

// A bootstrapped view of a base graph. `kept` is aligned with the base CSR
// entries; `view` is the compacted, renormalized operator used for inference.
struct MaskedGraph {
  const SparseGraph* base = nullptr;
  std::vector<std::uint8_t> kept;
  SparseGraph view;

  const std::vector<double>& values() const { return view.values(); }
  // Number of removed non-self entries in row `node`.
  std::size_t removed_in_row(std::size_t node) const;
};

// Entries to drop for a node with `degree` non-self neighbors.
std::size_t masked_count(double rate, std::size_t degree);

// Per node, removes masked_count(rate, deg) non-self entries chosen uniformly
// without replacement. Self-loops always survive.
MaskedGraph mask_random(const SparseGraph& graph, double rate, Rng& rng,
                        MaskMode mode = MaskMode::kDirected);

// Per node, removes the masked_count(rate, deg) neighbors closest in Euclidean
// feature distance; ties go to the lower node index.
MaskedGraph mask_nearest(const SparseGraph& graph, const DenseMatrix& features, double rate,
                         MaskMode mode = MaskMode::kDirected);

// The unmasked view (every entry kept), renormalized.
MaskedGraph mask_none(const SparseGraph& graph);

}  // namespace legnn
