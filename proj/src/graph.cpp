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

#include "legnn/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace legnn {

SparseGraph::SparseGraph(std::size_t num_nodes, std::vector<std::size_t> row_offsets,
                         std::vector<NodeId> col_indices, std::vector<double> values)
    : num_nodes_(num_nodes),
      row_offsets_(std::move(row_offsets)),
      col_indices_(std::move(col_indices)),
      values_(std::move(values)) {
  check_invariants();
}

void SparseGraph::check_invariants() const {
  if (row_offsets_.size() != num_nodes_ + 1 || row_offsets_.front() != 0)
    throw ValidationError("SparseGraph: row_offsets must have N+1 entries starting at 0");
  if (row_offsets_.back() != col_indices_.size() || col_indices_.size() != values_.size())
    throw ValidationError("SparseGraph: row_offsets[N], col_indices and values disagree in length");
  for (std::size_t i = 0; i < num_nodes_; ++i) {
    if (row_offsets_[i] > row_offsets_[i + 1])
      throw ValidationError("SparseGraph: row_offsets decreases at row " + std::to_string(i));
    for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) {
      if (col_indices_[p] >= num_nodes_)
        throw ValidationError("SparseGraph: column out of range in row " + std::to_string(i));
      if (p > row_offsets_[i] && col_indices_[p - 1] >= col_indices_[p])
        throw ValidationError("SparseGraph: columns not strictly increasing in row " +
                              std::to_string(i));
    }
  }
}

std::size_t SparseGraph::find(std::size_t row, std::size_t col) const {
  const auto first = col_indices_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row]);
  const auto last = col_indices_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row + 1]);
  const auto it = std::lower_bound(first, last, static_cast<NodeId>(col));
  if (it == last || *it != col) return npos;
  return static_cast<std::size_t>(it - col_indices_.begin());
}

double SparseGraph::value(std::size_t row, std::size_t col) const {
  const std::size_t p = find(row, col);
  return p == npos ? 0.0 : values_[p];
}

bool SparseGraph::has_self_loops() const {
  for (std::size_t i = 0; i < num_nodes_; ++i)
    if (find(i, i) == npos) return false;
  return true;
}

std::size_t SparseGraph::num_undirected_edges() const {
  std::size_t off_diagonal = 0;
  for (std::size_t i = 0; i < num_nodes_; ++i)
    for (NodeId j : neighbors(i))
      if (j != i) ++off_diagonal;
  return off_diagonal / 2;
}

SparseGraph build_graph(std::span<const Edge> edges, std::size_t num_nodes, const WarningSink& warn) {
  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  std::size_t self_loops = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u >= num_nodes || v >= num_nodes)
      throw ValidationError("edge " + std::to_string(e) + " (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") has an endpoint >= num_nodes " +
                            std::to_string(num_nodes));
    if (u == v) {
      ++self_loops;
      continue;
    }
    canonical.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canonical.begin(), canonical.end());
  const std::size_t before = canonical.size();
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());
  const std::size_t duplicates = before - canonical.size();
  if (duplicates > 0 && warn)
    warn("removed " + std::to_string(duplicates) + " duplicate edge(s)");
  if (self_loops > 0 && warn)
    warn("ignored " + std::to_string(self_loops) + " explicit self-loop(s); A + I adds them");

  std::vector<std::size_t> degree(num_nodes, 1);
  for (auto [u, v] : canonical) {
    ++degree[u];
    ++degree[v];
  }
  std::vector<std::size_t> offsets(num_nodes + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets.begin() + 1);
  std::vector<NodeId> cols(offsets.back());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t i = 0; i < num_nodes; ++i) cols[cursor[i]++] = static_cast<NodeId>(i);
  for (auto [u, v] : canonical) {
    cols[cursor[u]++] = v;
    cols[cursor[v]++] = u;
  }
  for (std::size_t i = 0; i < num_nodes; ++i)
    std::sort(cols.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
              cols.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
  std::vector<double> values(cols.size(), 1.0);
  return SparseGraph(num_nodes, std::move(offsets), std::move(cols), std::move(values));
}

SparseGraph normalize(const SparseGraph& graph) {
  const std::size_t n = graph.num_nodes();
  std::vector<double> inv_sqrt(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (graph.find(i, i) == SparseGraph::npos)
      throw ValidationError("normalize: node " + std::to_string(i) + " has no self-loop");
    inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(graph.row_degree(i)));
  }
  SparseGraph out = graph;
  auto& values = out.mutable_values();
  const auto& offsets = graph.row_offsets();
  const auto& cols = graph.col_indices();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = offsets[i]; p < offsets[i + 1]; ++p)
      values[p] = inv_sqrt[i] * inv_sqrt[cols[p]];
  return out;
}

DenseMatrix to_dense(const SparseGraph& graph) {
  DenseMatrix out(graph.num_nodes(), graph.num_nodes());
  const auto& offsets = graph.row_offsets();
  for (std::size_t i = 0; i < graph.num_nodes(); ++i)
    for (std::size_t p = offsets[i]; p < offsets[i + 1]; ++p)
      out(i, graph.col_indices()[p]) = graph.values()[p];
  return out;
}

DenseMatrix spmm(const SparseGraph& graph, const DenseMatrix& x) {
  if (x.rows() != graph.num_nodes()) throw ValidationError("spmm: row count differs from graph size");
  DenseMatrix out(x.rows(), x.cols());
  const auto& offsets = graph.row_offsets();
  const auto& cols = graph.col_indices();
  const auto& vals = graph.values();
  const std::size_t width = x.cols();
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    double* o = out.row(i).data();
    for (std::size_t p = offsets[i]; p < offsets[i + 1]; ++p) {
      const double w = vals[p];
      const double* src = x.row(cols[p]).data();
      for (std::size_t c = 0; c < width; ++c) o[c] += w * src[c];
    }
  }
  return out;
}

DenseMatrix spmm_transpose(const SparseGraph& graph, const DenseMatrix& x) {
  if (x.rows() != graph.num_nodes())
    throw ValidationError("spmm_transpose: row count differs from graph size");
  DenseMatrix out(x.rows(), x.cols());
  const auto& offsets = graph.row_offsets();
  const auto& cols = graph.col_indices();
  const auto& vals = graph.values();
  const std::size_t width = x.cols();
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    const double* src = x.row(i).data();
    for (std::size_t p = offsets[i]; p < offsets[i + 1]; ++p) {
      const double w = vals[p];
      double* o = out.row(cols[p]).data();
      for (std::size_t c = 0; c < width; ++c) o[c] += w * src[c];
    }
  }
  return out;
}

std::size_t MaskedGraph::removed_in_row(std::size_t node) const {
  std::size_t removed = 0;
  const auto& offsets = base->row_offsets();
  for (std::size_t p = offsets[node]; p < offsets[node + 1]; ++p)
    if (!kept[p] && base->col_indices()[p] != node) ++removed;
  return removed;
}

std::size_t masked_count(double rate, std::size_t degree) {
  if (!(rate >= 0.0 && rate < 1.0)) throw ValidationError("mask rate must lie in [0, 1)");
  const auto r = static_cast<std::size_t>(std::lround(rate * static_cast<double>(degree)));
  return std::min(r, degree);
}

namespace {

MaskedGraph compact(const SparseGraph& base, std::vector<std::uint8_t> kept) {
  const std::size_t n = base.num_nodes();
  const auto& offsets = base.row_offsets();
  std::vector<std::size_t> new_offsets(n + 1, 0);
  std::vector<NodeId> cols;
  cols.reserve(base.num_entries());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = offsets[i]; p < offsets[i + 1]; ++p)
      if (kept[p]) cols.push_back(base.col_indices()[p]);
    new_offsets[i + 1] = cols.size();
  }
  std::vector<double> values(cols.size(), 1.0);
  SparseGraph structure(n, std::move(new_offsets), std::move(cols), std::move(values));
  return MaskedGraph{&base, std::move(kept), normalize(structure)};
}

// Base positions of the non-self entries of `row`.
std::vector<std::size_t> non_self_positions(const SparseGraph& graph, std::size_t row) {
  std::vector<std::size_t> out;
  const auto& offsets = graph.row_offsets();
  for (std::size_t p = offsets[row]; p < offsets[row + 1]; ++p)
    if (graph.col_indices()[p] != row) out.push_back(p);
  return out;
}

void drop(const SparseGraph& graph, std::vector<std::uint8_t>& kept, std::size_t row,
          std::size_t position, MaskMode mode) {
  kept[position] = 0;
  if (mode == MaskMode::kUndirected) {
    const std::size_t mirror = graph.find(graph.col_indices()[position], row);
    if (mirror != SparseGraph::npos) kept[mirror] = 0;
  }
}

}  // namespace

MaskedGraph mask_random(const SparseGraph& graph, double rate, Rng& rng, MaskMode mode) {
  std::vector<std::uint8_t> kept(graph.num_entries(), 1);
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    auto positions = non_self_positions(graph, i);
    const std::size_t remove = masked_count(rate, positions.size());
    // Partial Fisher-Yates: the first `remove` slots become a uniform sample.
    for (std::size_t k = 0; k < remove; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, positions.size() - 1);
      std::swap(positions[k], positions[pick(rng)]);
      drop(graph, kept, i, positions[k], mode);
    }
  }
  return compact(graph, std::move(kept));
}

MaskedGraph mask_nearest(const SparseGraph& graph, const DenseMatrix& features, double rate,
                         MaskMode mode) {
  if (features.rows() != graph.num_nodes())
    throw ValidationError("mask_nearest: feature rows (" + std::to_string(features.rows()) +
                          ") differ from node count (" + std::to_string(graph.num_nodes()) + ")");
  std::vector<std::uint8_t> kept(graph.num_entries(), 1);
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    auto positions = non_self_positions(graph, i);
    const std::size_t remove = masked_count(rate, positions.size());
    if (remove == 0) continue;
    std::vector<std::pair<double, NodeId>> ranked;
    ranked.reserve(positions.size());
    const auto xi = features.row(i);
    for (std::size_t p : positions) {
      const NodeId j = graph.col_indices()[p];
      const auto xj = features.row(j);
      double d2 = 0.0;
      for (std::size_t c = 0; c < xi.size(); ++c) d2 += (xi[c] - xj[c]) * (xi[c] - xj[c]);
      ranked.emplace_back(d2, j);
    }
    std::sort(ranked.begin(), ranked.end());
    for (std::size_t k = 0; k < remove; ++k) drop(graph, kept, i, graph.find(i, ranked[k].second), mode);
  }
  return compact(graph, std::move(kept));
}

MaskedGraph mask_none(const SparseGraph& graph) {
  return compact(graph, std::vector<std::uint8_t>(graph.num_entries(), 1));
}

}  // namespace legnn
