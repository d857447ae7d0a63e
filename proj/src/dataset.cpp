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

#include "legnn/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "legnn/error.hpp"

namespace legnn {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw NumericalError("format_double: conversion failed");
  return std::string(buf, end);
}

namespace {

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) {
    if (!out.empty()) out += '\n';
    out += l;
  }
  return out;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::size_t> index_list(const json& j, const char* key, std::vector<std::string>& errors) {
  std::vector<std::size_t> out;
  if (!j.contains(key) || !j[key].is_array()) {
    errors.push_back(std::string("splits.json: missing array '") + key + "'");
    return out;
  }
  for (const auto& v : j[key]) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      errors.push_back(std::string("splits.json: '") + key + "' holds a non-index value");
      continue;
    }
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

}  // namespace

std::vector<Edge> read_edges_tsv(const fs::path& path) {
  auto in = open_input(path);
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const auto tab = line.find('\t');
    NodeId u = 0, v = 0;
    if (tab == std::string::npos || !parse_number(std::string_view(line).substr(0, tab), u) ||
        !parse_number(std::string_view(line).substr(tab + 1), v))
      throw ValidationError(path.filename().string() + " line " + std::to_string(line_no) +
                            ": expected \"src<TAB>dst\"");
    edges.emplace_back(u, v);
  }
  return edges;
}

void write_edges_tsv(const std::vector<Edge>& edges, const fs::path& path) {
  auto out = open_output(path);
  for (auto [u, v] : edges) out << u << '\t' << v << '\n';
}

std::vector<int> read_label_column(const fs::path& path) {
  auto in = open_input(path);
  std::vector<int> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    int y = 0;
    if (!parse_number(std::string_view(line), y))
      throw ValidationError(path.filename().string() + " line " + std::to_string(line_no) +
                            ": not an integer class id");
    labels.push_back(y);
  }
  return labels;
}

void write_label_column(const std::vector<int>& labels, const fs::path& path) {
  auto out = open_output(path);
  for (int y : labels) out << y << '\n';
}

DatasetBundle make_bundle(DatasetMeta meta, std::vector<Edge> edges, DenseMatrix features,
                          LabelSet clean, Splits splits) {
  std::vector<std::string> errors;
  const std::size_t n = meta.num_nodes;
  if (meta.num_classes < 2) errors.push_back("meta: num_classes must be at least 2");
  if (features.rows() != n)
    errors.push_back("features: " + std::to_string(features.rows()) + " rows, expected " +
                     std::to_string(n));
  if (features.cols() != meta.num_features)
    errors.push_back("features: " + std::to_string(features.cols()) + " columns, expected " +
                     std::to_string(meta.num_features));
  if (!features.all_finite()) errors.push_back("features: non-finite value");
  if (clean.size() != n)
    errors.push_back("labels: " + std::to_string(clean.size()) + " lines, expected " +
                     std::to_string(n));
  clean.num_classes = meta.num_classes;
  clean.role = LabelRole::kClean;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    const int y = clean[i];
    if (y < 0 || static_cast<std::size_t>(y) >= meta.num_classes)
      errors.push_back("labels.csv line " + std::to_string(i + 1) + ": class id " + std::to_string(y) +
                       " outside [0, " + std::to_string(meta.num_classes) + ")");
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e].first >= n || edges[e].second >= n)
      errors.push_back("edges.tsv line " + std::to_string(e + 1) + ": endpoint >= num_nodes " +
                       std::to_string(n));
  std::vector<int> owner(n, -1);
  const std::pair<const char*, const std::vector<std::size_t>*> parts[] = {
      {"train", &splits.train}, {"val", &splits.val}, {"test", &splits.test}};
  for (int s = 0; s < 3; ++s) {
    for (std::size_t i : *parts[s].second) {
      if (i >= n) {
        errors.push_back(std::string("splits: ") + parts[s].first + " index " + std::to_string(i) +
                         " >= num_nodes " + std::to_string(n));
        continue;
      }
      if (owner[i] != -1) {
        errors.push_back(std::string("splits: node ") + std::to_string(i) + " appears in both " +
                         parts[owner[i]].first + " and " + parts[s].first);
        continue;
      }
      owner[i] = s;
    }
  }
  if (!errors.empty()) throw ValidationError("invalid dataset:\n" + join(errors));

  DatasetBundle b;
  b.graph = normalize(build_graph(edges, n));
  b.meta = std::move(meta);
  b.edges = std::move(edges);
  b.features = std::move(features);
  b.clean_labels = std::move(clean);
  b.splits = std::move(splits);
  return b;
}

DatasetBundle load_dataset(const fs::path& dir) {
  std::vector<std::string> missing;
  for (const char* name : {"meta.json", "edges.tsv", "features.csv", "labels.csv", "splits.json"})
    if (!fs::exists(dir / name)) missing.push_back("missing file " + (dir / name).string());
  if (!missing.empty()) throw ValidationError("invalid dataset:\n" + join(missing));

  DatasetMeta meta;
  try {
    const json j = json::parse(open_input(dir / "meta.json"));
    meta.name = j.value("name", dir.filename().string());
    meta.num_nodes = j.at("num_nodes").get<std::size_t>();
    meta.num_features = j.at("num_features").get<std::size_t>();
    meta.num_classes = j.at("num_classes").get<std::size_t>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("meta.json: ") + e.what());
  }

  std::vector<std::string> errors;
  DenseMatrix features(meta.num_nodes, meta.num_features);
  {
    auto in = open_input(dir / "features.csv");
    std::string line;
    std::size_t row = 0, line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (blank(line)) continue;
      if (row >= meta.num_nodes) {
        ++row;
        continue;
      }
      std::size_t col = 0;
      std::size_t start = 0;
      bool ok = true;
      while (start <= line.size()) {
        const auto comma = std::min(line.find(',', start), line.size());
        double v = 0.0;
        if (col >= meta.num_features || !parse_number(std::string_view(line).substr(start, comma - start), v)) {
          ok = false;
          break;
        }
        features(row, col++) = v;
        start = comma + 1;
      }
      if (!ok || col != meta.num_features)
        errors.push_back("features.csv line " + std::to_string(line_no) + ": expected " +
                         std::to_string(meta.num_features) + " comma-separated numbers");
      ++row;
    }
    if (row != meta.num_nodes)
      errors.push_back("features.csv: " + std::to_string(row) + " rows, expected " +
                       std::to_string(meta.num_nodes));
  }

  std::vector<Edge> edges;
  LabelSet clean;
  Splits splits;
  try {
    edges = read_edges_tsv(dir / "edges.tsv");
  } catch (const ValidationError& e) {
    errors.push_back(e.what());
  }
  try {
    clean.labels = read_label_column(dir / "labels.csv");
  } catch (const ValidationError& e) {
    errors.push_back(e.what());
  }
  try {
    const json j = json::parse(open_input(dir / "splits.json"));
    splits.train = index_list(j, "train", errors);
    splits.val = index_list(j, "val", errors);
    splits.test = index_list(j, "test", errors);
  } catch (const json::exception& e) {
    errors.push_back(std::string("splits.json: ") + e.what());
  }
  if (!errors.empty()) throw ValidationError("invalid dataset:\n" + join(errors));
  return make_bundle(std::move(meta), std::move(edges), std::move(features), std::move(clean),
                     std::move(splits));
}

void write_dataset(const DatasetBundle& b, const fs::path& dir) {
  fs::create_directories(dir);
  {
    json meta = {{"name", b.meta.name},
                 {"num_nodes", b.meta.num_nodes},
                 {"num_features", b.meta.num_features},
                 {"num_classes", b.meta.num_classes}};
    open_output(dir / "meta.json") << meta.dump(2) << '\n';
  }
  write_edges_tsv(b.edges, dir / "edges.tsv");
  {
    auto out = open_output(dir / "features.csv");
    for (std::size_t i = 0; i < b.features.rows(); ++i) {
      const auto row = b.features.row(i);
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << ',';
        out << format_double(row[c]);
      }
      out << '\n';
    }
  }
  write_label_column(b.clean_labels.labels, dir / "labels.csv");
  {
    json splits = {{"train", b.splits.train}, {"val", b.splits.val}, {"test", b.splits.test}};
    open_output(dir / "splits.json") << splits.dump() << '\n';
  }
}

Splits random_splits(std::size_t num_nodes, double train_fraction, double val_fraction, Rng& rng) {
  if (train_fraction <= 0.0 || val_fraction < 0.0 || train_fraction + val_fraction >= 1.0)
    throw ValidationError("random_splits: fractions must be positive and sum below 1");
  std::vector<std::size_t> order(num_nodes);
  for (std::size_t i = 0; i < num_nodes; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  const auto n = static_cast<double>(num_nodes);
  const auto n_train = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(train_fraction * n)));
  const auto n_val = static_cast<std::size_t>(std::lround(val_fraction * n));
  Splits s;
  s.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
  s.val.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train),
               order.begin() + static_cast<std::ptrdiff_t>(std::min(num_nodes, n_train + n_val)));
  s.test.assign(order.begin() + static_cast<std::ptrdiff_t>(std::min(num_nodes, n_train + n_val)),
                order.end());
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.val.begin(), s.val.end());
  std::sort(s.test.begin(), s.test.end());
  return s;
}

namespace {

// Visits every pair index in [0, total) independently with probability p by
// skipping geometrically distributed gaps.
template <typename Visit>
void bernoulli_indices(std::uint64_t total, double p, Rng& rng, Visit visit) {
  if (p <= 0.0 || total == 0) return;
  if (p >= 1.0) {
    for (std::uint64_t k = 0; k < total; ++k) visit(k);
    return;
  }
  const double log_q = std::log1p(-p);
  std::uint64_t k = 0;
  while (true) {
    const double u = 1.0 - uniform01(rng);  // (0, 1]
    const double gap = std::floor(std::log(u) / log_q);
    if (gap >= static_cast<double>(total - k)) return;
    k += static_cast<std::uint64_t>(gap);
    visit(k);
    if (++k >= total) return;
  }
}

}  // namespace

DatasetBundle gen_sbm(const SbmParams& p) {
  if (p.num_classes < 2) throw ValidationError("gen_sbm: need at least 2 classes");
  if (p.nodes_per_class < 2) throw ValidationError("gen_sbm: need at least 2 nodes per class");
  if (!(p.p_in > p.p_out && p.p_out >= 0.0 && p.p_in <= 1.0))
    throw ValidationError("gen_sbm: probabilities must satisfy 0 <= p_out < p_in <= 1");
  if (!(p.feature_shift > 0.0)) throw ValidationError("gen_sbm: feature_shift must be positive");
  if (p.feature_dim < p.num_classes)
    throw ValidationError("gen_sbm: feature_dim must be at least the number of classes");

  const std::size_t m = p.nodes_per_class;
  const std::size_t n = m * p.num_classes;
  Rng graph_rng = make_stream(p.seed, Stream::kGraph);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < p.num_classes; ++a) {
    for (std::size_t b = a; b < p.num_classes; ++b) {
      const auto base_a = static_cast<NodeId>(a * m);
      const auto base_b = static_cast<NodeId>(b * m);
      if (a == b) {
        // Upper triangle of an m x m block, row-major.
        std::uint64_t row = 0, row_start = 0;
        bernoulli_indices(m * (m - 1) / 2, p.p_in, graph_rng, [&](std::uint64_t k) {
          while (k >= row_start + (m - 1 - row)) {
            row_start += m - 1 - row;
            ++row;
          }
          const std::uint64_t col = row + 1 + (k - row_start);
          edges.emplace_back(base_a + static_cast<NodeId>(row), base_a + static_cast<NodeId>(col));
        });
      } else {
        bernoulli_indices(m * m, p.p_out, graph_rng, [&](std::uint64_t k) {
          edges.emplace_back(base_a + static_cast<NodeId>(k / m), base_b + static_cast<NodeId>(k % m));
        });
      }
    }
  }
  std::sort(edges.begin(), edges.end());

  Rng feature_rng = make_stream(p.seed, Stream::kFeatures);
  std::normal_distribution<double> noise(0.0, 1.0);
  DenseMatrix features(n, p.feature_dim);
  LabelSet clean{std::vector<int>(n), p.num_classes, LabelRole::kClean};
  const double mean = p.feature_shift / std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = i / m;
    clean.labels[i] = static_cast<int>(c);
    for (std::size_t f = 0; f < p.feature_dim; ++f)
      features(i, f) = noise(feature_rng) + (f == c ? mean : 0.0);
  }

  // Stratified: every class gets its share of train and val nodes.
  Rng split_rng = make_stream(p.seed, Stream::kSplit);
  Splits splits;
  for (std::size_t c = 0; c < p.num_classes; ++c) {
    Splits part = random_splits(m, p.train_fraction, p.val_fraction, split_rng);
    for (auto [dst, src] : {std::pair{&splits.train, &part.train}, {&splits.val, &part.val},
                            {&splits.test, &part.test}})
      for (std::size_t i : *src) dst->push_back(c * m + i);
  }
  std::ostringstream name;
  name << "sbm-c" << p.num_classes << "-m" << m << "-s" << p.seed;
  return make_bundle(DatasetMeta{name.str(), n, p.feature_dim, p.num_classes}, std::move(edges),
                     std::move(features), std::move(clean), std::move(splits));
}

}  // namespace legnn
