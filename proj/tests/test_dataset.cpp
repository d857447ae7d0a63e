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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

#include "legnn/dataset.hpp"
#include "legnn/error.hpp"

using namespace legnn;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("legnn_test_" + name + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_fixture(const fs::path& dir) {
  write(dir / "meta.json", R"({"name":"tiny","num_nodes":3,"num_features":2,"num_classes":2})");
  write(dir / "edges.tsv", "0\t1\n1\t2\n");
  write(dir / "features.csv", "1.0,0.0\n0.5,0.5\n0.0,1.0\n");
  write(dir / "labels.csv", "0\n0\n1\n");
  write(dir / "splits.json", R"({"train":[0],"val":[1],"test":[2]})");
}

std::string load_error(const fs::path& dir) {
  try {
    load_dataset(dir);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("experiment-cli") {

TEST_CASE("a well-formed three-node fixture loads") {
  TempDir t("fixture");
  write_fixture(t.path);
  const DatasetBundle b = load_dataset(t.path);
  CHECK(b.meta.num_nodes == 3);
  CHECK(b.graph.num_undirected_edges() == 2);
  CHECK(b.features(1, 1) == 0.5);
  CHECK(b.clean_labels.labels == std::vector<int>{0, 0, 1});
  CHECK(b.splits.test == std::vector<std::size_t>{2});
}

TEST_CASE("a label equal to C is rejected with its line number") {
  TempDir t("badlabel");
  write_fixture(t.path);
  write(t.path / "labels.csv", "0\n2\n1\n");
  const std::string err = load_error(t.path);
  CHECK(err.find("labels.csv") != std::string::npos);
  CHECK(err.find("line 2") != std::string::npos);
}

TEST_CASE("overlapping splits, bad edges and missing files are rejected") {
  TempDir t("bad");
  write_fixture(t.path);
  write(t.path / "splits.json", R"({"train":[0,1],"val":[1],"test":[2]})");
  CHECK_THROWS_AS(load_dataset(t.path), ValidationError);

  write_fixture(t.path);
  write(t.path / "edges.tsv", "0\t7\n");
  CHECK_THROWS_AS(load_dataset(t.path), ValidationError);

  write_fixture(t.path);
  write(t.path / "features.csv", "1.0,0.0\n0.5\n0.0,1.0\n");
  CHECK(load_error(t.path).find("line 2") != std::string::npos);

  write_fixture(t.path);
  fs::remove(t.path / "splits.json");
  CHECK(load_error(t.path).find("splits.json") != std::string::npos);
}

TEST_CASE("write then load is the identity, and equal seeds give equal bytes") {
  SbmParams p;
  p.num_classes = 3;
  p.nodes_per_class = 20;
  p.p_in = 0.2;
  p.p_out = 0.02;
  p.feature_dim = 5;
  p.seed = 11;
  const DatasetBundle b = gen_sbm(p);
  TempDir a("roundtrip_a"), c("roundtrip_c");
  write_dataset(b, a.path);
  CHECK(load_dataset(a.path) == b);
  write_dataset(gen_sbm(p), c.path);
  for (const char* f : {"meta.json", "edges.tsv", "features.csv", "labels.csv", "splits.json"})
    CHECK(slurp(a.path / f) == slurp(c.path / f));
}

TEST_CASE("gen_sbm with p_out = 0 yields disconnected communities") {
  SbmParams p;
  p.num_classes = 4;
  p.nodes_per_class = 25;
  p.p_in = 0.3;
  p.p_out = 0.0;
  p.feature_dim = 4;
  const DatasetBundle b = gen_sbm(p);
  for (auto [u, v] : b.edges) CHECK(b.clean_labels[u] == b.clean_labels[v]);
}

TEST_CASE("intra-class edge counts match the binomial expectation within 3 sigma") {
  SbmParams p;
  p.num_classes = 5;
  p.nodes_per_class = 100;
  p.p_in = 0.05;
  p.p_out = 0.005;
  p.feature_dim = 8;
  p.seed = 21;
  const DatasetBundle b = gen_sbm(p);
  std::vector<double> intra(5, 0.0);
  double inter = 0.0;
  for (auto [u, v] : b.edges) {
    if (b.clean_labels[u] == b.clean_labels[v]) intra[b.clean_labels[u]] += 1.0;
    else inter += 1.0;
  }
  const double pairs = 100.0 * 99.0 / 2.0;
  const double sigma = std::sqrt(pairs * 0.05 * 0.95);
  for (double k : intra) CHECK(std::abs(k - pairs * 0.05) < 3.0 * sigma);
  const double cross = 10.0 * 100.0 * 100.0;
  CHECK(std::abs(inter - cross * 0.005) < 3.0 * std::sqrt(cross * 0.005 * 0.995));
}

TEST_CASE("gen_sbm splits are disjoint, cover every node and include every class in train") {
  SbmParams p;
  p.feature_dim = 8;
  p.seed = 5;
  const DatasetBundle b = gen_sbm(p);
  std::set<std::size_t> seen;
  for (const auto* part : {&b.splits.train, &b.splits.val, &b.splits.test})
    for (std::size_t i : *part) CHECK(seen.insert(i).second);
  CHECK(seen.size() == b.meta.num_nodes);
  CHECK(b.splits.train.size() == 25);
  CHECK(b.splits.val.size() == 75);
  std::set<int> classes;
  for (std::size_t i : b.splits.train) classes.insert(b.clean_labels[i]);
  CHECK(classes.size() == p.num_classes);
}

TEST_CASE("gen_sbm validates its parameters") {
  SbmParams p;
  p.p_in = 0.01;
  p.p_out = 0.02;
  CHECK_THROWS_AS(gen_sbm(p), ValidationError);
  p = SbmParams{};
  p.feature_shift = 0.0;
  CHECK_THROWS_AS(gen_sbm(p), ValidationError);
  p = SbmParams{};
  p.feature_dim = 2;
  CHECK_THROWS_AS(gen_sbm(p), ValidationError);
}

TEST_CASE("format_double round-trips exactly") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 123456789.125}) CHECK(std::stod(format_double(v)) == v);
}

}  // TEST_SUITE
