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

#include <algorithm>
#include <numeric>
#include <vector>

#include "legnn/error.hpp"
#include "legnn/metrics.hpp"

using namespace legnn;

namespace {

const LabelSet kClean{{0, 1, 2, 1}, 3, LabelRole::kClean};
const std::vector<std::size_t> kAllNodes{0, 1, 2, 3};

}  // namespace

TEST_SUITE("metrics-analysis") {

TEST_CASE("accuracy: perfect, all wrong, three of four") {
  CHECK(accuracy(std::vector<int>{0, 1, 2, 1}, kClean, kAllNodes) == 1.0);
  CHECK(accuracy(std::vector<int>{1, 2, 0, 0}, kClean, kAllNodes) == 0.0);
  CHECK(accuracy(std::vector<int>{0, 1, 2, 0}, kClean, kAllNodes) == 0.75);
  CHECK_THROWS_AS(accuracy(std::vector<int>{0}, kClean, std::vector<std::size_t>{}), ValidationError);
}

TEST_CASE("multilabel PRF: singleton-correct and all-bits cases") {
  MultiLabelMatrix exact(4, 3), full(4, 3);
  for (std::size_t i = 0; i < 4; ++i) {
    exact.set(i, static_cast<std::size_t>(kClean[i]));
    for (std::size_t j = 0; j < 3; ++j) full.set(i, j);
  }
  const LabelQuality e = multilabel_prf(exact, kClean, kAllNodes);
  CHECK(e.precision == 1.0);
  CHECK(e.recall == 1.0);
  CHECK(e.f1 == 1.0);
  const LabelQuality f = multilabel_prf(full, kClean, kAllNodes);
  CHECK(f.recall == 1.0);
  CHECK(f.precision == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(clean_coverage(full, kClean, kAllNodes) == 1.0);
  CHECK_THROWS_AS(multilabel_prf(MultiLabelMatrix(4, 3), kClean, kAllNodes), ValidationError);
}

TEST_CASE("f1 is the harmonic mean and coverage equals recall") {
  MultiLabelMatrix yp(4, 3);
  yp.set(0, 0);
  yp.set(0, 2);
  yp.set(1, 2);
  yp.set(2, 2);
  yp.set(2, 1);
  yp.set(3, 0);
  const LabelQuality q = multilabel_prf(yp, kClean, kAllNodes);
  CHECK(q.precision == doctest::Approx(2.0 / 6.0).epsilon(1e-15));
  CHECK(q.recall == 0.5);
  CHECK(q.f1 == 2.0 * q.precision * q.recall / (q.precision + q.recall));
  CHECK(q.coverage == q.recall);
  CHECK(clean_coverage(yp, kClean, kAllNodes) == q.recall);
}

TEST_CASE("metrics are invariant under a consistent node permutation") {
  const std::size_t n = 50, c = 4;
  Rng rng = make_stream(8, 0);
  LabelSet clean{std::vector<int>(n), c, LabelRole::kClean};
  std::vector<int> pred(n);
  MultiLabelMatrix yp(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    clean.labels[i] = static_cast<int>(rng() % c);
    pred[i] = static_cast<int>(rng() % c);
    yp.set(i, rng() % c);
    if (rng() % 2) yp.set(i, rng() % c);
  }
  std::vector<std::size_t> perm(n), idx(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::iota(idx.begin(), idx.end(), 0);
  LabelSet clean_p{std::vector<int>(n), c, LabelRole::kClean};
  std::vector<int> pred_p(n);
  MultiLabelMatrix yp_p(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    clean_p.labels[perm[i]] = clean[i];
    pred_p[perm[i]] = pred[i];
    for (std::size_t j = 0; j < c; ++j) yp_p.set(perm[i], j, yp.test(i, j));
  }
  CHECK(accuracy(pred, clean, idx) == accuracy(pred_p, clean_p, idx));
  const LabelQuality a = multilabel_prf(yp, clean, idx), b = multilabel_prf(yp_p, clean_p, idx);
  CHECK(a.precision == b.precision);
  CHECK(a.recall == b.recall);
  CHECK(a.f1 == b.f1);
}

TEST_CASE("metric splits select the documented node sets") {
  const Splits s{{1, 4}, {0}, {2, 3}};
  CHECK(metric_nodes(s, 5, MetricSplit::kAll) == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(metric_nodes(s, 5, MetricSplit::kTest) == std::vector<std::size_t>{2, 3});
  CHECK(metric_nodes(s, 5, MetricSplit::kUnlabeled) == std::vector<std::size_t>{0, 2, 3});
  CHECK(parse_metric_split("test") == MetricSplit::kTest);
  CHECK(to_string(MetricSplit::kUnlabeled) == "unlabeled");
  CHECK_THROWS_AS(parse_metric_split("val"), ValidationError);
}

}  // TEST_SUITE
