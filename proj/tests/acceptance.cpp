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

// Acceptance run: one PASS/FAIL/SKIPPED line per criterion, non-zero exit if
// any criterion fails.
//
//   legnn_acceptance [--only N ...] [--data-root DIR]
//
// Criterion 9 reads converted datasets from DIR/cora and DIR/citeseer (or
// $LEGNN_PLANETOID_DIR) and is skipped when they are absent.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "legnn/dataset.hpp"
#include "legnn/ensemble.hpp"
#include "legnn/experiment.hpp"
#include "legnn/noise.hpp"
#include "legnn/pll_loss.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace legnn;

namespace {

enum class Status { kPass, kFail, kSkipped };

struct Outcome {
  Status status;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::string pct(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << 100.0 * v;
  return os.str();
}

Outcome verdict(bool ok, std::string detail) { return {ok ? Status::kPass : Status::kFail, std::move(detail)}; }

// ---------------------------------------------------------------------------
// 1. Gradient correctness.

EnsembleSnapshot random_snapshot(const GcnModel& model, const SparseGraph& g, const DenseMatrix& x,
                                 std::uint64_t seed) {
  BootstrapOptions opts;
  opts.mask_rate = 0.5;
  opts.views = 4;
  opts.seed = seed;
  return gather_labels(model, g, bootstrap_views(g, opts), x);
}

Outcome criterion_gradients() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t n = 5 + seed % 6;  // 5..10 nodes
    Rng rng = make_stream(seed, 100);
    const SparseGraph g = testing::quiet_graph(testing::random_edges(n, 0.4, rng), n);
    const DenseMatrix x = testing::random_matrix(n, 4, rng);
    GcnHyper h;
    h.hidden = 6;
    Rng init = make_stream(seed, Stream::kInit);
    const GcnModel model = init_model(4, 3, h, init);
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(rng() % 3);
    const std::vector<std::size_t> train{0, 1, 2};
    const EnsembleSnapshot snap = random_snapshot(model, g, x, seed);
    const ForwardResult f = gcn_forward(model, g, x, Mode::kInfer);

    const std::vector<std::function<LossValue(const DenseMatrix&)>> losses{
        [&](const DenseMatrix& z) { return cross_entropy(z, labels, train); },
        [&](const DenseMatrix& z) { return positive_loss(z, snap); },
        [&](const DenseMatrix& z) { return negative_loss(z, snap); },
        [&](const DenseMatrix& z) {
          LossReport r = bidirectional_loss(z, snap);
          return LossValue{r.total, std::move(r.d_probs)};
        },
    };
    for (const auto& loss_of : losses) {
      const Gradients grads = gcn_backward(model, f.cache, loss_of(f.probs).d_probs);
      worst = std::max(worst, testing::max_relative_error(model, grads, [&](const GcnModel& m) {
                         return loss_of(gcn_infer(m, g, x)).loss;
                       }));
    }
  }
  const double secs = seconds_since(start);
  return verdict(worst < 1e-4 && secs < 10.0,
                 "CE, L^p, L^n, L on 6 graphs of 5-10 nodes: max relative error " + fmt(worst, 3) +
                     " (< 1e-4), " + fmt(secs, 3) + " s (< 10 s)");
}

// ---------------------------------------------------------------------------
// 2. Voting error oracle.

double enumerate_voting_error(std::size_t p, double alpha) {
  double total = 0.0;
  for (std::uint32_t outcome = 0; outcome < (1u << p); ++outcome) {
    std::size_t wrong = 0;
    double prob = 1.0;
    for (std::size_t k = 0; k < p; ++k) {
      const bool w = (outcome >> k) & 1u;
      wrong += w;
      prob *= w ? alpha : 1.0 - alpha;
    }
    if (2 * wrong >= p) total += prob;
  }
  return total;
}

Outcome criterion_voting() {
  const auto start = Clock::now();
  const double v = voting_error_rate(5, 0.3);
  const double oracle = enumerate_voting_error(5, 0.3);
  bool below_alpha = true;
  for (std::size_t p : {3u, 5u, 7u, 9u, 11u})
    for (double alpha = 0.05; alpha < 0.5; alpha += 0.05) below_alpha &= voting_error_rate(p, alpha) < alpha;
  const double secs = seconds_since(start);
  const bool ok = std::abs(v - 0.16308) <= 1e-5 && std::abs(v - oracle) <= 1e-12 && v < 0.3 && below_alpha &&
                  secs < 1.0;
  return verdict(ok, "voting_error_rate(5, 0.3) = " + fmt(v, 8) + ", enumeration " + fmt(oracle, 8) +
                         ", < alpha for odd p <= 11 and alpha < 0.5: " + (below_alpha ? "yes" : "no"));
}

// ---------------------------------------------------------------------------
// 3. Noise statistics.

Outcome criterion_noise() {
  const auto start = Clock::now();
  constexpr std::size_t kLabels = 100000, kClasses = 3;
  LabelSet clean{std::vector<int>(kLabels), kClasses, LabelRole::kClean};
  for (std::size_t i = 0; i < kLabels; ++i) clean.labels[i] = static_cast<int>(i % kClasses);
  const NoiseSpec spec{NoiseKind::kSymmetric, 0.3, kClasses};
  const DenseMatrix t = build_transition(spec);
  Rng rng = make_stream(2026, Stream::kNoise);
  const LabelSet noisy = flip_labels(clean, t, rng);
  std::vector<std::vector<double>> counts(kClasses, std::vector<double>(kClasses, 0.0));
  std::vector<double> rows(kClasses, 0.0);
  for (std::size_t i = 0; i < kLabels; ++i) {
    counts[clean[i]][noisy[i]] += 1.0;
    rows[clean[i]] += 1.0;
  }
  double worst_sigmas = 0.0;
  for (std::size_t i = 0; i < kClasses; ++i)
    for (std::size_t j = 0; j < kClasses; ++j) {
      const double p = i == j ? 0.7 : 0.15;
      const double sigma = std::sqrt(p * (1.0 - p) / rows[i]);
      worst_sigmas = std::max(worst_sigmas, std::abs(counts[i][j] / rows[i] - p) / sigma);
    }
  const double secs = seconds_since(start);
  return verdict(worst_sigmas <= 3.0 && secs < 5.0,
                 "symmetric tau=0.3, C=3, 1e5 labels: worst cell deviation " + fmt(worst_sigmas, 3) +
                     " sigma (<= 3), " + fmt(secs, 3) + " s");
}

// ---------------------------------------------------------------------------
// 4. Ensemble invariants.

// Dense D^-1/2 A D^-1/2 of a view built from its kept structure alone.
std::vector<std::vector<double>> dense_view(const SparseGraph& structure) {
  const std::size_t n = structure.num_nodes();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  std::vector<double> deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] = static_cast<double>(structure.neighbors(i).size());
  for (std::size_t i = 0; i < n; ++i)
    for (NodeId j : structure.neighbors(i)) a[i][j] = 1.0 / std::sqrt(deg[i] * deg[j]);
  return a;
}

Outcome criterion_ensemble() {
  const auto start = Clock::now();
  SbmParams p;
  p.num_classes = 5;
  p.nodes_per_class = 40;
  p.p_in = 0.1;
  p.p_out = 0.01;
  p.feature_dim = 16;
  p.feature_shift = 2.0;
  p.seed = 4;
  const DatasetBundle data = gen_sbm(p);
  const LabelSet noisy = inject_noise(data, {NoiseKind::kSymmetric, 0.3, 5}, 0);
  TrainConfig warm;
  warm.epochs = 50;
  const GcnModel model = train_gcn_ce({data.graph, data.features, noisy, data.splits}, warm).model;

  BootstrapOptions opts;
  opts.mask_rate = 0.5;
  opts.views = 10;
  opts.seed = 17;
  const auto views = bootstrap_views(data.graph, opts);
  const std::span<const MaskedGraph> all(views);
  const EnsembleSnapshot got = gather_labels(model, data.graph, all, data.features);

  // Per-node brute force: dense forward pass on every view, argmax/argmin union.
  const std::size_t n = data.meta.num_nodes, c = p.num_classes;
  MultiLabelMatrix yp(n, c), yn(n, c);
  for (const auto& v : views) {
    const auto z = testing::dense_forward(dense_view(v.view), data.features, model);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t hi = 0, lo = 0;
      for (std::size_t j = 1; j < c; ++j) {
        if (z[i][j] > z[i][hi]) hi = j;
        if (z[i][j] < z[i][lo]) lo = j;
      }
      yp.set(i, hi);
      yn.set(i, lo);
    }
  }
  const bool exact = got.yp == yp && got.yn == yn;

  bool nonempty = true;
  for (std::size_t i = 0; i < n; ++i) nonempty &= got.yp.row_count(i) >= 1 && got.yn.row_count(i) >= 1;

  bool monotone = true;
  EnsembleSnapshot prev = gather_labels(model, data.graph, all.first(1), data.features);
  for (std::size_t m = 2; m <= views.size(); ++m) {
    EnsembleSnapshot next = gather_labels(model, data.graph, all.first(m), data.features);
    monotone &= prev.yp.subset_of(next.yp) && prev.yn.subset_of(next.yn);
    prev = std::move(next);
  }
  const double secs = seconds_since(start);
  return verdict(exact && nonempty && monotone && secs < 30.0,
                 "200-node SBM, M_e=10: rows nonempty " + std::string(nonempty ? "yes" : "no") +
                     ", brute-force match " + (exact ? "yes" : "no") + ", monotone in M_e " +
                     (monotone ? "yes" : "no") + ", " + fmt(secs, 3) + " s (< 30 s)");
}

// ---------------------------------------------------------------------------
// 5, 6, 7, 10. Desk-scale effectiveness on the shared SBM.

SbmParams desk_sbm() {
  SbmParams p;
  p.num_classes = 5;
  p.nodes_per_class = 100;
  p.p_in = 0.05;
  p.p_out = 0.005;
  p.feature_dim = 16;
  p.feature_shift = 2.0;
  p.seed = 7;
  return p;
}

const std::vector<std::uint64_t> kSeeds{0, 1, 2, 3, 4};

struct DeskRuns {
  DatasetBundle data = gen_sbm(desk_sbm());
  std::map<std::pair<double, std::string>, RunResult> cache;
  std::map<std::pair<double, std::string>, double> seconds;

  // Default hyperparameters, 5 seeds, symmetric noise at `tau`.
  const RunResult& get(double tau, Method method, const nlohmann::json& overrides = nlohmann::json::object()) {
    const auto key = std::make_pair(tau, std::string(to_string(method)) + overrides.dump());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    ExperimentConfig cfg;
    cfg.methods = {method};
    cfg.noise = {NoiseKind::kSymmetric, tau, data.meta.num_classes};
    cfg.seeds = kSeeds;
    cfg.train = train_config_from_json(overrides);
    cfg.label_quality = true;
    const auto start = Clock::now();
    auto results = run_experiment(cfg, data);
    seconds[key] = seconds_since(start);
    for (const auto& run : results.front().runs)
      if (!run.ok) throw std::runtime_error(std::string(to_string(method)) + " failed: " + run.error);
    return cache.emplace(key, std::move(results.front())).first->second;
  }

  double total_seconds(double tau) const {
    double s = 0.0;
    for (const auto& [k, v] : seconds)
      if (k.first == tau) s += v;
    return s;
  }
};

std::string seeds_of(const RunResult& r) {
  std::string out = "[";
  for (std::size_t k = 0; k < r.runs.size(); ++k) out += (k ? " " : "") + pct(r.runs[k].test_accuracy);
  return out + "]";
}

Outcome criterion_effectiveness(DeskRuns& runs) {
  const RunResult& clean = runs.get(0.0, Method::kGcn);
  const RunResult& gcn = runs.get(0.5, Method::kGcn);
  const RunResult& legnn = runs.get(0.5, Method::kLegnn);
  const RunResult& conf = runs.get(0.5, Method::kConfidence);
  const double margin = legnn.test_mean - gcn.test_mean;
  const double secs = runs.total_seconds(0.5);
  const bool ok = clean.test_mean >= 0.85 && margin >= 0.03 && legnn.test_mean > conf.test_mean && secs < 300.0;
  return verdict(ok, "Sym-50%, 5 seeds: clean GCN " + pct(clean.test_mean) + " (>= 85), GCN " + pct(gcn.test_mean) +
                         " " + seeds_of(gcn) + ", LEGNN " + pct(legnn.test_mean) + " " + seeds_of(legnn) +
                         ", Confidence " + pct(conf.test_mean) + "; LEGNN - GCN = " + pct(margin) +
                         " points (>= 3), LEGNN > Confidence " + (legnn.test_mean > conf.test_mean ? "yes" : "no") +
                         ", " + fmt(secs, 3) + " s (< 300 s)");
}

Outcome criterion_ablation(DeskRuns& runs) {
  const double full = runs.get(0.5, Method::kLegnn).test_mean;
  const double no_neg = runs.get(0.5, Method::kLegnnNoNegative).test_mean;
  const double no_gather = runs.get(0.5, Method::kLabelCorrection).test_mean;
  return verdict(full >= no_neg && no_neg >= no_gather,
                 "Sym-50%, 5 seeds: LEGNN " + pct(full) + " >= w/o negative " + pct(no_neg) + " >= w/o gathering " +
                     pct(no_gather) + "; gaps " + pct(full - no_neg) + " and " + pct(no_neg - no_gather) + " points");
}

Outcome criterion_label_quality(DeskRuns& runs) {
  const RunResult& l = runs.get(0.3, Method::kLegnn);
  const RunResult& p = runs.get(0.3, Method::kPropagation);
  if (!l.quality || !p.quality) return {Status::kFail, "label quality missing"};
  const LabelQuality& a = *l.quality;
  const LabelQuality& b = *p.quality;
  const bool ok = a.f1 > b.f1 && a.precision > b.precision && std::abs(a.recall - b.recall) <= 0.10;
  return verdict(ok, "Sym-30%, unlabeled nodes, 5 seeds: LEGNN P/R/F1 " + pct(a.precision) + "/" + pct(a.recall) +
                         "/" + pct(a.f1) + ", Propagation " + pct(b.precision) + "/" + pct(b.recall) + "/" +
                         pct(b.f1) + "; recall gap " + pct(std::abs(a.recall - b.recall)) + " (<= 10)");
}

Outcome criterion_mask_rate(DeskRuns& runs) {
  double lo = 1.0, hi = 0.0;
  std::string detail = "Sym-50%, 5 seeds:";
  for (int k = 2; k <= 8; ++k) {
    const double rate = k / 10.0;
    const double acc = runs.get(0.5, Method::kLegnn, k == 5 ? nlohmann::json::object()
                                                            : nlohmann::json{{"mask_rate", rate}})
                           .test_mean;
    lo = std::min(lo, acc);
    hi = std::max(hi, acc);
    detail += " K=" + fmt(rate, 1) + ":" + pct(acc);
  }
  return verdict(hi - lo < 0.05, detail + "; spread " + pct(hi - lo) + " points (< 5)");
}

// ---------------------------------------------------------------------------
// 8. Overhead and scaling.

Outcome criterion_overhead() {
  SbmParams p;
  p.num_classes = 5;
  p.nodes_per_class = 500;  // 2,500 nodes
  p.p_in = 0.0064;          // about 4,000 intra-class edges
  p.p_out = 0.0004;         // about 1,000 inter-class edges
  p.feature_dim = 128;
  p.feature_shift = 2.0;
  p.seed = 8;
  const DatasetBundle data = gen_sbm(p);
  TrainConfig cfg;
  cfg.mask_iterations = 15;
  const OverheadReport o = bench_overhead(data, cfg, {NoiseKind::kSymmetric, 0.5, 5}, 3);
  const ScalingReport s = bench_scaling({10000, 20000, 40000}, 15, cfg, 16, 3);
  bool edges_ok = true;
  std::string edge_detail;
  for (double r : s.edge_ratio_of_ratios) {
    edges_ok &= r >= 0.5 && r <= 2.0;
    edge_detail += (edge_detail.empty() ? "" : ", ") + fmt(r, 3);
  }
  const bool views_ok = s.views_ratio >= 1.6 && s.views_ratio <= 2.4;
  return verdict(o.ratio <= 3.0 && edges_ok && views_ok,
                 std::to_string(data.meta.num_nodes) + " nodes / " + std::to_string(data.edges.size()) +
                     " edges, M_e=15: LEGNN " + fmt(o.legnn_seconds, 3) + " s vs backbone " +
                     fmt(o.backbone_seconds, 3) + " s, ratio " + fmt(o.ratio, 3) +
                     " (<= 3); gathering ratio of ratios over 10k/20k/40k edges " + edge_detail +
                     " (in [0.5, 2]); doubled M_e ratio " + fmt(s.views_ratio, 3) + " (in [1.6, 2.4])");
}

// ---------------------------------------------------------------------------
// 9. Conditional reproduction on converted Cora / Citeseer.

struct Reference {
  const char* dataset;
  NoiseKind kind;
  double tau;
  double gcn;
  double legnn;
};

// Mean test accuracy (%) under each setting.
const Reference kReferences[] = {
    {"cora", NoiseKind::kSymmetric, 0.2, 71.47, 79.95},     {"cora", NoiseKind::kSymmetric, 0.5, 53.05, 67.93},
    {"cora", NoiseKind::kPair, 0.4, 58.08, 67.55},          {"citeseer", NoiseKind::kSymmetric, 0.2, 62.73, 74.70},
    {"citeseer", NoiseKind::kSymmetric, 0.5, 46.78, 69.62}, {"citeseer", NoiseKind::kPair, 0.4, 49.91, 64.82},
};

Outcome criterion_reproduction(const std::string& root) {
  if (root.empty() || !fs::exists(fs::path(root) / "cora" / "meta.json") ||
      !fs::exists(fs::path(root) / "citeseer" / "meta.json"))
    return {Status::kSkipped, "converted Cora/Citeseer not found (set --data-root or LEGNN_PLANETOID_DIR)"};
  std::map<std::string, DatasetBundle> data;
  for (const char* name : {"cora", "citeseer"}) data.emplace(name, load_dataset(fs::path(root) / name));
  bool ok = true;
  std::string detail;
  for (const Reference& ref : kReferences) {
    const DatasetBundle& d = data.at(ref.dataset);
    ExperimentConfig cfg;
    cfg.methods = {Method::kGcn, Method::kLegnn};
    cfg.noise = {ref.kind, ref.tau, d.meta.num_classes};
    cfg.seeds = kSeeds;
    const auto results = run_experiment(cfg, d);
    const double gcn = 100.0 * results[0].test_mean, legnn = 100.0 * results[1].test_mean;
    ok &= std::abs(gcn - ref.gcn) <= 5.0 && std::abs(legnn - ref.legnn) <= 5.0;
    detail += std::string(detail.empty() ? "" : "; ") + ref.dataset + " " + std::string(to_string(ref.kind)) + "-" +
              fmt(ref.tau * 100, 2) + "%: GCN " + fmt(gcn, 4) + " vs " + fmt(ref.gcn, 4) + ", LEGNN " + fmt(legnn, 4) +
              " vs " + fmt(ref.legnn, 4);
  }
  return verdict(ok, detail + " (each within 5 points)");
}

const char* label(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kSkipped: return "SKIPPED";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LEGNN acceptance criteria"};
  std::vector<int> only;
  std::string data_root;
  if (const char* env = std::getenv("LEGNN_PLANETOID_DIR")) data_root = env;
  app.add_option("--only", only, "Run only these criteria")->check(CLI::Range(1, 10));
  app.add_option("--data-root", data_root, "Directory holding converted cora/ and citeseer/");
  CLI11_PARSE(app, argc, argv);
  const std::set<int> selected(only.begin(), only.end());

  DeskRuns desk;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"gradient correctness", criterion_gradients},
      {"voting oracle", criterion_voting},
      {"noise statistics", criterion_noise},
      {"ensemble invariants", criterion_ensemble},
      {"desk-scale effectiveness", [&] { return criterion_effectiveness(desk); }},
      {"ablation ordering", [&] { return criterion_ablation(desk); }},
      {"label-quality balance", [&] { return criterion_label_quality(desk); }},
      {"overhead bound", criterion_overhead},
      {"conditional reproduction", [&] { return criterion_reproduction(data_root); }},
      {"mask-rate robustness", [&] { return criterion_mask_rate(desk); }},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome out;
    const auto start = Clock::now();
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out = {Status::kFail, std::string("error: ") + e.what()};
    }
    failures += out.status == Status::kFail;
    std::cout << "criterion " << std::setw(2) << id << " " << std::left << std::setw(8) << label(out.status)
              << std::right << criteria[k].first << " [" << fmt(seconds_since(start), 3) << " s]: " << out.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
