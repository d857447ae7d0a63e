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

// legnn: command-line front end.
//
//   legnn [--seed N] [--config FILE] [--out DIR] [--metric-split S] <subcommand> ...
//
// Exit codes: 0 success, 1 validation failure, 2 runtime failure.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "legnn/dataset.hpp"
#include "legnn/error.hpp"
#include "legnn/experiment.hpp"
#include "legnn/metrics.hpp"
#include "legnn/trainers.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace legnn;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct Globals {
  std::uint64_t seed = 0;
  std::string config;
  std::string out = ".";
  std::string metric_split = "unlabeled";
};

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_json(const json& j, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

fs::path out_dir(const Globals& g) {
  fs::create_directories(g.out);
  return g.out;
}

// --config may hold a bare TrainConfig object or an experiment config with a
// "train" section.
TrainConfig train_config(const Globals& g) {
  TrainConfig cfg;
  if (!g.config.empty()) {
    const json j = read_json(g.config);
    cfg = train_config_from_json(j.contains("train") ? j.at("train") : j);
  }
  cfg.seed = g.seed;
  cfg.check();
  return cfg;
}

json quality_json(const LabelQuality& q) {
  return {{"precision", q.precision}, {"recall", q.recall}, {"f1", q.f1}, {"coverage", q.coverage}};
}

// N lines of C comma-separated 0/1 flags.
void write_candidates(const MultiLabelMatrix& m, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << (m.test(i, j) ? 1 : 0);
    out << '\n';
  }
}

MultiLabelMatrix read_candidates(const fs::path& path, std::size_t rows, std::size_t cols) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  MultiLabelMatrix m(rows, cols);
  std::string line;
  std::size_t r = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (r >= rows) throw ValidationError(path.filename().string() + ": more than " + std::to_string(rows) + " rows");
    std::stringstream ss(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(ss, cell, ',')) {
      if (c >= cols || (cell != "0" && cell != "1"))
        throw ValidationError(path.filename().string() + " line " + std::to_string(r + 1) + ": expected " +
                              std::to_string(cols) + " 0/1 flags");
      m.set(r, c++, cell == "1");
    }
    if (c != cols)
      throw ValidationError(path.filename().string() + " line " + std::to_string(r + 1) + ": expected " +
                            std::to_string(cols) + " 0/1 flags");
    ++r;
  }
  if (r != rows) throw ValidationError(path.filename().string() + ": expected " + std::to_string(rows) + " rows");
  return m;
}

LabelSet read_noisy(const fs::path& path, const DatasetBundle& data) {
  LabelSet noisy{read_label_column(path), data.meta.num_classes, LabelRole::kNoisyTrain};
  if (noisy.size() != data.meta.num_nodes)
    throw ValidationError(path.filename().string() + ": expected " + std::to_string(data.meta.num_nodes) + " lines");
  noisy.check();
  return noisy;
}

int run_gen_sbm(const Globals& g, SbmParams p) {
  p.seed = g.seed;
  const DatasetBundle b = gen_sbm(p);
  write_dataset(b, out_dir(g));
  std::cout << "wrote " << b.meta.num_nodes << " nodes, " << b.edges.size() << " edges to " << g.out << '\n';
  return 0;
}

int run_inject_noise(const Globals& g, const std::string& data_dir, NoiseSpec spec) {
  const DatasetBundle data = load_dataset(data_dir);
  spec.num_classes = data.meta.num_classes;
  const LabelSet noisy = inject_noise(data, spec, g.seed);
  const fs::path dir = out_dir(g);
  write_label_column(noisy.labels, dir / "noisy_labels.csv");
  write_json({{"kind", std::string(to_string(spec.kind))}, {"tau", spec.tau}, {"seed", g.seed}},
             dir / "noise_meta.json");
  std::size_t flipped = 0, labeled = 0;
  for (std::size_t i = 0; i < noisy.size(); ++i)
    if (noisy.has(i)) {
      ++labeled;
      flipped += noisy[i] != data.clean_labels[i];
    }
  std::cout << "flipped " << flipped << " of " << labeled << " labels\n";
  return 0;
}

struct TrainArgs {
  std::string data;
  std::string method = "legnn";
  std::string noisy;
  std::string kind = "symmetric";
  double tau = 0.0;
};

int run_train(const Globals& g, const TrainArgs& a) {
  const DatasetBundle data = load_dataset(a.data);
  const Method method = parse_method(a.method);
  const TrainConfig cfg = configure_method(method, train_config(g));
  const MetricSplit split = parse_metric_split(g.metric_split);
  LabelSet noisy;
  if (!a.noisy.empty()) {
    noisy = read_noisy(a.noisy, data);
  } else {
    NoiseSpec spec{parse_noise_kind(a.kind), a.tau, data.meta.num_classes};
    noisy = inject_noise(data, spec, g.seed);
  }
  const TrainResult r = run_method(method, {data.graph, data.features, noisy, data.splits}, cfg);
  for (const auto& w : r.trace.warnings) stderr_warning(w);

  const fs::path dir = out_dir(g);
  write_trace_csv(r.trace, dir / "trace.csv");
  const auto pred = predict(gcn_infer(r.model, data.graph, data.features));
  write_label_column(pred, dir / "predictions.csv");

  json m;
  m["method"] = std::string(to_string(method));
  m["seed"] = g.seed;
  m["train"] = to_json(cfg);
  m["test_accuracy"] = accuracy(pred, data.clean_labels, data.splits.test);
  m["best_val_accuracy"] = r.trace.best_val_accuracy;
  m["best_epoch"] = r.trace.best_epoch;
  m["selection_start"] = r.trace.selection_start;
  m["gather_events"] = r.trace.gather_events;
  m["gather_seconds"] = r.trace.gather_seconds;
  m["total_seconds"] = r.trace.total_seconds;
  m["metric_split"] = std::string(to_string(split));
  if (r.gathered && r.gathered->total_count() > 0) {
    write_candidates(*r.gathered, dir / "candidates.csv");
    m["label_quality"] =
        quality_json(multilabel_prf(*r.gathered, data.clean_labels, metric_nodes(data.splits, data.meta.num_nodes, split)));
  }
  write_json(m, dir / "metrics.json");
  std::cout << to_string(method) << " test accuracy " << m["test_accuracy"].get<double>() << '\n';
  return 0;
}

int run_evaluate(const Globals& g, const std::string& data_dir, const std::string& predictions,
                 const std::string& candidates) {
  const DatasetBundle data = load_dataset(data_dir);
  const MetricSplit split = parse_metric_split(g.metric_split);
  const auto nodes = metric_nodes(data.splits, data.meta.num_nodes, split);
  json m;
  m["metric_split"] = std::string(to_string(split));
  if (!predictions.empty()) {
    const std::vector<int> pred = read_label_column(predictions);
    if (pred.size() != data.meta.num_nodes)
      throw ValidationError("predictions: expected " + std::to_string(data.meta.num_nodes) + " lines");
    m["accuracy"] = accuracy(pred, data.clean_labels, nodes);
    m["test_accuracy"] = accuracy(pred, data.clean_labels, data.splits.test);
  }
  if (!candidates.empty()) {
    const MultiLabelMatrix yp = read_candidates(candidates, data.meta.num_nodes, data.meta.num_classes);
    m["label_quality"] = quality_json(multilabel_prf(yp, data.clean_labels, nodes));
  }
  if (m.size() == 1) throw ValidationError("evaluate needs --predictions and/or --candidates");
  write_json(m, out_dir(g) / "evaluation.json");
  std::cout << m.dump(2) << '\n';
  return 0;
}

struct BenchArgs {
  std::string data;
  std::string kind = "symmetric";
  double tau = 0.5;
  std::size_t repeats = 3;
  std::vector<std::size_t> scaling_edges;
  std::size_t scaling_views = 15;
  std::size_t scaling_features = 16;
};

int run_bench(const Globals& g, const BenchArgs& a, SbmParams sbm) {
  const TrainConfig cfg = train_config(g);
  json report;
  if (!a.data.empty() || a.scaling_edges.empty()) {
    sbm.seed = g.seed;
    const DatasetBundle data = a.data.empty() ? gen_sbm(sbm) : load_dataset(a.data);
    NoiseSpec spec{parse_noise_kind(a.kind), a.tau, data.meta.num_classes};
    report["overhead"] = to_json(bench_overhead(data, cfg, spec, a.repeats));
    report["overhead"]["nodes"] = data.meta.num_nodes;
    report["overhead"]["edges"] = data.edges.size();
  }
  if (!a.scaling_edges.empty())
    report["scaling"] = to_json(bench_scaling(a.scaling_edges, a.scaling_views, cfg, a.scaling_features, a.repeats));
  write_json(report, out_dir(g) / "bench.json");
  std::cout << report.dump(2) << '\n';
  return 0;
}

int run_sweep(const Globals& g, const std::string& data_dir) {
  if (g.config.empty()) throw ValidationError("sweep requires --config");
  json j = read_json(g.config);
  if (!data_dir.empty()) j["dataset"] = data_dir;
  if (!j.contains("metric_split")) j["metric_split"] = g.metric_split;
  const ExperimentConfig cfg = experiment_config_from_json(j);
  const DatasetBundle data = cfg.dataset_dir ? load_dataset(*cfg.dataset_dir) : gen_sbm(*cfg.sbm);
  const auto results = run_experiment(cfg, data);
  write_results(cfg, results, out_dir(g));
  bool any_failed = false;
  for (const auto& r : results) {
    std::cout << to_string(r.method) << ' ' << r.params.dump() << "  test " << r.test_mean << " +- " << r.test_std
              << (r.selected ? "  *" : "") << '\n';
    for (const auto& run : r.runs)
      if (!run.ok) {
        any_failed = true;
        std::cerr << "run failed: " << to_string(r.method) << " seed " << run.seed << ": " << run.error << '\n';
      }
  }
  return any_failed ? kExitRuntime : 0;
}

void add_sbm_options(CLI::App* cmd, SbmParams& p) {
  cmd->add_option("--classes", p.num_classes, "Number of classes")->check(CLI::Range(2, 64));
  cmd->add_option("--nodes-per-class", p.nodes_per_class, "Nodes per class")->check(CLI::PositiveNumber);
  cmd->add_option("--p-in", p.p_in, "Intra-class edge probability");
  cmd->add_option("--p-out", p.p_out, "Inter-class edge probability");
  cmd->add_option("--feature-dim", p.feature_dim, "Feature dimension");
  cmd->add_option("--feature-shift", p.feature_shift, "Distance between class means");
  cmd->add_option("--train-fraction", p.train_fraction, "Fraction of nodes in train");
  cmd->add_option("--val-fraction", p.val_fraction, "Fraction of nodes in val");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LEGNN: robust node classification under label noise"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Master seed")->capture_default_str();
  app.add_option("--config", g.config, "JSON configuration file");
  app.add_option("--out", g.out, "Output directory")->capture_default_str();
  app.add_option("--metric-split", g.metric_split, "Node set for label metrics: all, test, unlabeled")
      ->check(CLI::IsMember({"all", "test", "unlabeled"}))
      ->capture_default_str();

  SbmParams sbm;
  auto* gen = app.add_subcommand("gen-sbm", "Generate a planted-partition dataset");
  add_sbm_options(gen, sbm);

  std::string data_dir;
  NoiseSpec noise;
  std::string noise_kind = "symmetric";
  auto* inject = app.add_subcommand("inject-noise", "Corrupt train/val labels");
  inject->add_option("--data", data_dir, "Dataset directory")->required();
  inject->add_option("--kind", noise_kind, "symmetric or pair")->check(CLI::IsMember({"symmetric", "pair"}));
  inject->add_option("--tau", noise.tau, "Noise rate")->required();

  TrainArgs ta;
  auto* train = app.add_subcommand("train", "Train one method on one seed");
  train->add_option("--data", ta.data, "Dataset directory")->required();
  train->add_option("--method", ta.method, "gcn, legnn, legnn-no-neg, label-correction, propagation, confidence, ...");
  train->add_option("--noisy", ta.noisy, "Noisy label file from inject-noise");
  train->add_option("--kind", ta.kind, "Noise kind when --noisy is absent")->check(CLI::IsMember({"symmetric", "pair"}));
  train->add_option("--tau", ta.tau, "Noise rate when --noisy is absent");

  std::string predictions, candidates;
  auto* evaluate = app.add_subcommand("evaluate", "Score predictions or candidate labels against clean labels");
  evaluate->add_option("--data", data_dir, "Dataset directory")->required();
  evaluate->add_option("--predictions", predictions, "One predicted class per line");
  evaluate->add_option("--candidates", candidates, "N x C 0/1 candidate matrix");

  BenchArgs ba;
  SbmParams bench_sbm;
  bench_sbm.nodes_per_class = 500;
  bench_sbm.p_in = 0.02;
  bench_sbm.p_out = 0.0005;
  bench_sbm.feature_dim = 128;
  auto* bench = app.add_subcommand("bench", "Time LEGNN against the backbone");
  bench->add_option("--data", ba.data, "Dataset directory (default: generated SBM)");
  add_sbm_options(bench, bench_sbm);
  bench->add_option("--kind", ba.kind, "Noise kind")->check(CLI::IsMember({"symmetric", "pair"}));
  bench->add_option("--tau", ba.tau, "Noise rate");
  bench->add_option("--repeats", ba.repeats, "Timing repeats (median reported)")->check(CLI::PositiveNumber);
  bench->add_option("--scaling-edges", ba.scaling_edges, "Edge counts for the gathering scaling study");
  bench->add_option("--scaling-views", ba.scaling_views, "Views for the scaling study")->check(CLI::PositiveNumber);
  bench->add_option("--scaling-features", ba.scaling_features, "Feature dim for the scaling study");

  auto* sweep = app.add_subcommand("sweep", "Run an experiment config: methods x grid x seeds");
  sweep->add_option("--data", data_dir, "Dataset directory (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*gen) return run_gen_sbm(g, sbm);
    if (*inject) {
      noise.kind = parse_noise_kind(noise_kind);
      return run_inject_noise(g, data_dir, noise);
    }
    if (*train) return run_train(g, ta);
    if (*evaluate) return run_evaluate(g, data_dir, predictions, candidates);
    if (*bench) return run_bench(g, ba, bench_sbm);
    if (*sweep) return run_sweep(g, data_dir);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitValidation;
}
