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

#include "legnn/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <string>

#include "legnn/error.hpp"

namespace legnn {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::kGcn, "gcn"},
    {Method::kLegnn, "legnn"},
    {Method::kLegnnNoNegative, "legnn-no-neg"},
    {Method::kLabelCorrection, "label-correction"},
    {Method::kLabelCorrectionPositive, "label-correction-pos"},
    {Method::kLegnnNearest, "legnn-nearest"},
    {Method::kPropagation, "propagation"},
    {Method::kConfidence, "confidence"},
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string_view to_string(MaskStrategy s) { return s == MaskStrategy::kRandom ? "random" : "nearest"; }
std::string_view to_string(MaskMode m) { return m == MaskMode::kDirected ? "directed" : "undirected"; }
std::string_view to_string(WeightRule r) {
  return r == WeightRule::kCandidateNormalized ? "candidate" : "literal";
}

template <typename T>
T get_as(const json& j, std::string_view key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ValidationError("config: bad value for '" + std::string(key) + "': " + j.dump());
  }
}

json quality_json(const LabelQuality& q) {
  return {{"precision", q.precision}, {"recall", q.recall}, {"f1", q.f1}, {"coverage", q.coverage}};
}

// Cartesian product of the grid's value lists; keys iterate in sorted order.
std::vector<json> grid_points(const json& grid) {
  std::vector<json> points{json::object()};
  for (const auto& [key, values] : grid.items()) {
    if (!values.is_array() || values.empty())
      throw ValidationError("config: grid entry '" + key + "' must be a non-empty array");
    std::vector<json> next;
    for (const auto& p : points)
      for (const auto& v : values) {
        json q = p;
        q[key] = v;
        next.push_back(std::move(q));
      }
    points = std::move(next);
  }
  return points;
}

}  // namespace

std::string_view to_string(Method method) {
  for (auto [m, name] : kMethodNames)
    if (m == method) return name;
  return "unknown";
}

Method parse_method(std::string_view text) {
  for (auto [m, name] : kMethodNames)
    if (name == text) return m;
  std::string known;
  for (auto [m, name] : kMethodNames) known += (known.empty() ? "" : "|") + std::string(name);
  throw ValidationError("unknown method '" + std::string(text) + "' (expected " + known + ")");
}

TrainConfig configure_method(Method method, TrainConfig cfg) {
  switch (method) {
    case Method::kLegnnNoNegative:
      cfg.use_negative_loss = false;
      break;
    case Method::kLabelCorrection:
      cfg.mask_iterations = 1;
      cfg.mask_rate = 0.0;
      break;
    case Method::kLabelCorrectionPositive:
      cfg.mask_iterations = 1;
      cfg.mask_rate = 0.0;
      cfg.use_negative_loss = false;
      break;
    case Method::kLegnnNearest:
      cfg.mask_strategy = MaskStrategy::kNearest;
      break;
    default:
      break;
  }
  return cfg;
}

TrainResult run_method(Method method, const TrainInputs& in, const TrainConfig& base) {
  const TrainConfig cfg = configure_method(method, base);
  switch (method) {
    case Method::kGcn:
      return train_gcn_ce(in, cfg);
    case Method::kPropagation:
      return train_propagation(in, cfg);
    case Method::kConfidence:
      return train_confidence(in, cfg);
    default:
      return train_legnn(in, cfg);
  }
}

LabelSet inject_noise(const DatasetBundle& data, const NoiseSpec& spec, std::uint64_t seed) {
  NoiseSpec s = spec;
  s.num_classes = data.meta.num_classes;
  LabelSet observed{std::vector<int>(data.meta.num_nodes, kUnlabeled), s.num_classes,
                    LabelRole::kNoisyTrain};
  for (const auto* part : {&data.splits.train, &data.splits.val})
    for (std::size_t i : *part) observed.labels[i] = data.clean_labels[i];
  Rng rng = make_stream(seed, Stream::kNoise);
  return flip_labels(observed, build_transition(s), rng);
}

TrainConfig train_config_from_json(const json& j, TrainConfig cfg) {
  if (!j.is_object()) throw ValidationError("config: training options must be an object");
  for (const auto& [key, v] : j.items()) {
    if (key == "epochs") cfg.epochs = get_as<std::size_t>(v, key);
    else if (key == "warmup_epochs") cfg.warmup_epochs = get_as<std::size_t>(v, key);
    else if (key == "hidden") cfg.hyper.hidden = get_as<std::size_t>(v, key);
    else if (key == "dropout") cfg.hyper.dropout = get_as<double>(v, key);
    else if (key == "lr") cfg.hyper.learning_rate = get_as<double>(v, key);
    else if (key == "momentum") cfg.hyper.momentum = get_as<double>(v, key);
    else if (key == "weight_decay") cfg.hyper.weight_decay = get_as<double>(v, key);
    else if (key == "mask_rate") cfg.mask_rate = get_as<double>(v, key);
    else if (key == "mask_iterations") cfg.mask_iterations = get_as<std::size_t>(v, key);
    else if (key == "seed") cfg.seed = get_as<std::uint64_t>(v, key);
    else if (key == "use_negative_loss") cfg.use_negative_loss = get_as<bool>(v, key);
    else if (key == "regather_patience") cfg.regather_patience = get_as<std::size_t>(v, key);
    else if (key == "anchor_weight") cfg.anchor_weight = get_as<double>(v, key);
    else if (key == "round_epochs") cfg.round_epochs = get_as<std::size_t>(v, key);
    else if (key == "confidence_threshold") cfg.confidence_threshold = get_as<double>(v, key);
    else if (key == "mask_strategy") {
      const auto s = get_as<std::string>(v, key);
      if (s == "random") cfg.mask_strategy = MaskStrategy::kRandom;
      else if (s == "nearest") cfg.mask_strategy = MaskStrategy::kNearest;
      else throw ValidationError("config: mask_strategy must be random|nearest");
    } else if (key == "mask_mode") {
      const auto s = get_as<std::string>(v, key);
      if (s == "directed") cfg.mask_mode = MaskMode::kDirected;
      else if (s == "undirected") cfg.mask_mode = MaskMode::kUndirected;
      else throw ValidationError("config: mask_mode must be directed|undirected");
    } else if (key == "weight_rule") {
      const auto s = get_as<std::string>(v, key);
      if (s == "candidate") cfg.weight_rule = WeightRule::kCandidateNormalized;
      else if (s == "literal") cfg.weight_rule = WeightRule::kLiteral;
      else throw ValidationError("config: weight_rule must be candidate|literal");
    } else {
      throw ValidationError("config: unknown training option '" + key + "'");
    }
  }
  return cfg;
}

json to_json(const TrainConfig& cfg) {
  return {{"epochs", cfg.epochs},
          {"warmup_epochs", cfg.warmup_epochs},
          {"hidden", cfg.hyper.hidden},
          {"dropout", cfg.hyper.dropout},
          {"lr", cfg.hyper.learning_rate},
          {"momentum", cfg.hyper.momentum},
          {"weight_decay", cfg.hyper.weight_decay},
          {"mask_rate", cfg.mask_rate},
          {"mask_iterations", cfg.mask_iterations},
          {"seed", cfg.seed},
          {"use_negative_loss", cfg.use_negative_loss},
          {"regather_patience", cfg.regather_patience},
          {"anchor_weight", cfg.anchor_weight},
          {"round_epochs", cfg.round_epochs},
          {"confidence_threshold", cfg.confidence_threshold},
          {"mask_strategy", to_string(cfg.mask_strategy)},
          {"mask_mode", to_string(cfg.mask_mode)},
          {"weight_rule", to_string(cfg.weight_rule)}};
}

namespace {

SbmParams sbm_from_json(const json& j) {
  SbmParams p;
  for (const auto& [key, v] : j.items()) {
    if (key == "classes") p.num_classes = get_as<std::size_t>(v, key);
    else if (key == "nodes_per_class") p.nodes_per_class = get_as<std::size_t>(v, key);
    else if (key == "p_in") p.p_in = get_as<double>(v, key);
    else if (key == "p_out") p.p_out = get_as<double>(v, key);
    else if (key == "feature_dim") p.feature_dim = get_as<std::size_t>(v, key);
    else if (key == "feature_shift") p.feature_shift = get_as<double>(v, key);
    else if (key == "train_fraction") p.train_fraction = get_as<double>(v, key);
    else if (key == "val_fraction") p.val_fraction = get_as<double>(v, key);
    else if (key == "seed") p.seed = get_as<std::uint64_t>(v, key);
    else throw ValidationError("config: unknown sbm option '" + key + "'");
  }
  return p;
}

json sbm_to_json(const SbmParams& p) {
  return {{"classes", p.num_classes},       {"nodes_per_class", p.nodes_per_class},
          {"p_in", p.p_in},                 {"p_out", p.p_out},
          {"feature_dim", p.feature_dim},   {"feature_shift", p.feature_shift},
          {"train_fraction", p.train_fraction}, {"val_fraction", p.val_fraction},
          {"seed", p.seed}};
}

}  // namespace

ExperimentConfig experiment_config_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("config: top level must be an object");
  ExperimentConfig cfg;
  for (const auto& [key, v] : j.items()) {
    if (key == "dataset") {
      if (v.is_string()) cfg.dataset_dir = fs::path(v.get<std::string>());
      else if (v.is_object() && v.contains("sbm")) cfg.sbm = sbm_from_json(v["sbm"]);
      else throw ValidationError("config: dataset must be a directory path or {\"sbm\": {...}}");
    } else if (key == "methods") {
      cfg.methods.clear();
      for (const auto& m : v) cfg.methods.push_back(parse_method(get_as<std::string>(m, key)));
    } else if (key == "noise") {
      cfg.noise.kind = parse_noise_kind(get_as<std::string>(v.value("kind", json("symmetric")), "noise.kind"));
      cfg.noise.tau = get_as<double>(v.value("tau", json(0.0)), "noise.tau");
    } else if (key == "seeds") {
      cfg.seeds = get_as<std::vector<std::uint64_t>>(v, key);
    } else if (key == "train") {
      cfg.train = train_config_from_json(v);
    } else if (key == "grid") {
      if (!v.is_object()) throw ValidationError("config: grid must be an object");
      for (const auto& p : grid_points(v)) train_config_from_json(p);
      cfg.grid = v;
    } else if (key == "metric_split") {
      cfg.metric_split = parse_metric_split(get_as<std::string>(v, key));
    } else if (key == "label_quality") {
      cfg.label_quality = get_as<bool>(v, key);
    } else {
      throw ValidationError("config: unknown key '" + key + "'");
    }
  }
  if (!cfg.dataset_dir && !cfg.sbm) throw ValidationError("config: 'dataset' is required");
  if (cfg.methods.empty()) throw ValidationError("config: 'methods' must list at least one method");
  if (cfg.seeds.empty()) throw ValidationError("config: 'seeds' must not be empty");
  return cfg;
}

json to_json(const ExperimentConfig& cfg) {
  json j;
  if (cfg.dataset_dir) j["dataset"] = cfg.dataset_dir->string();
  else if (cfg.sbm) j["dataset"] = {{"sbm", sbm_to_json(*cfg.sbm)}};
  j["methods"] = json::array();
  for (Method m : cfg.methods) j["methods"].push_back(to_string(m));
  j["noise"] = {{"kind", to_string(cfg.noise.kind)}, {"tau", cfg.noise.tau}};
  j["seeds"] = cfg.seeds;
  j["train"] = to_json(cfg.train);
  j["grid"] = cfg.grid;
  j["metric_split"] = to_string(cfg.metric_split);
  j["label_quality"] = cfg.label_quality;
  return j;
}

std::pair<double, double> mean_std(const std::vector<double>& values) {
  if (values.empty()) return {0.0, 0.0};
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / n)};
}

std::vector<RunResult> run_experiment(const ExperimentConfig& cfg, const DatasetBundle& data) {
  const auto metric_set = metric_nodes(data.splits, data.meta.num_nodes, cfg.metric_split);
  const auto points = grid_points(cfg.grid);
  std::vector<LabelSet> noisy;
  for (std::uint64_t seed : cfg.seeds) noisy.push_back(inject_noise(data, cfg.noise, seed));

  std::vector<RunResult> results;
  for (Method method : cfg.methods) {
    const std::size_t first = results.size();
    for (const json& point : points) {
      RunResult r;
      r.method = method;
      r.params = point;
      const TrainConfig base = train_config_from_json(point, cfg.train);
      std::vector<double> test, val, secs, gsecs;
      std::vector<LabelQuality> qualities;
      for (std::size_t s = 0; s < cfg.seeds.size(); ++s) {
        SeedRun run;
        run.seed = cfg.seeds[s];
        try {
          TrainConfig tc = base;
          tc.seed = run.seed;
          const TrainInputs in{data.graph, data.features, noisy[s], data.splits};
          TrainResult tr = run_method(method, in, tc);
          const auto pred = predict(gcn_infer(tr.model, data.graph, data.features));
          run.test_accuracy = accuracy(pred, data.clean_labels, data.splits.test);
          run.val_accuracy = tr.trace.best_val_accuracy;
          run.seconds = tr.trace.total_seconds;
          run.gather_seconds = tr.trace.gather_seconds;
          if (cfg.label_quality && tr.gathered && tr.gathered->total_count() > 0)
            run.quality = multilabel_prf(*tr.gathered, data.clean_labels, metric_set);
          run.ok = true;
        } catch (const std::exception& e) {
          run.error = e.what();
        }
        if (run.ok) {
          test.push_back(run.test_accuracy);
          val.push_back(run.val_accuracy);
          secs.push_back(run.seconds);
          gsecs.push_back(run.gather_seconds);
          if (run.quality) qualities.push_back(*run.quality);
        }
        r.runs.push_back(std::move(run));
      }
      std::tie(r.test_mean, r.test_std) = mean_std(test);
      r.val_mean = mean_std(val).first;
      r.seconds_mean = mean_std(secs).first;
      r.gather_seconds_mean = mean_std(gsecs).first;
      if (!qualities.empty()) {
        LabelQuality q;
        for (const auto& x : qualities) {
          q.precision += x.precision;
          q.recall += x.recall;
          q.f1 += x.f1;
          q.coverage += x.coverage;
        }
        const double n = static_cast<double>(qualities.size());
        q.precision /= n;
        q.recall /= n;
        q.f1 /= n;
        q.coverage /= n;
        r.quality = q;
      }
      results.push_back(std::move(r));
    }
    std::size_t best = first;
    for (std::size_t k = first; k < results.size(); ++k)
      if (results[k].val_mean > results[best].val_mean) best = k;
    results[best].selected = true;
  }
  return results;
}

std::vector<RunResult> run_experiment(const fs::path& config_file) {
  std::ifstream in(config_file);
  if (!in) throw ValidationError("cannot open config " + config_file.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("config " + config_file.string() + ": " + e.what());
  }
  const ExperimentConfig cfg = experiment_config_from_json(j);
  const DatasetBundle data = cfg.dataset_dir ? load_dataset(*cfg.dataset_dir) : gen_sbm(*cfg.sbm);
  return run_experiment(cfg, data);
}

json results_to_json(const ExperimentConfig& cfg, const std::vector<RunResult>& results) {
  json out;
  out["config"] = to_json(cfg);
  out["results"] = json::array();
  for (const auto& r : results) {
    json jr = {{"method", to_string(r.method)},
               {"params", r.params},
               {"resolved_train", to_json(configure_method(r.method, train_config_from_json(r.params, cfg.train)))},
               {"test_accuracy", {{"mean", r.test_mean}, {"std", r.test_std}}},
               {"val_accuracy_mean", r.val_mean},
               {"wall_time_seconds", {{"train", r.seconds_mean}, {"gather", r.gather_seconds_mean}}},
               {"selected", r.selected}};
    if (r.quality) jr["label_quality"] = quality_json(*r.quality);
    jr["runs"] = json::array();
    for (const auto& s : r.runs) {
      json js = {{"seed", s.seed}, {"ok", s.ok}};
      if (s.ok) {
        js["test_accuracy"] = s.test_accuracy;
        js["val_accuracy"] = s.val_accuracy;
        js["seconds"] = s.seconds;
        if (s.quality) js["label_quality"] = quality_json(*s.quality);
      } else {
        js["error"] = s.error;
      }
      jr["runs"].push_back(std::move(js));
    }
    out["results"].push_back(std::move(jr));
  }
  return out;
}

void write_results(const ExperimentConfig& cfg, const std::vector<RunResult>& results,
                   const fs::path& out_dir) {
  fs::create_directories(out_dir);
  {
    std::ofstream out(out_dir / "results.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (out_dir / "results.json").string());
    out << results_to_json(cfg, results).dump(2) << '\n';
  }
  std::ofstream csv(out_dir / "results.csv", std::ios::binary);
  if (!csv) throw std::runtime_error("cannot write " + (out_dir / "results.csv").string());
  csv << "method,params,seeds,ok_runs,test_mean,test_std,val_mean,train_seconds,gather_seconds,"
         "precision,recall,f1,coverage,selected\n";
  for (const auto& r : results) {
    std::size_t ok = 0;
    for (const auto& s : r.runs) ok += s.ok;
    std::string params = r.params.dump();
    std::replace(params.begin(), params.end(), ',', ';');
    csv << to_string(r.method) << ',' << params << ',' << r.runs.size() << ',' << ok << ','
        << format_double(r.test_mean) << ',' << format_double(r.test_std) << ','
        << format_double(r.val_mean) << ',' << format_double(r.seconds_mean) << ','
        << format_double(r.gather_seconds_mean) << ',';
    if (r.quality)
      csv << format_double(r.quality->precision) << ',' << format_double(r.quality->recall) << ','
          << format_double(r.quality->f1) << ',' << format_double(r.quality->coverage);
    else
      csv << ",,,";
    csv << ',' << (r.selected ? 1 : 0) << '\n';
  }
}

namespace {

double time_gather(const GcnModel& model, const SparseGraph& graph, const DenseMatrix& x,
                   const TrainConfig& cfg, std::uint64_t seed) {
  const auto t0 = Clock::now();
  BootstrapOptions opts;
  opts.mask_rate = cfg.mask_rate;
  opts.views = cfg.mask_iterations;
  opts.seed = seed;
  opts.mode = cfg.mask_mode;
  const auto views = bootstrap_views(graph, opts);
  const EnsembleSnapshot snap = gather_labels(model, graph, views, x, cfg.weight_rule);
  const double t = seconds_since(t0);
  if (snap.yp.rows() != graph.num_nodes()) throw NumericalError("bench: gathering lost nodes");
  return t;
}

}  // namespace

OverheadReport bench_overhead(const DatasetBundle& data, const TrainConfig& cfg,
                              const NoiseSpec& noise, std::size_t repeats) {
  const LabelSet noisy = inject_noise(data, noise, cfg.seed);
  const TrainInputs in{data.graph, data.features, noisy, data.splits};
  std::vector<double> backbone, legnn, gather;
  OverheadReport report;
  for (std::size_t r = 0; r < std::max<std::size_t>(1, repeats); ++r) {
    auto t0 = Clock::now();
    const TrainResult ce = train_gcn_ce(in, cfg);
    backbone.push_back(seconds_since(t0));
    t0 = Clock::now();
    const TrainResult le = train_legnn(in, cfg);
    legnn.push_back(seconds_since(t0));
    report.gather_events = le.trace.gather_events;
    gather.push_back(time_gather(ce.model, data.graph, data.features, cfg, cfg.seed + r));
  }
  report.backbone_seconds = median(backbone);
  report.legnn_seconds = median(legnn);
  report.gather_seconds = median(gather);
  report.ratio = report.legnn_seconds / report.backbone_seconds;
  return report;
}

ScalingReport bench_scaling(const std::vector<std::size_t>& target_edges, std::size_t views,
                            const TrainConfig& cfg, std::size_t feature_dim, std::size_t repeats) {
  if (target_edges.empty()) throw ValidationError("bench_scaling: no sizes given");
  ScalingReport report;
  constexpr std::size_t kClasses = 5;
  constexpr double kAverageDegree = 4.0;
  constexpr double kOutRatio = 0.1;  // p_out = p_in * kOutRatio
  std::vector<std::pair<DatasetBundle, GcnModel>> graphs;
  for (std::size_t edges : target_edges) {
    SbmParams p;
    p.num_classes = kClasses;
    const auto n = static_cast<std::size_t>(2.0 * static_cast<double>(edges) / kAverageDegree);
    p.nodes_per_class = std::max<std::size_t>(2, n / kClasses);
    const double m = static_cast<double>(p.nodes_per_class);
    const double c = static_cast<double>(kClasses);
    const double pairs = c * m * (m - 1.0) / 2.0 + kOutRatio * c * (c - 1.0) / 2.0 * m * m;
    p.p_in = std::min(1.0, static_cast<double>(edges) / pairs);
    p.p_out = p.p_in * kOutRatio;
    p.feature_dim = std::max(feature_dim, kClasses);
    p.seed = cfg.seed;
    DatasetBundle data = gen_sbm(p);
    Rng rng = make_stream(cfg.seed, Stream::kInit);
    GcnModel model = init_model(data.meta.num_features, kClasses, cfg.hyper, rng);
    graphs.emplace_back(std::move(data), std::move(model));
  }
  auto measure = [&](const DatasetBundle& data, const GcnModel& model, std::size_t v) {
    TrainConfig tc = cfg;
    tc.mask_iterations = v;
    std::vector<double> t;
    for (std::size_t r = 0; r < std::max<std::size_t>(1, repeats); ++r)
      t.push_back(time_gather(model, data.graph, data.features, tc, cfg.seed + r));
    return median(t);
  };
  for (const auto& [data, model] : graphs)
    report.by_edges.push_back({data.graph.num_undirected_edges(), views, measure(data, model, views)});
  for (std::size_t k = 1; k < report.by_edges.size(); ++k) {
    const auto& a = report.by_edges[k - 1];
    const auto& b = report.by_edges[k];
    report.edge_ratio_of_ratios.push_back((b.gather_seconds / a.gather_seconds) /
                                          (static_cast<double>(b.edges) / static_cast<double>(a.edges)));
  }
  const auto& [data0, model0] = graphs.front();
  const std::size_t e0 = data0.graph.num_undirected_edges();
  report.by_views.push_back({e0, views, measure(data0, model0, views)});
  report.by_views.push_back({e0, 2 * views, measure(data0, model0, 2 * views)});
  report.views_ratio = report.by_views[1].gather_seconds / report.by_views[0].gather_seconds;
  return report;
}

json to_json(const OverheadReport& r) {
  return {{"backbone_seconds", r.backbone_seconds},
          {"legnn_seconds", r.legnn_seconds},
          {"gather_seconds", r.gather_seconds},
          {"legnn_over_backbone", r.ratio},
          {"gather_events", r.gather_events}};
}

json to_json(const ScalingReport& r) {
  auto points = [](const std::vector<ScalingPoint>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back({{"edges", p.edges}, {"views", p.views}, {"gather_seconds", p.gather_seconds}});
    return a;
  };
  return {{"by_edges", points(r.by_edges)},
          {"by_views", points(r.by_views)},
          {"edge_ratio_of_ratios", r.edge_ratio_of_ratios},
          {"views_ratio", r.views_ratio}};
}

}  // namespace legnn
