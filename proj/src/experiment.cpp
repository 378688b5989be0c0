#include "wotboost/experiment.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "wotboost/error.hpp"
#include "wotboost/samplers.hpp"
#include "wotboost/tree.hpp"

namespace wotboost {

std::string model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::DecisionTree: return "DT";
    case ModelKind::SmoteTree: return "SMOTE+DT";
    case ModelKind::AdasynTree: return "ADASYN+DT";
    case ModelKind::SmoteBoost: return "SMOTEBoost";
    case ModelKind::WotBoost: return "WOTBoost";
  }
  throw InvalidArgument("unhandled model kind");
}

ModelKind parse_model(const std::string& name) {
  for (ModelKind kind : kAllModels) {
    if (model_name(kind) == name) return kind;
  }
  throw InvalidArgument("unknown model '" + name +
                        "' (expected DT, SMOTE+DT, ADASYN+DT, SMOTEBoost or "
                        "WOTBoost)");
}

std::string metric_name(MetricId id) {
  switch (id) {
    case MetricId::OverallAccuracy: return "OA";
    case MetricId::Precision: return "Precision";
    case MetricId::Recall: return "Recall";
    case MetricId::FMeasure: return "F_measure";
    case MetricId::GMean: return "G_mean";
    case MetricId::Specificity: return "Specificity";
    case MetricId::Auc: return "AUC";
  }
  throw InvalidArgument("unhandled metric id");
}

FeatureScaler FeatureScaler::fit(const Dataset& train) {
  FeatureScaler s;
  s.mins_.assign(train.n_features(), 0.0);
  s.ranges_.assign(train.n_features(), 1.0);
  for (std::size_t c = 0; c < train.n_features(); ++c) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < train.size(); ++r) {
      lo = std::min(lo, train.features.at(r, c));
      hi = std::max(hi, train.features.at(r, c));
    }
    s.mins_[c] = lo;
    s.ranges_[c] = hi - lo > 0.0 ? hi - lo : 1.0;
  }
  return s;
}

Dataset FeatureScaler::transform(const Dataset& ds) const {
  if (ds.n_features() != mins_.size()) {
    throw DimensionMismatch("scaler was fitted on a different width");
  }
  Dataset out = ds;
  for (std::size_t c = 0; c < ds.n_features(); ++c) {
    for (std::size_t r = 0; r < ds.size(); ++r) {
      out.features.at(r, c) = (ds.features.at(r, c) - mins_[c]) / ranges_[c];
    }
  }
  return out;
}

namespace {

BoostConfig boost_config(const ExperimentConfig& config) {
  BoostConfig bc;
  bc.rounds = config.rounds;
  bc.k = config.k;
  bc.tree.max_depth = config.max_depth;
  bc.tree.min_samples_leaf = config.min_samples_leaf;
  bc.tree.leaf_smoothing = config.leaf_smoothing;
  return bc;
}

std::vector<ClassLabel> train_and_predict(const Dataset& train,
                                          const Dataset& test,
                                          const ExperimentConfig& config,
                                          ModelKind model, Rng& rng) {
  std::vector<ClassLabel> labels(test.size());
  const auto score_tree = [&](const DecisionTree& tree) {
    for (std::size_t i = 0; i < test.size(); ++i) {
      labels[i] = tree.predict_label(test.features.row(i));
    }
  };
  const TreeConfig tree_config = boost_config(config).tree;
  const std::vector<double> uniform(train.size(), 1.0);

  switch (model) {
    case ModelKind::DecisionTree: {
      score_tree(fit_tree(train, uniform, tree_config));
      break;
    }
    case ModelKind::SmoteTree: {
      const ClassCounts c = class_counts(train);
      const std::size_t quota =
          c.majority > c.minority ? c.majority - c.minority : 0;
      const SynthesisBatch batch =
          smote(class_features(train, ClassLabel::Minority), quota, config.k,
                rng);
      const Dataset grown = augment(train, batch);
      score_tree(fit_tree(grown, std::vector<double>(grown.size(), 1.0),
                          tree_config));
      break;
    }
    case ModelKind::AdasynTree: {
      const SynthesisBatch batch = adasyn(train, config.k, 1.0, rng);
      const Dataset grown = augment(train, batch);
      score_tree(fit_tree(grown, std::vector<double>(grown.size(), 1.0),
                          tree_config));
      break;
    }
    case ModelKind::SmoteBoost:
    case ModelKind::WotBoost: {
      const SynthesisStrategy strategy = model == ModelKind::WotBoost
                                             ? SynthesisStrategy::Weighted
                                             : SynthesisStrategy::UniformSmote;
      const BoostedEnsemble ensemble =
          train_boosted(train, boost_config(config), strategy, rng);
      for (std::size_t i = 0; i < test.size(); ++i) {
        labels[i] = predict_ensemble(ensemble, test.features.row(i)).label;
      }
      break;
    }
  }
  return labels;
}

}  // namespace

RunOutcome evaluate_model_run(const Dataset& ds, const ExperimentConfig& config,
                              ModelKind model, std::size_t run_index) {
  SplitSpec split_spec;
  split_spec.train_fraction = config.train_fraction;
  split_spec.seed = config.base_seed + run_index;
  split_spec.stratified = true;
  auto [train, test] = stratified_split(ds, split_spec);

  if (config.normalize_features) {
    const FeatureScaler scaler = FeatureScaler::fit(train);
    train = scaler.transform(train);
    test = scaler.transform(test);
  }

  // Each model draws from its own derived stream, so adding or removing a
  // model from the roster never shifts the draws another model sees.
  Rng rng(derive_seed(config.base_seed + run_index,
                      static_cast<std::uint64_t>(model) + 1));

  RunOutcome outcome;
  outcome.train_counts = class_counts(train);
  outcome.test_counts = class_counts(test);
  const std::vector<ClassLabel> labels =
      train_and_predict(train, test, config, model, rng);
  outcome.metrics = compute_metrics(confusion(test.labels, labels));
  // The AUC column ranks the hard 0/1 predictions, which collapses the rank
  // statistic to (recall + specificity) / 2. Ranking the graded vote scores
  // instead reads noticeably higher, so the two conventions cannot share a
  // comparison table; this column follows the prediction-level one.
  std::vector<double> predicted(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    predicted[i] = labels[i] == ClassLabel::Minority ? 1.0 : 0.0;
  }
  try {
    outcome.metrics.auc = roc_auc(test.labels, predicted);
  } catch (const SingleClass&) {
    outcome.metrics.auc = std::nullopt;
  }
  return outcome;
}

namespace {

std::optional<double> metric_value(const MetricReport& m, MetricId id) {
  switch (id) {
    case MetricId::OverallAccuracy: return m.overall_accuracy;
    case MetricId::Precision: return m.precision;
    case MetricId::Recall: return m.recall;
    case MetricId::FMeasure: return m.f1;
    case MetricId::GMean: return m.g_mean;
    case MetricId::Specificity: return m.specificity;
    case MetricId::Auc: return m.auc;
  }
  return std::nullopt;
}

CellAggregate aggregate_cell(const std::vector<std::optional<double>>& values) {
  CellAggregate cell;
  double sum = 0.0;
  for (const auto& v : values) {
    if (v) {
      sum += *v;
      ++cell.n_defined;
    } else {
      ++cell.n_undefined;
    }
  }
  if (cell.n_defined > 0) {
    cell.mean = sum / static_cast<double>(cell.n_defined);
    double sq = 0.0;
    for (const auto& v : values) {
      if (v) {
        const double d = *v - cell.mean;
        sq += d * d;
      }
    }
    cell.stddev = std::sqrt(sq / static_cast<double>(cell.n_defined));
  }
  return cell;
}

}  // namespace

ExperimentResult run_experiment(
    const ExperimentConfig& config,
    const std::vector<std::pair<std::string, Dataset>>& datasets) {
  if (config.runs == 0) throw InvalidArgument("runs must be positive");
  if (config.models.empty()) throw InvalidArgument("no models configured");
  ExperimentResult result;
  result.runs = config.runs;
  result.base_seed = config.base_seed;
  result.k = config.k;
  result.rounds = config.rounds;
  result.max_depth = config.max_depth;
  result.train_fraction = config.train_fraction;
  result.normalize_features = config.normalize_features;
  for (ModelKind m : config.models) result.model_order.push_back(model_name(m));

  for (const auto& [name, ds] : datasets) {
    DatasetAggregate agg;
    agg.dataset = name;
    agg.profile = profile(ds, ProfileOptions{config.k, false});
    for (ModelKind model : config.models) {
      ModelAggregate model_agg;
      std::array<std::vector<std::optional<double>>, kMetricCount> columns;
      for (std::size_t r = 0; r < config.runs; ++r) {
        try {
          const RunOutcome outcome = evaluate_model_run(ds, config, model, r);
          for (std::size_t m = 0; m < kMetricCount; ++m) {
            columns[m].push_back(
                metric_value(outcome.metrics, static_cast<MetricId>(m)));
          }
        } catch (const Error& e) {
          ++model_agg.failed_runs;
          model_agg.failure_note = e.what();
        }
      }
      for (std::size_t m = 0; m < kMetricCount; ++m) {
        model_agg.cells[m] = aggregate_cell(columns[m]);
      }
      agg.models[model_name(model)] = std::move(model_agg);
    }
    result.datasets.push_back(std::move(agg));
  }
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  std::vector<std::pair<std::string, Dataset>> datasets;
  for (const DatasetSource& src : config.datasets) {
    datasets.emplace_back(src.name, load_csv(src.path, src.schema));
  }
  if (datasets.empty()) throw InvalidArgument("no datasets configured");
  return run_experiment(config, datasets);
}

namespace {

nlohmann::json cell_to_json(const CellAggregate& c) {
  return {{"mean", c.mean},
          {"stddev", c.stddev},
          {"n_defined", c.n_defined},
          {"n_undefined", c.n_undefined}};
}

CellAggregate cell_from_json(const nlohmann::json& j) {
  CellAggregate c;
  c.mean = j.at("mean").get<double>();
  c.stddev = j.at("stddev").get<double>();
  c.n_defined = j.at("n_defined").get<std::size_t>();
  c.n_undefined = j.at("n_undefined").get<std::size_t>();
  return c;
}

}  // namespace

std::string result_to_json(const ExperimentResult& result) {
  nlohmann::json root;
  root["runs"] = result.runs;
  root["base_seed"] = result.base_seed;
  root["k"] = result.k;
  root["rounds"] = result.rounds;
  root["max_depth"] = result.max_depth;
  root["train_fraction"] = result.train_fraction;
  root["normalize_features"] = result.normalize_features;
  root["model_order"] = result.model_order;
  root["datasets"] = nlohmann::json::array();
  for (const DatasetAggregate& ds : result.datasets) {
    nlohmann::json entry;
    entry["name"] = ds.dataset;
    entry["profile"] = {{"samples", ds.profile.samples},
                        {"features", ds.profile.features},
                        {"majority", ds.profile.counts.majority},
                        {"minority", ds.profile.counts.minority},
                        {"imbalance_ratio", ds.profile.imbalance_ratio},
                        {"n_safe", ds.profile.n_safe},
                        {"n_unsafe", ds.profile.n_unsafe},
                        {"unsafe_pct", ds.profile.unsafe_pct}};
    entry["models"] = nlohmann::json::object();
    for (const auto& [name, model] : ds.models) {
      nlohmann::json m;
      m["failed_runs"] = model.failed_runs;
      m["failure_note"] = model.failure_note;
      for (std::size_t i = 0; i < kMetricCount; ++i) {
        m["metrics"][metric_name(static_cast<MetricId>(i))] =
            cell_to_json(model.cells[i]);
      }
      entry["models"][name] = std::move(m);
    }
    root["datasets"].push_back(std::move(entry));
  }
  return root.dump(2) + "\n";
}

ExperimentResult result_from_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("results file is not valid JSON: ") +
                     e.what());
  }
  try {
    ExperimentResult result;
    result.runs = root.at("runs").get<std::size_t>();
    result.base_seed = root.at("base_seed").get<std::uint64_t>();
    result.k = root.at("k").get<std::size_t>();
    result.rounds = root.at("rounds").get<std::size_t>();
    result.max_depth = root.at("max_depth").get<std::size_t>();
    result.train_fraction = root.at("train_fraction").get<double>();
    result.normalize_features = root.at("normalize_features").get<bool>();
    result.model_order =
        root.at("model_order").get<std::vector<std::string>>();
    for (const auto& entry : root.at("datasets")) {
      DatasetAggregate ds;
      ds.dataset = entry.at("name").get<std::string>();
      const auto& p = entry.at("profile");
      ds.profile.samples = p.at("samples").get<std::size_t>();
      ds.profile.features = p.at("features").get<std::size_t>();
      ds.profile.counts.majority = p.at("majority").get<std::size_t>();
      ds.profile.counts.minority = p.at("minority").get<std::size_t>();
      ds.profile.imbalance_ratio = p.at("imbalance_ratio").get<double>();
      ds.profile.n_safe = p.at("n_safe").get<std::size_t>();
      ds.profile.n_unsafe = p.at("n_unsafe").get<std::size_t>();
      ds.profile.unsafe_pct = p.at("unsafe_pct").get<double>();
      for (const auto& [name, m] : entry.at("models").items()) {
        ModelAggregate model;
        model.failed_runs = m.at("failed_runs").get<std::size_t>();
        model.failure_note = m.at("failure_note").get<std::string>();
        for (std::size_t i = 0; i < kMetricCount; ++i) {
          model.cells[i] = cell_from_json(
              m.at("metrics").at(metric_name(static_cast<MetricId>(i))));
        }
        ds.models[name] = std::move(model);
      }
      result.datasets.push_back(std::move(ds));
    }
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("results file is missing fields: ") +
                     e.what());
  }
}

}  // namespace wotboost
