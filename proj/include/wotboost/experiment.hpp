#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wotboost/analysis.hpp"
#include "wotboost/boosting.hpp"
#include "wotboost/csv.hpp"
#include "wotboost/dataset.hpp"
#include "wotboost/metrics.hpp"

namespace wotboost {

enum class ModelKind {
  DecisionTree,
  SmoteTree,
  AdasynTree,
  SmoteBoost,
  WotBoost,
};

inline constexpr std::array<ModelKind, 5> kAllModels = {
    ModelKind::DecisionTree, ModelKind::SmoteTree, ModelKind::AdasynTree,
    ModelKind::SmoteBoost, ModelKind::WotBoost};

std::string model_name(ModelKind kind);

/// Inverse of model_name; throws InvalidArgument on an unknown name.
ModelKind parse_model(const std::string& name);

/// Metrics tracked per run, in report column order.
enum class MetricId {
  OverallAccuracy,
  Precision,
  Recall,
  FMeasure,
  GMean,
  Specificity,
  Auc,
};

inline constexpr std::size_t kMetricCount = 7;
std::string metric_name(MetricId id);

struct DatasetSource {
  std::string name;
  std::string path;
  CsvSchema schema;
};

struct ExperimentConfig {
  std::vector<DatasetSource> datasets;
  std::vector<ModelKind> models{kAllModels.begin(), kAllModels.end()};
  std::size_t runs = 100;
  double train_fraction = 0.5;
  std::uint64_t base_seed = 17;
  /// Min-max scaling fitted on each training split, applied to both splits.
  bool normalize_features = true;
  std::size_t k = 5;
  std::size_t rounds = 10;
  std::size_t max_depth = 8;
  std::size_t min_samples_leaf = 1;
  double leaf_smoothing = 1.0;
};

/// Min-max column scaler fitted on one dataset and applied to others.
/// Transformed training features land in [0, 1]; other data may fall
/// outside, which is left as is.
class FeatureScaler {
 public:
  static FeatureScaler fit(const Dataset& train);
  Dataset transform(const Dataset& ds) const;

 private:
  std::vector<double> mins_;
  std::vector<double> ranges_;
};

/// One model evaluated on one run's test split.
struct RunOutcome {
  MetricReport metrics;
  ClassCounts train_counts;
  ClassCounts test_counts;
};

/// Executes a single (dataset, model, run) cell of the protocol: stratified
/// split seeded with base_seed + run_index (identical across models),
/// optional scaling fitted on the training half, model training on a
/// model-specific derived stream, then test-set metrics.
RunOutcome evaluate_model_run(const Dataset& ds, const ExperimentConfig& config,
                              ModelKind model, std::size_t run_index);

/// Aggregate of one metric cell across runs.
struct CellAggregate {
  double mean = 0.0;
  double stddev = 0.0;       // population standard deviation
  std::size_t n_defined = 0;
  std::size_t n_undefined = 0;
};

struct ModelAggregate {
  std::array<CellAggregate, kMetricCount> cells;
  std::size_t failed_runs = 0;
  std::string failure_note;  // message of the last failure, if any
};

struct DatasetAggregate {
  std::string dataset;
  DifficultyProfile profile;
  std::map<std::string, ModelAggregate> models;  // keyed by model_name
};

struct ExperimentResult {
  std::vector<DatasetAggregate> datasets;
  std::vector<std::string> model_order;  // as configured
  std::size_t runs = 0;
  std::uint64_t base_seed = 0;
  std::size_t k = 0;
  std::size_t rounds = 0;
  std::size_t max_depth = 0;
  double train_fraction = 0.5;
  bool normalize_features = true;
};

/// Full protocol over preloaded datasets: every (dataset, model, run) cell,
/// aggregated in ascending run order. A run where a model throws counts as
/// a failure for that model; a run where a metric is undefined is excluded
/// from that metric's mean. For every cell,
/// n_defined + n_undefined + failed_runs == runs.
ExperimentResult run_experiment(
    const ExperimentConfig& config,
    const std::vector<std::pair<std::string, Dataset>>& datasets);

/// Loads config.datasets from disk, then runs.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Stable JSON round trip used by the bench/report commands.
std::string result_to_json(const ExperimentResult& result);
ExperimentResult result_from_json(const std::string& text);

}  // namespace wotboost
