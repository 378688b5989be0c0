#include "wotboost/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wotboost/error.hpp"
#include "wotboost/rng.hpp"

namespace wotboost {

Dataset make_dataset(Matrix features, std::vector<ClassLabel> labels,
                     std::vector<std::string> feature_names) {
  if (features.rows == 0 || labels.empty()) {
    throw EmptyDataset("dataset needs at least one sample");
  }
  if (features.rows != labels.size()) {
    throw LengthMismatch("feature rows (" + std::to_string(features.rows) +
                         ") and labels (" + std::to_string(labels.size()) +
                         ") differ");
  }
  if (features.values.size() != features.rows * features.cols) {
    throw DimensionMismatch("feature buffer does not match rows x cols");
  }
  if (!feature_names.empty() && feature_names.size() != features.cols) {
    throw LengthMismatch("feature names do not match column count");
  }
  for (double v : features.values) {
    if (!std::isfinite(v)) {
      throw NonFiniteValue("feature matrix contains a non-finite value");
    }
  }
  return Dataset{std::move(features), std::move(labels),
                 std::move(feature_names)};
}

ClassCounts class_counts(const Dataset& ds) {
  ClassCounts c;
  for (ClassLabel l : ds.labels) {
    if (l == ClassLabel::Majority) {
      ++c.majority;
    } else {
      ++c.minority;
    }
  }
  return c;
}

std::vector<std::size_t> class_indices(const Dataset& ds, ClassLabel label) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds.labels[i] == label) out.push_back(i);
  }
  return out;
}

Matrix class_features(const Dataset& ds, ClassLabel label) {
  Matrix m(0, ds.n_features());
  m.cols = ds.n_features();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds.labels[i] == label) m.append_row(ds.features.row(i));
  }
  return m;
}

double imbalance_ratio(const Dataset& ds) {
  const ClassCounts c = class_counts(ds);
  if (c.minority == 0) {
    throw SingleClass("imbalance ratio undefined without minority samples");
  }
  return static_cast<double>(c.majority) / static_cast<double>(c.minority);
}

Dataset take_rows(const Dataset& ds, const std::vector<std::size_t>& rows) {
  Matrix m(0, ds.n_features());
  std::vector<ClassLabel> labels;
  labels.reserve(rows.size());
  for (std::size_t r : rows) {
    m.append_row(ds.features.row(r));
    labels.push_back(ds.labels[r]);
  }
  return Dataset{std::move(m), std::move(labels), ds.feature_names};
}

namespace {

// Splits one index pool; appends the first `train_count` shuffled entries to
// train and the rest to test.
void split_pool(std::vector<std::size_t> pool, double fraction, Rng& rng,
                std::vector<std::size_t>& train, std::vector<std::size_t>& test) {
  if (pool.size() < 2) {
    throw TooFewSamples("cannot split a class with fewer than 2 samples");
  }
  rng.shuffle(pool);
  auto want = static_cast<std::size_t>(
      std::llround(fraction * static_cast<double>(pool.size())));
  want = std::clamp<std::size_t>(want, 1, pool.size() - 1);
  train.insert(train.end(), pool.begin(), pool.begin() + want);
  test.insert(test.end(), pool.begin() + want, pool.end());
}

}  // namespace

std::pair<Dataset, Dataset> stratified_split(const Dataset& ds,
                                             const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    throw InvalidArgument("train_fraction must lie in (0, 1)");
  }
  Rng rng(spec.seed);
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> test_rows;
  if (spec.stratified) {
    for (ClassLabel label : {ClassLabel::Majority, ClassLabel::Minority}) {
      auto pool = class_indices(ds, label);
      if (pool.empty()) continue;
      split_pool(std::move(pool), spec.train_fraction, rng, train_rows,
                 test_rows);
    }
  } else {
    std::vector<std::size_t> pool(ds.size());
    std::iota(pool.begin(), pool.end(), 0);
    split_pool(std::move(pool), spec.train_fraction, rng, train_rows,
               test_rows);
  }
  std::sort(train_rows.begin(), train_rows.end());
  std::sort(test_rows.begin(), test_rows.end());
  return {take_rows(ds, train_rows), take_rows(ds, test_rows)};
}

WeightDistribution WeightDistribution::uniform(std::size_t m) {
  if (m == 0) throw EmptyDataset("cannot build weights for zero samples");
  WeightDistribution d;
  d.weights_.assign(m, 1.0 / static_cast<double>(m));
  return d;
}

WeightDistribution::WeightDistribution(std::vector<double> raw)
    : weights_(std::move(raw)) {
  if (weights_.empty()) throw EmptyDataset("empty weight vector");
  double total = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidArgument("weights must be finite and non-negative");
    }
    total += w;
  }
  if (total <= 0.0) throw AllZeroWeights("weight vector sums to zero");
  for (double& w : weights_) w /= total;
}

double WeightDistribution::sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

}  // namespace wotboost
