#include "wotboost/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wotboost/error.hpp"
#include "wotboost/neighbors.hpp"

namespace wotboost {

AllocationPlan allocate_counts(std::span<const double> weights,
                               std::size_t total) {
  if (weights.empty()) throw EmptyDataset("cannot allocate over zero parents");
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidArgument("allocation weights must be finite and non-negative");
    }
    sum += w;
  }
  AllocationPlan plan;
  plan.counts.assign(weights.size(), 0);
  plan.total = total;
  if (total == 0) return plan;
  if (sum <= 0.0) throw AllZeroWeights("allocation weights sum to zero");

  // Floor of each real-valued target, then hand out the shortfall one unit
  // at a time by largest fractional remainder (lower index wins ties).
  std::size_t assigned = 0;
  std::vector<std::pair<double, std::size_t>> remainders;
  remainders.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0.0) continue;
    const double target = static_cast<double>(total) * (weights[i] / sum);
    const double floored = std::floor(target);
    plan.counts[i] = static_cast<std::size_t>(floored);
    assigned += plan.counts[i];
    remainders.emplace_back(target - floored, i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t j = 0; assigned < total; ++j, ++assigned) {
    plan.counts[remainders[j % remainders.size()].second] += 1;
  }
  return plan;
}

namespace {

// Shared interpolation core: walks parents in row order and, for each unit
// of quota, draws a neighbor then a factor. The fixed draw order makes a
// batch a pure function of (pool, plan, k, seed).
SynthesisBatch interpolate(const Matrix& pool, const AllocationPlan& plan,
                           std::size_t k, Rng& rng) {
  SynthesisBatch batch;
  batch.samples = Matrix(0, pool.cols);
  if (plan.total == 0) return batch;
  if (pool.rows < k + 1) {
    throw NotEnoughNeighbors("minority pool of " + std::to_string(pool.rows) +
                             " rows cannot provide " + std::to_string(k) +
                             " neighbors each");
  }
  const auto neighbors = neighbor_table(pool, k);
  std::vector<double> synthetic(pool.cols);
  for (std::size_t parent = 0; parent < plan.counts.size(); ++parent) {
    for (std::size_t unit = 0; unit < plan.counts[parent]; ++unit) {
      const std::size_t pick = neighbors[parent][rng.index(k)];
      const double lambda = rng.unit();
      const auto p = pool.row(parent);
      const auto q = pool.row(pick);
      for (std::size_t c = 0; c < pool.cols; ++c) {
        synthetic[c] = p[c] + lambda * (q[c] - p[c]);
      }
      batch.samples.append_row(synthetic);
      batch.parent_indices.push_back(parent);
      batch.lambdas.push_back(lambda);
    }
  }
  return batch;
}

}  // namespace

SynthesisBatch smote(const Matrix& minority, std::size_t n_synthetic,
                     std::size_t k, Rng& rng) {
  if (minority.rows == 0) throw EmptyDataset("empty minority pool");
  const std::vector<double> uniform(minority.rows, 1.0);
  return interpolate(minority, allocate_counts(uniform, n_synthetic), k, rng);
}

SynthesisBatch adasyn(const Dataset& train, std::size_t k, double beta,
                      Rng& rng) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("beta must be positive and finite");
  }
  const ClassCounts counts = class_counts(train);
  if (counts.minority == 0 || counts.majority == 0) {
    throw SingleClass("adasyn needs both classes");
  }
  SynthesisBatch batch;
  batch.samples = Matrix(0, train.n_features());
  if (counts.majority <= counts.minority) return batch;
  const auto total = static_cast<std::size_t>(std::llround(
      beta * static_cast<double>(counts.majority - counts.minority)));
  if (total == 0) return batch;

  // Difficulty of each minority sample: majority share of its k nearest
  // neighbors across the whole training set.
  const auto minority_rows = class_indices(train, ClassLabel::Minority);
  std::vector<double> difficulty;
  difficulty.reserve(minority_rows.size());
  double difficulty_sum = 0.0;
  for (std::size_t row : minority_rows) {
    const std::size_t majority_hits =
        neighbor_class_count(train, row, k, ClassLabel::Majority);
    const double r =
        static_cast<double>(majority_hits) / static_cast<double>(k);
    difficulty.push_back(r);
    difficulty_sum += r;
  }
  if (difficulty_sum <= 0.0) {
    difficulty.assign(difficulty.size(), 1.0);
  }
  return interpolate(class_features(train, ClassLabel::Minority),
                     allocate_counts(difficulty, total), k, rng);
}

SynthesisBatch weighted_batch(const Dataset& train,
                              const WeightDistribution& d,
                              std::size_t n_synthetic, std::size_t k,
                              Rng& rng) {
  if (d.size() != train.size()) {
    throw LengthMismatch("weight distribution does not match dataset size");
  }
  const auto minority_rows = class_indices(train, ClassLabel::Minority);
  if (minority_rows.empty()) throw SingleClass("no minority samples to grow");
  SynthesisBatch batch;
  batch.samples = Matrix(0, train.n_features());
  if (n_synthetic == 0) return batch;
  std::vector<double> minority_weights;
  minority_weights.reserve(minority_rows.size());
  for (std::size_t row : minority_rows) minority_weights.push_back(d[row]);
  return interpolate(class_features(train, ClassLabel::Minority),
                     allocate_counts(minority_weights, n_synthetic), k, rng);
}

Dataset weighted_oversample(const Dataset& train, const WeightDistribution& d,
                            std::size_t n_synthetic, std::size_t k, Rng& rng) {
  return augment(train, weighted_batch(train, d, n_synthetic, k, rng));
}

Dataset augment(const Dataset& train, const SynthesisBatch& batch) {
  if (!batch.empty() && batch.samples.cols != train.n_features()) {
    throw DimensionMismatch("batch width does not match dataset");
  }
  Dataset out = train;
  for (std::size_t i = 0; i < batch.samples.rows; ++i) {
    out.features.append_row(batch.samples.row(i));
    out.labels.push_back(ClassLabel::Minority);
  }
  return out;
}

}  // namespace wotboost
