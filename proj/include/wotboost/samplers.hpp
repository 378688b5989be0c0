#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wotboost/dataset.hpp"
#include "wotboost/matrix.hpp"
#include "wotboost/rng.hpp"

namespace wotboost {

/// Integer synthesis quota per parent sample.
struct AllocationPlan {
  std::vector<std::size_t> counts;
  std::size_t total = 0;
};

/// Splits `total` into integer counts proportional to `weights` by largest
/// remainder, ties toward the lower index. Guarantees the counts sum to
/// `total`, each count is within one of its real-valued target, and a
/// zero-weight entry gets zero.
/// Throws AllZeroWeights when the weights sum to zero (and total > 0),
/// InvalidArgument on a negative or non-finite weight, EmptyDataset when
/// `weights` is empty.
AllocationPlan allocate_counts(std::span<const double> weights,
                               std::size_t total);

/// Synthetic minority samples plus their provenance.
/// Every row satisfies
///   samples.row(j) == parent + lambdas[j] * (neighbor - parent)
/// for the recorded parent and one of that parent's k nearest neighbors
/// within the pool the batch was drawn from.
struct SynthesisBatch {
  Matrix samples;
  std::vector<std::size_t> parent_indices;  // rows into the source pool
  std::vector<double> lambdas;              // interpolation factors in [0, 1]

  std::size_t size() const { return parent_indices.size(); }
  bool empty() const { return parent_indices.empty(); }
};

/// Classic SMOTE over a minority-only pool: quotas are uniform across
/// parents, each synthetic interpolates toward a uniformly drawn one of the
/// parent's k nearest minority neighbors.
/// Throws NotEnoughNeighbors when the pool holds fewer than k + 1 rows,
/// EmptyDataset on an empty pool. n_synthetic == 0 yields an empty batch.
SynthesisBatch smote(const Matrix& minority, std::size_t n_synthetic,
                     std::size_t k, Rng& rng);

/// ADASYN: quotas follow per-sample difficulty, the share of majority
/// samples among each minority sample's k nearest neighbors in the full
/// dataset. The total is beta * (n_majority - n_minority), clamped to zero
/// when the dataset is already balanced. When every minority sample has
/// difficulty zero the quota falls back to uniform. Parent indices refer to
/// minority rows in dataset row order; interpolation runs over minority-only
/// neighborhoods as in smote().
SynthesisBatch adasyn(const Dataset& train, std::size_t k, double beta,
                      Rng& rng);

/// Weighted minority oversampling: quotas are proportional to the boosting
/// weights of the minority samples (majority weights are ignored). Parent
/// indices refer to minority rows in dataset row order.
/// Throws AllZeroWeights when every minority weight is zero and
/// n_synthetic > 0, LengthMismatch when the distribution size differs from
/// the dataset.
SynthesisBatch weighted_batch(const Dataset& train,
                              const WeightDistribution& d,
                              std::size_t n_synthetic, std::size_t k,
                              Rng& rng);

/// weighted_batch() plus augment(): the per-round temporary training set.
Dataset weighted_oversample(const Dataset& train, const WeightDistribution& d,
                            std::size_t n_synthetic, std::size_t k, Rng& rng);

/// Appends the batch rows to the dataset as minority samples.
Dataset augment(const Dataset& train, const SynthesisBatch& batch);

}  // namespace wotboost
