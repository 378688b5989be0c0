#pragma once

#include <cstddef>
#include <vector>

#include "wotboost/dataset.hpp"

namespace wotboost {

enum class MinoritySafety { Safe, Unsafe };

struct ProfileOptions {
  std::size_t k = 5;
  /// Min-max scale features before measuring distances. Off by default:
  /// raw feature space is what the reference characterizations use.
  bool normalize = false;
};

/// Labels every minority sample, in dataset row order. A sample is safe
/// when at most one of its k nearest neighbors (whole dataset, itself
/// excluded) belongs to the majority class.
/// Throws SingleClass without minority samples, NotEnoughNeighbors when the
/// dataset is too small to supply k neighbors.
std::vector<MinoritySafety> classify_minority_safety(
    const Dataset& ds, const ProfileOptions& options = {});

/// Difficulty summary of a dataset.
struct DifficultyProfile {
  std::size_t samples = 0;
  std::size_t features = 0;
  ClassCounts counts;
  double imbalance_ratio = 0.0;
  std::size_t n_safe = 0;
  std::size_t n_unsafe = 0;
  double unsafe_pct = 0.0;  // percentage of minority samples
};

DifficultyProfile profile(const Dataset& ds, const ProfileOptions& options = {});

/// Copy of the dataset with every feature min-max scaled to [0, 1].
/// Constant features are left at zero.
Dataset min_max_scaled(const Dataset& ds);

}  // namespace wotboost
