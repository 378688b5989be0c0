#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wotboost/matrix.hpp"

namespace wotboost {

enum class ClassLabel : std::uint8_t { Majority = 0, Minority = 1 };

/// Binary-labelled sample set. Immutable after construction; row order is
/// the order samples were supplied in.
struct Dataset {
  Matrix features;
  std::vector<ClassLabel> labels;
  std::vector<std::string> feature_names;  // empty when unnamed

  std::size_t size() const { return labels.size(); }
  std::size_t n_features() const { return features.cols; }
};

struct ClassCounts {
  std::size_t majority = 0;
  std::size_t minority = 0;
};

/// Validates and assembles a dataset.
/// Throws EmptyDataset, LengthMismatch, DimensionMismatch or NonFiniteValue.
/// A dataset holding a single class is legal here; operations that need both
/// classes reject it themselves.
Dataset make_dataset(Matrix features, std::vector<ClassLabel> labels,
                     std::vector<std::string> feature_names = {});

ClassCounts class_counts(const Dataset& ds);

/// Rows of the given class, in dataset row order.
std::vector<std::size_t> class_indices(const Dataset& ds, ClassLabel label);

/// Feature sub-matrix of the given class, rows in dataset row order.
Matrix class_features(const Dataset& ds, ClassLabel label);

/// majority count / minority count. Throws SingleClass when the minority is
/// empty (the ratio would be infinite).
double imbalance_ratio(const Dataset& ds);

/// Dataset made of the selected rows, in the order given.
Dataset take_rows(const Dataset& ds, const std::vector<std::size_t>& rows);

struct SplitSpec {
  double train_fraction = 0.5;
  std::uint64_t seed = 0;
  bool stratified = true;
};

/// Random train/test partition. Stratified mode splits each class
/// separately so both sides keep both classes and per-class train counts
/// land within one sample of fraction * class_count. Both halves come back
/// in ascending original row order; the same spec always yields the same
/// partition.
std::pair<Dataset, Dataset> stratified_split(const Dataset& ds,
                                             const SplitSpec& spec);

/// Normalized non-negative sample weights; the boosting distribution D_t.
class WeightDistribution {
 public:
  /// D_1: every sample gets 1/m.
  static WeightDistribution uniform(std::size_t m);

  /// Normalizes the given non-negative weights to sum to one.
  /// Throws AllZeroWeights when the sum is zero, InvalidArgument on a
  /// negative or non-finite entry, EmptyDataset when empty.
  explicit WeightDistribution(std::vector<double> raw);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const { return weights_; }

  double sum() const;

 private:
  WeightDistribution() = default;
  std::vector<double> weights_;
};

}  // namespace wotboost
