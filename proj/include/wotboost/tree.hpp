#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wotboost/dataset.hpp"

namespace wotboost {

struct TreeConfig {
  std::size_t max_depth = 8;
  std::size_t min_samples_leaf = 1;
  double leaf_smoothing = 1.0;  // Laplace count added per class at leaves
};

struct TreeNode {
  std::int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0.0;     // x[feature] <= threshold routes left
  std::int32_t left = -1;
  std::int32_t right = -1;
  double p_majority = 0.0;    // leaf scores; zero on internal nodes
  double p_minority = 0.0;
};

struct ClassScores {
  double majority = 0.0;
  double minority = 0.0;
};

/// CART-style binary classification tree.
class DecisionTree {
 public:
  /// Smoothed class-probability estimates of the leaf x falls into.
  /// The two scores sum to one (within rounding).
  ClassScores predict_scores(std::span<const double> x) const;

  /// Higher score wins; an exact tie goes to the majority class.
  ClassLabel predict_label(std::span<const double> x) const;

  std::size_t depth() const { return depth_; }
  std::size_t n_features() const { return n_features_; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }

  /// Indented one-node-per-line rendering, for inspection and debugging.
  std::string to_text() const;

 private:
  friend DecisionTree fit_tree(const Dataset&, std::span<const double>,
                               const TreeConfig&);
  std::vector<TreeNode> nodes_;
  std::size_t depth_ = 0;
  std::size_t n_features_ = 0;
};

/// Fits a tree by greedy weighted-Gini splits on midpoint thresholds.
///
/// Candidate splits are scanned in ascending feature index, then ascending
/// threshold, and a new candidate must strictly beat the incumbent, so ties
/// resolve toward the lower feature and threshold and the fit is fully
/// deterministic. Zero-weight samples are dropped before fitting, and the
/// remaining weights are rescaled to sum to their count; both of these leave
/// the fitted tree identical, so scaling all weights by a constant or
/// appending a zero-weight sample changes nothing.
///
/// Leaf scores are (class_mass + s) / (node_mass + 2s) with
/// s = leaf_smoothing.
///
/// Throws EmptyDataset, LengthMismatch when weights and samples disagree,
/// AllZeroWeights when no sample carries positive weight, InvalidArgument
/// on a negative or non-finite weight.
DecisionTree fit_tree(const Dataset& ds, std::span<const double> sample_weights,
                      const TreeConfig& config = {});

}  // namespace wotboost
