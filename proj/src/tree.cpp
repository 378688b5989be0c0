#include "wotboost/tree.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>
#include <optional>

#include "wotboost/error.hpp"

namespace wotboost {

namespace {

struct Builder {
  const Dataset& ds;
  std::span<const double> weights;  // rescaled, positive entries only in use
  const TreeConfig& config;
  std::vector<TreeNode> nodes;
  std::size_t max_depth_seen = 0;

  struct Split {
    double gain = 0.0;
    std::size_t feature = 0;
    double threshold = 0.0;
  };

  static double gini(double mass_majority, double mass_minority) {
    const double mass = mass_majority + mass_minority;
    if (mass <= 0.0) return 0.0;
    const double pm = mass_majority / mass;
    const double pn = mass_minority / mass;
    return 1.0 - pm * pm - pn * pn;
  }

  // Best split over the given rows, or nothing when no split improves on
  // the parent impurity.
  std::optional<Split> best_split(const std::vector<std::size_t>& rows) const {
    double mass_maj = 0.0;
    double mass_min = 0.0;
    for (std::size_t r : rows) {
      (ds.labels[r] == ClassLabel::Majority ? mass_maj : mass_min) += weights[r];
    }
    const double parent_mass = mass_maj + mass_min;
    const double parent_gini = gini(mass_maj, mass_min);

    std::optional<Split> best;
    std::vector<std::pair<double, std::size_t>> column(rows.size());
    // Right-side masses come from suffix sums rather than subtracting the
    // left accumulator from the parent mass. Subtraction leaves rounding
    // residue on a side that is mathematically empty of one class, and then
    // the winner among perfectly separating features depends on the scale
    // of the weights instead of on feature order.
    std::vector<double> suffix_maj(rows.size() + 1);
    std::vector<double> suffix_min(rows.size() + 1);
    for (std::size_t f = 0; f < ds.n_features(); ++f) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        column[i] = {ds.features.at(rows[i], f), rows[i]};
      }
      std::sort(column.begin(), column.end());

      suffix_maj[rows.size()] = 0.0;
      suffix_min[rows.size()] = 0.0;
      for (std::size_t i = rows.size(); i-- > 0;) {
        const std::size_t r = column[i].second;
        const bool majority = ds.labels[r] == ClassLabel::Majority;
        suffix_maj[i] = suffix_maj[i + 1] + (majority ? weights[r] : 0.0);
        suffix_min[i] = suffix_min[i + 1] + (majority ? 0.0 : weights[r]);
      }

      double left_maj = 0.0;
      double left_min = 0.0;
      std::size_t left_count = 0;
      for (std::size_t i = 0; i + 1 < column.size(); ++i) {
        const std::size_t r = column[i].second;
        (ds.labels[r] == ClassLabel::Majority ? left_maj : left_min) +=
            weights[r];
        ++left_count;
        if (column[i].first == column[i + 1].first) continue;
        if (left_count < config.min_samples_leaf ||
            rows.size() - left_count < config.min_samples_leaf) {
          continue;
        }
        const double right_maj = suffix_maj[i + 1];
        const double right_min = suffix_min[i + 1];
        const double left_mass = left_maj + left_min;
        const double right_mass = right_maj + right_min;
        const double weighted_child_gini =
            (left_mass * gini(left_maj, left_min) +
             right_mass * gini(right_maj, right_min)) /
            parent_mass;
        const double gain = parent_gini - weighted_child_gini;
        if (gain > 0.0 && (!best || gain > best->gain)) {
          best = Split{gain, f,
                       std::midpoint(column[i].first, column[i + 1].first)};
        }
      }
    }
    return best;
  }

  std::int32_t build(const std::vector<std::size_t>& rows, std::size_t depth) {
    max_depth_seen = std::max(max_depth_seen, depth);
    double mass_maj = 0.0;
    double mass_min = 0.0;
    for (std::size_t r : rows) {
      (ds.labels[r] == ClassLabel::Majority ? mass_maj : mass_min) += weights[r];
    }
    const bool pure = mass_maj == 0.0 || mass_min == 0.0;

    std::optional<Split> split;
    if (depth < config.max_depth && rows.size() >= 2 * config.min_samples_leaf &&
        !pure) {
      split = best_split(rows);
    }
    const auto id = static_cast<std::int32_t>(nodes.size());
    nodes.emplace_back();
    if (!split) {
      const double s = config.leaf_smoothing;
      const double mass = mass_maj + mass_min;
      nodes[id].p_majority = (mass_maj + s) / (mass + 2.0 * s);
      nodes[id].p_minority = (mass_min + s) / (mass + 2.0 * s);
      return id;
    }
    std::vector<std::size_t> left_rows;
    std::vector<std::size_t> right_rows;
    for (std::size_t r : rows) {
      if (ds.features.at(r, split->feature) <= split->threshold) {
        left_rows.push_back(r);
      } else {
        right_rows.push_back(r);
      }
    }
    nodes[id].feature = static_cast<std::int32_t>(split->feature);
    nodes[id].threshold = split->threshold;
    const std::int32_t left = build(left_rows, depth + 1);
    const std::int32_t right = build(right_rows, depth + 1);
    nodes[id].left = left;
    nodes[id].right = right;
    return id;
  }
};

}  // namespace

ClassScores DecisionTree::predict_scores(std::span<const double> x) const {
  if (x.size() != n_features_) {
    throw DimensionMismatch("sample width does not match training data");
  }
  std::size_t at = 0;
  while (nodes_[at].feature >= 0) {
    const TreeNode& n = nodes_[at];
    at = static_cast<std::size_t>(
        x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left
                                                              : n.right);
  }
  return {nodes_[at].p_majority, nodes_[at].p_minority};
}

ClassLabel DecisionTree::predict_label(std::span<const double> x) const {
  const ClassScores s = predict_scores(x);
  return s.minority > s.majority ? ClassLabel::Minority : ClassLabel::Majority;
}

std::string DecisionTree::to_text() const {
  std::string out;
  auto walk = [&](auto&& self, std::size_t at, std::size_t depth) -> void {
    out.append(depth * 2, ' ');
    const TreeNode& n = nodes_[at];
    if (n.feature < 0) {
      out += fmt::format("leaf majority={:.4f} minority={:.4f}\n", n.p_majority,
                         n.p_minority);
      return;
    }
    out += fmt::format("x[{}] <= {:.6g}\n", n.feature, n.threshold);
    self(self, static_cast<std::size_t>(n.left), depth + 1);
    self(self, static_cast<std::size_t>(n.right), depth + 1);
  };
  if (!nodes_.empty()) walk(walk, 0, 0);
  return out;
}

DecisionTree fit_tree(const Dataset& ds, std::span<const double> sample_weights,
                      const TreeConfig& config) {
  if (ds.size() == 0) throw EmptyDataset("cannot fit a tree on no samples");
  if (sample_weights.size() != ds.size()) {
    throw LengthMismatch("sample weights do not match dataset size");
  }
  if (config.leaf_smoothing < 0.0 || !std::isfinite(config.leaf_smoothing)) {
    throw InvalidArgument("leaf_smoothing must be finite and non-negative");
  }
  double total = 0.0;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < sample_weights.size(); ++i) {
    const double w = sample_weights[i];
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidArgument("sample weights must be finite and non-negative");
    }
    if (w > 0.0) rows.push_back(i);
    total += w;
  }
  if (rows.empty()) throw AllZeroWeights("every sample weight is zero");

  // Rescale so the surviving weights sum to their count. Leaf smoothing then
  // acts on the same scale as plain sample counts, making the fit invariant
  // to both weight scaling and zero-weight padding.
  const double scale = static_cast<double>(rows.size()) / total;
  std::vector<double> scaled(sample_weights.size(), 0.0);
  for (std::size_t r : rows) scaled[r] = sample_weights[r] * scale;

  Builder builder{ds, scaled, config, {}, 0};
  builder.build(rows, 0);

  DecisionTree tree;
  tree.nodes_ = std::move(builder.nodes);
  tree.depth_ = builder.max_depth_seen;
  tree.n_features_ = ds.n_features();
  return tree;
}

}  // namespace wotboost
