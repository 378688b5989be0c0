#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wotboost/dataset.hpp"

namespace wotboost {

/// Binary confusion counts with minority as the positive class.
struct ConfusionMatrix {
  std::uint64_t tp = 0;  // minority predicted minority
  std::uint64_t fp = 0;  // majority predicted minority
  std::uint64_t fn = 0;  // minority predicted majority
  std::uint64_t tn = 0;  // majority predicted majority

  std::uint64_t total() const { return tp + fp + fn + tn; }
};

/// Throws LengthMismatch when the vectors disagree, EmptyDataset when empty.
ConfusionMatrix confusion(std::span<const ClassLabel> truth,
                          std::span<const ClassLabel> predicted);

/// Threshold metrics. A metric whose defining ratio is 0/0 is reported as
/// absent rather than coerced to a number.
struct MetricReport {
  std::optional<double> overall_accuracy;
  std::optional<double> precision;    // tp / (tp + fp)
  std::optional<double> recall;       // tp / (tp + fn); sensitivity
  std::optional<double> f1;           // 2PR / (P + R)
  std::optional<double> specificity;  // tn / (tn + fp)
  std::optional<double> g_mean;       // sqrt(recall * specificity)
  std::optional<double> auc;          // filled by roc_auc, not here
};

MetricReport compute_metrics(const ConfusionMatrix& cm);

/// Area under the ROC curve via the rank statistic: the probability that a
/// uniformly drawn minority sample outscores a uniformly drawn majority
/// sample, ties counting half.
/// Throws SingleClass when either class is absent, LengthMismatch when the
/// vectors disagree.
double roc_auc(std::span<const ClassLabel> truth,
               std::span<const double> minority_scores);

}  // namespace wotboost
