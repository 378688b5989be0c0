#include "wotboost/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wotboost/error.hpp"

namespace wotboost {

ConfusionMatrix confusion(std::span<const ClassLabel> truth,
                          std::span<const ClassLabel> predicted) {
  if (truth.size() != predicted.size()) {
    throw LengthMismatch("truth and prediction lengths differ");
  }
  if (truth.empty()) throw EmptyDataset("cannot tabulate zero predictions");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool actual_minority = truth[i] == ClassLabel::Minority;
    const bool predicted_minority = predicted[i] == ClassLabel::Minority;
    if (actual_minority && predicted_minority) {
      ++cm.tp;
    } else if (!actual_minority && predicted_minority) {
      ++cm.fp;
    } else if (actual_minority && !predicted_minority) {
      ++cm.fn;
    } else {
      ++cm.tn;
    }
  }
  return cm;
}

MetricReport compute_metrics(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw EmptyDataset("empty confusion matrix");
  MetricReport r;
  const auto ratio = [](std::uint64_t num,
                        std::uint64_t den) -> std::optional<double> {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  r.overall_accuracy = ratio(cm.tp + cm.tn, cm.total());
  r.precision = ratio(cm.tp, cm.tp + cm.fp);
  r.recall = ratio(cm.tp, cm.tp + cm.fn);
  r.specificity = ratio(cm.tn, cm.tn + cm.fp);
  if (r.precision && r.recall && (*r.precision + *r.recall) > 0.0) {
    r.f1 = 2.0 * *r.precision * *r.recall / (*r.precision + *r.recall);
  }
  if (r.recall && r.specificity) {
    r.g_mean = std::sqrt(*r.recall * *r.specificity);
  }
  return r;
}

double roc_auc(std::span<const ClassLabel> truth,
               std::span<const double> minority_scores) {
  if (truth.size() != minority_scores.size()) {
    throw LengthMismatch("truth and score lengths differ");
  }
  std::size_t n_pos = 0;
  for (ClassLabel l : truth) {
    if (l == ClassLabel::Minority) ++n_pos;
  }
  const std::size_t n_neg = truth.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw SingleClass("AUC needs both classes present");
  }

  std::vector<std::size_t> order(truth.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return minority_scores[a] < minority_scores[b];
  });

  // Midrank sum over the positive class; ties within a score group share
  // the average rank, which is exactly the half-credit convention.
  double positive_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() &&
           minority_scores[order[j]] == minority_scores[order[i]]) {
      ++j;
    }
    const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);  // 1-based
    for (std::size_t t = i; t < j; ++t) {
      if (truth[order[t]] == ClassLabel::Minority) {
        positive_rank_sum += mid_rank;
      }
    }
    i = j;
  }
  const double n_pos_d = static_cast<double>(n_pos);
  const double u =
      positive_rank_sum - n_pos_d * (n_pos_d + 1.0) / 2.0;
  return u / (n_pos_d * static_cast<double>(n_neg));
}

}  // namespace wotboost
