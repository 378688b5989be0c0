#pragma once

#include <map>
#include <string>
#include <vector>

#include "wotboost/experiment.hpp"

namespace wotboost {

enum class ReportFormat { Markdown, Csv };

/// Metrics entering the winning-count summary, in column order. Overall
/// accuracy stays out: on imbalanced data it rewards ignoring the minority.
inline constexpr std::array<MetricId, 6> kSummaryMetrics = {
    MetricId::Precision, MetricId::Recall,      MetricId::FMeasure,
    MetricId::GMean,     MetricId::Specificity, MetricId::Auc};

/// Per model: how many datasets it wins on each summary metric. A model
/// wins a (dataset, metric) when its mean is within 1e-12 of the best mean
/// among models with at least one defined run; every tied model scores.
std::map<std::string, std::array<std::size_t, kSummaryMetrics.size()>>
winning_counts(const ExperimentResult& result);

/// Renders the stored result. Markdown carries dataset characteristics,
/// one mean+-std table per dataset and the winning-count summary, rounded
/// to two decimals (ties to even). CSV carries the same content in long
/// form at full precision. Output is a pure function of the result: two
/// identical results render byte-identically.
std::string emit_report(const ExperimentResult& result, ReportFormat format);

/// "0.7350" -> "0.74"-style fixed rounding used by the report tables.
std::string round_fixed(double value, int decimals);

}  // namespace wotboost
