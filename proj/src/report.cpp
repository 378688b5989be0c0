#include "wotboost/report.hpp"

#include <fmt/format.h>

#include "wotboost/error.hpp"

namespace wotboost {

std::string round_fixed(double value, int decimals) {
  return fmt::format("{:.{}f}", value, decimals);
}

std::map<std::string, std::array<std::size_t, kSummaryMetrics.size()>>
winning_counts(const ExperimentResult& result) {
  std::map<std::string, std::array<std::size_t, kSummaryMetrics.size()>> wins;
  for (const std::string& model : result.model_order) {
    wins[model] = {};
  }
  constexpr double kTieTolerance = 1e-12;
  for (const DatasetAggregate& ds : result.datasets) {
    for (std::size_t m = 0; m < kSummaryMetrics.size(); ++m) {
      const auto metric = static_cast<std::size_t>(kSummaryMetrics[m]);
      double best = -1.0;
      for (const std::string& model : result.model_order) {
        const auto it = ds.models.find(model);
        if (it == ds.models.end()) continue;
        const CellAggregate& cell = it->second.cells[metric];
        if (cell.n_defined > 0 && cell.mean > best) best = cell.mean;
      }
      if (best < 0.0) continue;  // metric undefined for every model
      for (const std::string& model : result.model_order) {
        const auto it = ds.models.find(model);
        if (it == ds.models.end()) continue;
        const CellAggregate& cell = it->second.cells[metric];
        if (cell.n_defined > 0 && cell.mean >= best - kTieTolerance) {
          ++wins[model][m];
        }
      }
    }
  }
  return wins;
}

namespace {

// Shortest round-trip rendering, for the machine-readable format.
std::string full(double v) { return fmt::format("{}", v); }

std::string cell_text(const CellAggregate& cell, std::size_t runs,
                      std::size_t failed) {
  if (cell.n_defined == 0) return "undef";
  std::string out =
      round_fixed(cell.mean, 2) + "±" + round_fixed(cell.stddev, 2);
  if (cell.n_defined + failed < runs) {
    out += " (n=" + std::to_string(cell.n_defined) + ")";
  }
  return out;
}

std::string markdown_report(const ExperimentResult& result) {
  std::string out;
  out += "# Imbalanced classification benchmark\n\n";
  out += fmt::format(
      "- runs per dataset: {}\n- train fraction: {}\n- base seed: {}\n"
      "- neighbors (k): {}\n- boosting rounds: {}\n- tree max depth: {}\n"
      "- feature scaling: {}\n\n",
      result.runs, full(result.train_fraction), result.base_seed, result.k,
      result.rounds, result.max_depth,
      result.normalize_features ? "min-max on train" : "off");

  out += "## Dataset characteristics\n\n";
  out +=
      "| Dataset | Samples | Features | Majority | Minority | Imbalance "
      "ratio | Safe minority | Unsafe minority | Unsafe % |\n";
  out += "|---|---:|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const DatasetAggregate& ds : result.datasets) {
    const DifficultyProfile& p = ds.profile;
    out += fmt::format("| {} | {} | {} | {} | {} | {} | {} | {} | {} |\n",
                       ds.dataset, p.samples, p.features, p.counts.majority,
                       p.counts.minority, round_fixed(p.imbalance_ratio, 1),
                       p.n_safe, p.n_unsafe, round_fixed(p.unsafe_pct, 1));
  }
  out += "\n";

  for (const DatasetAggregate& ds : result.datasets) {
    out += "## Results: " + ds.dataset + "\n\n";
    out +=
        "| Model | OA | Precision | Recall | F_measure | G_mean | "
        "Specificity | Sensitivity | AUC |\n";
    out += "|---|---:|---:|---:|---:|---:|---:|---:|---:|\n";
    for (const std::string& model : result.model_order) {
      const auto it = ds.models.find(model);
      if (it == ds.models.end()) continue;
      const ModelAggregate& agg = it->second;
      const auto text = [&](MetricId id) {
        return cell_text(agg.cells[static_cast<std::size_t>(id)], result.runs,
                         agg.failed_runs);
      };
      out += fmt::format(
          "| {} | {} | {} | {} | {} | {} | {} | {} | {} |\n", model,
          text(MetricId::OverallAccuracy), text(MetricId::Precision),
          text(MetricId::Recall), text(MetricId::FMeasure),
          text(MetricId::GMean), text(MetricId::Specificity),
          text(MetricId::Recall), text(MetricId::Auc));
    }
    for (const std::string& model : result.model_order) {
      const auto it = ds.models.find(model);
      if (it == ds.models.end()) continue;
      if (it->second.failed_runs > 0) {
        out += fmt::format("\n{} failed on {} of {} runs: {}\n", model,
                           it->second.failed_runs, result.runs,
                           it->second.failure_note);
      }
    }
    out += "\n";
  }

  out += "## Winning counts\n\n";
  out += "| Model | Precision | Recall | F_measure | G_mean | Specificity | "
         "AUC |\n";
  out += "|---|---:|---:|---:|---:|---:|---:|\n";
  const auto wins = winning_counts(result);
  for (const std::string& model : result.model_order) {
    const auto& row = wins.at(model);
    out += fmt::format("| {} | {} | {} | {} | {} | {} | {} |\n", model, row[0],
                       row[1], row[2], row[3], row[4], row[5]);
  }
  return out;
}

// RFC-4180 quoting: only names can need it, numbers never do.
std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

std::string csv_report(const ExperimentResult& result) {
  std::string out =
      "record,dataset,model,metric,value,stddev,n_defined,n_undefined,"
      "failed_runs\r\n";
  const auto row = [&](const std::string& record, const std::string& dataset,
                       const std::string& model, const std::string& metric,
                       const std::string& value, const std::string& stddev,
                       const std::string& n_defined,
                       const std::string& n_undefined,
                       const std::string& failed) {
    out += csv_quote(record) + "," + csv_quote(dataset) + "," +
           csv_quote(model) + "," + csv_quote(metric) + "," + value + "," +
           stddev + "," + n_defined + "," + n_undefined + "," + failed +
           "\r\n";
  };
  for (const DatasetAggregate& ds : result.datasets) {
    const DifficultyProfile& p = ds.profile;
    const std::pair<std::string, double> facts[] = {
        {"samples", static_cast<double>(p.samples)},
        {"features", static_cast<double>(p.features)},
        {"majority", static_cast<double>(p.counts.majority)},
        {"minority", static_cast<double>(p.counts.minority)},
        {"imbalance_ratio", p.imbalance_ratio},
        {"n_safe", static_cast<double>(p.n_safe)},
        {"n_unsafe", static_cast<double>(p.n_unsafe)},
        {"unsafe_pct", p.unsafe_pct}};
    for (const auto& [metric, value] : facts) {
      row("profile", ds.dataset, "", metric, full(value), "", "", "", "");
    }
  }
  for (const DatasetAggregate& ds : result.datasets) {
    for (const std::string& model : result.model_order) {
      const auto it = ds.models.find(model);
      if (it == ds.models.end()) continue;
      const ModelAggregate& agg = it->second;
      for (std::size_t m = 0; m < kMetricCount; ++m) {
        const CellAggregate& cell = agg.cells[m];
        row("metric", ds.dataset, model,
            metric_name(static_cast<MetricId>(m)),
            cell.n_defined > 0 ? full(cell.mean) : "",
            cell.n_defined > 0 ? full(cell.stddev) : "",
            std::to_string(cell.n_defined), std::to_string(cell.n_undefined),
            std::to_string(agg.failed_runs));
      }
    }
  }
  const auto wins = winning_counts(result);
  for (const std::string& model : result.model_order) {
    const auto& counts = wins.at(model);
    for (std::size_t m = 0; m < kSummaryMetrics.size(); ++m) {
      row("wins", "", model, metric_name(kSummaryMetrics[m]),
          std::to_string(counts[m]), "", "", "", "");
    }
  }
  return out;
}

}  // namespace

std::string emit_report(const ExperimentResult& result, ReportFormat format) {
  switch (format) {
    case ReportFormat::Markdown: return markdown_report(result);
    case ReportFormat::Csv: return csv_report(result);
  }
  throw InvalidArgument("unhandled report format");
}

}  // namespace wotboost
