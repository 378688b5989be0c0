#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wotboost/analysis.hpp"
#include "wotboost/csv.hpp"
#include "wotboost/error.hpp"
#include "wotboost/experiment.hpp"
#include "wotboost/report.hpp"

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) {
    const auto b = part.find_first_not_of(" \t");
    const auto e = part.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? std::string{}
                                           : part.substr(b, e - b + 1));
  }
  return parts;
}

// Flat key = value config. Repeated `dataset` keys add benchmark inputs as
// name : path : label column : minority value [: delimiter].
void apply_config_file(const std::string& path,
                       wotboost::ExperimentConfig& config) {
  std::ifstream in(path);
  if (!in) throw wotboost::ParseError("cannot open config '" + path + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos) {
      throw wotboost::ParseError(path + ": line " + std::to_string(line_no) +
                                 ": expected key = value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "runs") {
        config.runs = std::stoul(value);
      } else if (key == "seed") {
        config.base_seed = std::stoull(value);
      } else if (key == "k") {
        config.k = std::stoul(value);
      } else if (key == "rounds") {
        config.rounds = std::stoul(value);
      } else if (key == "max_depth") {
        config.max_depth = std::stoul(value);
      } else if (key == "min_samples_leaf") {
        config.min_samples_leaf = std::stoul(value);
      } else if (key == "leaf_smoothing") {
        config.leaf_smoothing = std::stod(value);
      } else if (key == "train_fraction") {
        config.train_fraction = std::stod(value);
      } else if (key == "normalize") {
        config.normalize_features = value == "true" || value == "1" ||
                                    value == "on" || value == "yes";
      } else if (key == "models") {
        config.models.clear();
        for (const std::string& name : split(value, ',')) {
          config.models.push_back(wotboost::parse_model(name));
        }
      } else if (key == "dataset") {
        const std::vector<std::string> parts = split(value, ':');
        if (parts.size() < 4 || parts.size() > 5) {
          throw wotboost::ParseError(
              path + ": line " + std::to_string(line_no) +
              ": dataset needs name : path : label : minority [: delimiter]");
        }
        wotboost::DatasetSource src;
        src.name = parts[0];
        src.path = parts[1];
        src.schema.label_column = parts[2];
        src.schema.minority_value = parts[3];
        if (parts.size() == 5 && !parts[4].empty()) {
          src.schema.delimiter = parts[4][0];
        }
        config.datasets.push_back(std::move(src));
      } else {
        throw wotboost::ParseError(path + ": line " + std::to_string(line_no) +
                                   ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw wotboost::ParseError(path + ": line " + std::to_string(line_no) +
                                 ": bad value '" + value + "' for '" + key +
                                 "'");
    }
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw wotboost::Error("cannot write '" + path + "'");
  out << text;
}

int run_profile(const std::string& data_path, const std::string& label,
                const std::string& minority, char delimiter, std::size_t k,
                bool normalize) {
  wotboost::CsvSchema schema;
  schema.label_column = label;
  schema.minority_value = minority;
  schema.delimiter = delimiter;
  const wotboost::Dataset ds = wotboost::load_csv(data_path, schema);
  const wotboost::DifficultyProfile p =
      wotboost::profile(ds, wotboost::ProfileOptions{k, normalize});
  std::cout << "samples:          " << p.samples << "\n"
            << "features:         " << p.features << "\n"
            << "majority:         " << p.counts.majority << "\n"
            << "minority:         " << p.counts.minority << "\n"
            << "imbalance ratio:  " << wotboost::round_fixed(p.imbalance_ratio, 1)
            << "\n"
            << "safe minority:    " << p.n_safe << "\n"
            << "unsafe minority:  " << p.n_unsafe << "\n"
            << "unsafe %:         " << wotboost::round_fixed(p.unsafe_pct, 1)
            << "\n"
            << "distance space:   " << (normalize ? "min-max scaled" : "raw")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Imbalanced-classification benchmark"};
  app.require_subcommand(1);

  // profile
  std::string profile_data;
  std::string profile_label;
  std::string profile_minority;
  std::string profile_delim = ",";
  std::size_t profile_k = 5;
  bool profile_normalize = false;
  CLI::App* profile =
      app.add_subcommand("profile", "Characterize one labelled CSV dataset");
  profile->add_option("data", profile_data, "CSV file with a header row")
      ->required();
  profile->add_option("--label", profile_label,
                      "label column name or 0-based index (default: last)");
  profile->add_option("--minority", profile_minority,
                      "label value of the minority class")
      ->required();
  profile->add_option("--delimiter", profile_delim, "cell delimiter");
  profile->add_option("--k", profile_k, "neighborhood size");
  profile->add_flag("--normalize-distances", profile_normalize,
                    "min-max scale features before measuring distances");

  // bench
  std::string bench_config;
  std::string bench_data;
  std::string bench_name = "dataset";
  std::string bench_label;
  std::string bench_minority;
  std::string bench_delim = ",";
  std::string bench_models;
  std::string bench_format = "markdown";
  std::string bench_output;
  std::string bench_results;
  wotboost::ExperimentConfig config;
  bool no_normalize = false;
  CLI::App* bench = app.add_subcommand(
      "bench", "Run the repeated-split model comparison protocol");
  bench->add_option("--config", bench_config, "key = value config file");
  bench->add_option("--data", bench_data,
                    "single CSV dataset (alternative to --config)");
  bench->add_option("--name", bench_name, "dataset name for --data");
  bench->add_option("--label", bench_label,
                    "label column for --data (default: last)");
  bench->add_option("--minority", bench_minority, "minority value for --data");
  bench->add_option("--delimiter", bench_delim, "cell delimiter for --data");
  bench->add_option("--seed", config.base_seed, "base seed; run r uses seed+r");
  bench->add_option("--runs", config.runs, "independent splits per dataset");
  bench->add_option("--models", bench_models,
                    "comma-separated subset of DT, SMOTE+DT, ADASYN+DT, "
                    "SMOTEBoost, WOTBoost");
  bench->add_option("--k", config.k, "neighborhood size");
  bench->add_option("--rounds", config.rounds, "boosting rounds");
  bench->add_option("--max-depth", config.max_depth, "tree depth cap");
  bench->add_flag("--no-normalize", no_normalize,
                  "skip min-max feature scaling");
  bench->add_option("--format", bench_format, "report format: markdown or csv");
  bench->add_option("--output", bench_output,
                    "write the report here instead of stdout");
  bench->add_option("--results", bench_results,
                    "also store raw aggregates as JSON for later `report`");

  // report
  std::string report_input;
  std::string report_format = "markdown";
  std::string report_output;
  CLI::App* report = app.add_subcommand(
      "report", "Re-render stored bench results without re-running");
  report->add_option("--input", report_input, "results JSON from bench")
      ->required();
  report->add_option("--format", report_format,
                     "report format: markdown or csv");
  report->add_option("--output", report_output,
                     "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (profile->parsed()) {
      return run_profile(profile_data, profile_label, profile_minority,
                         profile_delim.empty() ? ',' : profile_delim[0],
                         profile_k, profile_normalize);
    }
    if (bench->parsed()) {
      if (!bench_config.empty()) apply_config_file(bench_config, config);
      if (!bench_data.empty()) {
        wotboost::DatasetSource src;
        src.name = bench_name;
        src.path = bench_data;
        src.schema.label_column = bench_label;
        src.schema.minority_value = bench_minority;
        src.schema.delimiter = bench_delim.empty() ? ',' : bench_delim[0];
        config.datasets.push_back(std::move(src));
      }
      if (config.datasets.empty()) {
        std::cerr << "bench needs --config with dataset lines or --data\n";
        return 2;
      }
      if (!bench_models.empty()) {
        config.models.clear();
        for (const std::string& name : split(bench_models, ',')) {
          config.models.push_back(wotboost::parse_model(name));
        }
      }
      if (no_normalize) config.normalize_features = false;
      const wotboost::ExperimentResult result = wotboost::run_experiment(config);
      if (!bench_results.empty()) {
        write_output(wotboost::result_to_json(result), bench_results);
      }
      const wotboost::ReportFormat fmt = bench_format == "csv"
                                             ? wotboost::ReportFormat::Csv
                                             : wotboost::ReportFormat::Markdown;
      write_output(wotboost::emit_report(result, fmt), bench_output);
      return 0;
    }
    if (report->parsed()) {
      std::ifstream in(report_input, std::ios::binary);
      if (!in) {
        std::cerr << "cannot open '" << report_input << "'\n";
        return 2;
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      const wotboost::ExperimentResult result =
          wotboost::result_from_json(buffer.str());
      const wotboost::ReportFormat fmt = report_format == "csv"
                                             ? wotboost::ReportFormat::Csv
                                             : wotboost::ReportFormat::Markdown;
      write_output(wotboost::emit_report(result, fmt), report_output);
      return 0;
    }
  } catch (const wotboost::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
