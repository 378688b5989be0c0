#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "test_support.hpp"
#include "wotboost/csv.hpp"
#include "wotboost/error.hpp"
#include "wotboost/experiment.hpp"
#include "wotboost/report.hpp"

using namespace wotboost;

namespace {

CsvSchema schema_for(const std::string& label, const std::string& minority) {
  CsvSchema s;
  s.label_column = label;
  s.minority_value = minority;
  return s;
}

ExperimentConfig small_config() {
  ExperimentConfig config;
  config.runs = 3;
  config.base_seed = 11;
  return config;
}

Dataset blob_dataset(std::uint64_t seed, double spread) {
  Rng rng(seed);
  testsupport::RandomDatasetOptions opt;
  opt.min_minority = 10;
  opt.max_minority = 14;
  opt.min_majority = 30;
  opt.max_majority = 40;
  opt.spread = spread;
  return testsupport::make_random_dataset(rng, opt);
}

}  // namespace

TEST_CASE("load_csv happy path") {
  std::istringstream in(
      "a,b,kind\n"
      "0.5, 1.5 ,yes\n"
      "1.5,2.5,no\n"
      "2.25,3e-1,no\n");
  const Dataset ds = load_csv(in, schema_for("kind", "yes"));
  CHECK(ds.size() == 3);
  CHECK(ds.n_features() == 2);
  CHECK(ds.feature_names == std::vector<std::string>{"a", "b"});
  CHECK(ds.features.at(0, 1) == 1.5);
  CHECK(ds.features.at(2, 1) == 0.3);
  CHECK(ds.labels[0] == ClassLabel::Minority);
  CHECK(ds.labels[1] == ClassLabel::Majority);
}

TEST_CASE("label column defaults to the last and accepts an index") {
  std::istringstream in(
      "x,y\n"
      "1,0\n"
      "2,0\n"
      "3,1\n");
  const Dataset by_default = load_csv(in, schema_for("", "1"));
  CHECK(by_default.n_features() == 1);
  CHECK(class_counts(by_default).minority == 1);

  std::istringstream again(
      "x,y\n"
      "1,0\n"
      "2,0\n"
      "3,1\n");
  const Dataset by_index = load_csv(again, schema_for("1", "1"));
  CHECK(class_counts(by_index).minority == 1);
}

TEST_CASE("quoted cells and non-comma delimiters") {
  std::istringstream in(
      "v;\"the label\"\n"
      "7.5;\"tiny, but real\"\n"
      "8.5;other\n"
      "9.5;other\n");
  CsvSchema schema = schema_for("the label", "tiny, but real");
  schema.delimiter = ';';
  const Dataset ds = load_csv(in, schema);
  CHECK(ds.size() == 3);
  CHECK(class_counts(ds).minority == 1);
}

TEST_CASE("parse errors name the offending cell") {
  std::istringstream in(
      "a,b,kind\n"
      "1,2,no\n"
      "1,abc,yes\n");
  try {
    load_csv(in, schema_for("kind", "yes"), "bad.csv");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("row 3") != std::string::npos);
    CHECK(what.find("column 2") != std::string::npos);
    CHECK(what.find("abc") != std::string::npos);
  }
}

TEST_CASE("ragged rows are rejected") {
  std::istringstream in(
      "a,b,kind\n"
      "1,2\n");
  CHECK_THROWS_AS(load_csv(in, schema_for("kind", "yes")), ParseError);
}

TEST_CASE("non-finite cells are rejected") {
  std::istringstream in(
      "a,kind\n"
      "inf,no\n"
      "1,yes\n");
  CHECK_THROWS_AS(load_csv(in, schema_for("kind", "yes")), ParseError);
}

TEST_CASE("label sanity") {
  SUBCASE("unknown minority value") {
    std::istringstream in("a,kind\n1,no\n2,no\n");
    CHECK_THROWS_AS(load_csv(in, schema_for("kind", "yes")), UnknownLabelValue);
  }
  SUBCASE("three label values") {
    std::istringstream in("a,kind\n1,no\n2,yes\n3,maybe\n");
    CHECK_THROWS_AS(load_csv(in, schema_for("kind", "yes")), UnknownLabelValue);
  }
  SUBCASE("minority value labels the larger class") {
    std::istringstream in("a,kind\n1,yes\n2,yes\n3,no\n");
    CHECK_THROWS_AS(load_csv(in, schema_for("kind", "yes")), InvertedClasses);
  }
  SUBCASE("an exact tie is not inverted") {
    std::istringstream in("a,kind\n1,yes\n2,no\n");
    CHECK_NOTHROW(load_csv(in, schema_for("kind", "yes")));
  }
  SUBCASE("missing label column") {
    std::istringstream in("a,kind\n1,no\n");
    CHECK_THROWS_AS(load_csv(in, schema_for("nope", "no")), ParseError);
  }
}

TEST_CASE("scaler maps the training split into the unit box") {
  const Dataset ds = blob_dataset(271, 4.0);
  const FeatureScaler scaler = FeatureScaler::fit(ds);
  const Dataset scaled = scaler.transform(ds);
  for (std::size_t c = 0; c < scaled.n_features(); ++c) {
    double lo = 1e9;
    double hi = -1e9;
    for (std::size_t r = 0; r < scaled.size(); ++r) {
      lo = std::min(lo, scaled.features.at(r, c));
      hi = std::max(hi, scaled.features.at(r, c));
    }
    CHECK(lo == doctest::Approx(0.0));
    CHECK(hi == doctest::Approx(1.0));
  }
}

TEST_CASE("scaler is fitted on train only") {
  Matrix train_m(0, 1);
  train_m.append_row(std::vector<double>{0.0});
  train_m.append_row(std::vector<double>{10.0});
  const Dataset train = make_dataset(
      std::move(train_m), {ClassLabel::Majority, ClassLabel::Minority});
  Matrix test_m(0, 1);
  test_m.append_row(std::vector<double>{20.0});
  const Dataset test =
      make_dataset(std::move(test_m), {ClassLabel::Majority});
  const FeatureScaler scaler = FeatureScaler::fit(train);
  // a test value beyond the training range maps beyond 1 and stays there
  CHECK(scaler.transform(test).features.at(0, 0) == doctest::Approx(2.0));
}

TEST_CASE("every model sees the same split in a run") {
  const Dataset ds = blob_dataset(277, 3.0);
  const ExperimentConfig config = small_config();
  for (std::size_t run = 0; run < 3; ++run) {
    SplitSpec spec;
    spec.train_fraction = config.train_fraction;
    spec.seed = config.base_seed + run;
    const auto [train, test] = stratified_split(ds, spec);
    const ClassCounts expect_train = class_counts(train);
    const ClassCounts expect_test = class_counts(test);
    for (ModelKind model : kAllModels) {
      const RunOutcome outcome = evaluate_model_run(ds, config, model, run);
      CHECK(outcome.train_counts.majority == expect_train.majority);
      CHECK(outcome.train_counts.minority == expect_train.minority);
      CHECK(outcome.test_counts.majority == expect_test.majority);
      CHECK(outcome.test_counts.minority == expect_test.minority);
    }
  }
}

TEST_CASE("separable data scores perfectly across the board") {
  const Dataset ds = blob_dataset(281, 40.0);
  ExperimentConfig config = small_config();
  config.runs = 2;
  const ExperimentResult result =
      run_experiment(config, {{"blobs", ds}});
  REQUIRE(result.datasets.size() == 1);
  for (const auto& [model, agg] : result.datasets[0].models) {
    CAPTURE(model);
    CHECK(agg.failed_runs == 0);
    for (std::size_t m = 0; m < kMetricCount; ++m) {
      CHECK(agg.cells[m].n_defined == 2);
      CHECK(agg.cells[m].mean == doctest::Approx(1.0));
      CHECK(agg.cells[m].stddev == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("failed runs are counted, not imputed") {
  // minority too small for k = 5 synthesis neighborhoods: the samplers
  // throw, the plain tree still works
  Rng rng(283);
  testsupport::RandomDatasetOptions opt;
  opt.min_minority = opt.max_minority = 5;  // splits to 2 or 3 per side
  opt.min_majority = opt.max_majority = 30;
  const Dataset ds = testsupport::make_random_dataset(rng, opt);
  ExperimentConfig config = small_config();
  config.runs = 2;
  const ExperimentResult result = run_experiment(config, {{"thin", ds}});
  const auto& models = result.datasets[0].models;
  CHECK(models.at("DT").failed_runs == 0);
  CHECK(models.at("SMOTE+DT").failed_runs == 2);
  CHECK(models.at("WOTBoost").failed_runs == 2);
  CHECK(models.at("SMOTE+DT").failure_note.find("neighbors") !=
        std::string::npos);
  for (std::size_t m = 0; m < kMetricCount; ++m) {
    const CellAggregate& cell = models.at("SMOTE+DT").cells[m];
    CHECK(cell.n_defined + cell.n_undefined +
              models.at("SMOTE+DT").failed_runs ==
          config.runs);
  }
}

TEST_CASE("run_experiment is deterministic") {
  const Dataset ds = blob_dataset(293, 2.5);
  const ExperimentConfig config = small_config();
  const ExperimentResult a = run_experiment(config, {{"blobs", ds}});
  const ExperimentResult b = run_experiment(config, {{"blobs", ds}});
  CHECK(result_to_json(a) == result_to_json(b));
  CHECK(emit_report(a, ReportFormat::Markdown) ==
        emit_report(b, ReportFormat::Markdown));
  CHECK(emit_report(a, ReportFormat::Csv) == emit_report(b, ReportFormat::Csv));
}

TEST_CASE("json round trip preserves the result") {
  const Dataset ds = blob_dataset(307, 2.0);
  ExperimentConfig config = small_config();
  config.runs = 2;
  const ExperimentResult result = run_experiment(config, {{"blobs", ds}});
  const ExperimentResult back = result_from_json(result_to_json(result));
  CHECK(emit_report(result, ReportFormat::Markdown) ==
        emit_report(back, ReportFormat::Markdown));
  CHECK(emit_report(result, ReportFormat::Csv) ==
        emit_report(back, ReportFormat::Csv));
  CHECK_THROWS_AS(result_from_json("not json"), ParseError);
  CHECK_THROWS_AS(result_from_json("{}"), ParseError);
}

TEST_CASE("winning counts award every tied model") {
  ExperimentResult result;
  result.runs = 100;
  result.model_order = {"DT", "WOTBoost"};
  DatasetAggregate ds;
  ds.dataset = "toy";
  ModelAggregate dt;
  ModelAggregate wot;
  for (std::size_t m = 0; m < kMetricCount; ++m) {
    dt.cells[m] = {0.70, 0.01, 100, 0};
    wot.cells[m] = {0.70, 0.01, 100, 0};
  }
  // WOTBoost pulls ahead on recall only
  wot.cells[static_cast<std::size_t>(MetricId::Recall)].mean = 0.80;
  ds.models["DT"] = dt;
  ds.models["WOTBoost"] = wot;
  result.datasets.push_back(ds);

  const auto wins = winning_counts(result);
  // summary metric order: Precision, Recall, F_measure, G_mean,
  // Specificity, AUC
  CHECK(wins.at("DT") ==
        std::array<std::size_t, 6>{1, 0, 1, 1, 1, 1});
  CHECK(wins.at("WOTBoost") ==
        std::array<std::size_t, 6>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("undefined cells never win") {
  ExperimentResult result;
  result.runs = 10;
  result.model_order = {"DT", "WOTBoost"};
  DatasetAggregate ds;
  ds.dataset = "toy";
  ModelAggregate dt;
  ModelAggregate wot;
  for (std::size_t m = 0; m < kMetricCount; ++m) {
    dt.cells[m] = {0.9, 0.0, 0, 10};  // high mean but never defined
    wot.cells[m] = {0.2, 0.0, 10, 0};
  }
  ds.models["DT"] = dt;
  ds.models["WOTBoost"] = wot;
  result.datasets.push_back(ds);
  const auto wins = winning_counts(result);
  CHECK(wins.at("DT") == std::array<std::size_t, 6>{0, 0, 0, 0, 0, 0});
  CHECK(wins.at("WOTBoost") == std::array<std::size_t, 6>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("markdown report carries the tables") {
  const Dataset ds = blob_dataset(311, 3.0);
  ExperimentConfig config = small_config();
  config.runs = 2;
  const ExperimentResult result = run_experiment(config, {{"blobs", ds}});
  const std::string md = emit_report(result, ReportFormat::Markdown);
  CHECK(md.find("## Dataset characteristics") != std::string::npos);
  CHECK(md.find("## Results: blobs") != std::string::npos);
  CHECK(md.find("## Winning counts") != std::string::npos);
  CHECK(md.find("| WOTBoost |") != std::string::npos);
  CHECK(md.find("Sensitivity") != std::string::npos);

  const std::string csv = emit_report(result, ReportFormat::Csv);
  CHECK(csv.find("record,dataset,model,metric,value,stddev") == 0);
  CHECK(csv.find("profile,blobs,,samples,") != std::string::npos);
  CHECK(csv.find("wins,,WOTBoost,") != std::string::npos);
}

TEST_CASE("two-decimal rounding is round-half-even") {
  CHECK(round_fixed(0.735, 2) == "0.73");   // 0.735 is 0.7349999... in binary
  CHECK(round_fixed(0.125, 2) == "0.12");
  CHECK(round_fixed(0.375, 2) == "0.38");
  CHECK(round_fixed(0.7442, 2) == "0.74");
  CHECK(round_fixed(2.7777777, 1) == "2.8");
}
