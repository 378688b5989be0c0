#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "test_support.hpp"
#include "wotboost/analysis.hpp"
#include "wotboost/error.hpp"
#include "wotboost/neighbors.hpp"

using namespace wotboost;

TEST_CASE("well-separated minority is entirely safe") {
  Rng rng(233);
  testsupport::RandomDatasetOptions opt;
  opt.spread = 60.0;
  opt.min_minority = 8;
  const Dataset ds = testsupport::make_random_dataset(rng, opt);
  const DifficultyProfile p = profile(ds);
  CHECK(p.n_unsafe == 0);
  CHECK(p.n_safe == class_counts(ds).minority);
  CHECK(p.unsafe_pct == 0.0);
}

TEST_CASE("minority drowned in the majority is entirely unsafe") {
  // minority samples sprinkled inside a dense majority ball
  Rng rng(239);
  Matrix m(0, 2);
  std::vector<ClassLabel> labels;
  for (int i = 0; i < 60; ++i) {
    m.append_row(std::vector<double>{rng.unit(), rng.unit()});
    labels.push_back(ClassLabel::Majority);
  }
  for (int i = 0; i < 6; ++i) {
    m.append_row(std::vector<double>{rng.unit(), rng.unit()});
    labels.push_back(ClassLabel::Minority);
  }
  const Dataset ds = make_dataset(std::move(m), std::move(labels));
  const DifficultyProfile p = profile(ds);
  // with 60 majority points packed in the same unit square, a minority
  // sample with more than one minority neighbor among its five is unlikely;
  // allow the rare coincidence but demand a dominantly unsafe profile
  CHECK(p.n_unsafe >= 5);
  CHECK(p.unsafe_pct >= 100.0 * 5.0 / 6.0 - 1e-9);
}

TEST_CASE("the safe rule tolerates exactly one majority neighbor") {
  // minority pair plus exactly one nearby majority point; k = 3 would leave
  // the neighborhood short, so keep k small and the geometry explicit
  Matrix m(0, 1);
  for (double v : {0.0, 0.1, 0.2, 50.0, 51.0, 52.0, 53.0}) {
    m.append_row(std::vector<double>{v});
  }
  const Dataset ds = make_dataset(
      std::move(m),
      {ClassLabel::Minority, ClassLabel::Minority, ClassLabel::Majority,
       ClassLabel::Majority, ClassLabel::Majority, ClassLabel::Majority,
       ClassLabel::Majority});
  ProfileOptions options;
  options.k = 2;
  const auto safety = classify_minority_safety(ds, options);
  REQUIRE(safety.size() == 2);
  // each minority sample sees the other minority plus one majority: safe
  CHECK(safety[0] == MinoritySafety::Safe);
  CHECK(safety[1] == MinoritySafety::Safe);

  ProfileOptions wide;
  wide.k = 5;
  const auto wide_safety = classify_minority_safety(ds, wide);
  // now four of five neighbors are majority: unsafe
  CHECK(wide_safety[0] == MinoritySafety::Unsafe);
  CHECK(wide_safety[1] == MinoritySafety::Unsafe);
}

TEST_CASE("safety classification matches a direct recount") {
  Rng rng(241);
  for (int trial = 0; trial < 10; ++trial) {
    testsupport::RandomDatasetOptions opt;
    opt.spread = 2.0;  // overlapped enough for a mix of safe and unsafe
    const Dataset ds = testsupport::make_random_dataset(rng, opt);
    const auto safety = classify_minority_safety(ds);
    const auto minority_rows = class_indices(ds, ClassLabel::Minority);
    REQUIRE(safety.size() == minority_rows.size());
    for (std::size_t j = 0; j < minority_rows.size(); ++j) {
      const std::size_t majority_neighbors =
          neighbor_class_count(ds, minority_rows[j], 5, ClassLabel::Majority);
      CHECK((safety[j] == MinoritySafety::Safe) == (majority_neighbors <= 1));
    }
  }
}

TEST_CASE("row permutation does not change the tally") {
  Rng rng(251);
  const Dataset ds = testsupport::make_random_dataset(rng);
  std::vector<std::size_t> perm(ds.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  rng.shuffle(perm);
  const Dataset shuffled = take_rows(ds, perm);
  const DifficultyProfile a = profile(ds);
  const DifficultyProfile b = profile(shuffled);
  CHECK(a.n_safe == b.n_safe);
  CHECK(a.n_unsafe == b.n_unsafe);
}

TEST_CASE("uniform feature scaling does not change the tally") {
  Rng rng(257);
  const Dataset ds = testsupport::make_random_dataset(rng);
  Dataset scaled = ds;
  for (double& v : scaled.features.values) v *= 3.25;
  const DifficultyProfile a = profile(ds);
  const DifficultyProfile b = profile(scaled);
  CHECK(a.n_safe == b.n_safe);
  CHECK(a.n_unsafe == b.n_unsafe);
}

TEST_CASE("normalized distances can re-rank neighborhoods") {
  // feature 0 spans three orders of magnitude more than feature 1, so raw
  // distances ignore the vertical separation; min-max scaling restores it
  Matrix m(0, 2);
  std::vector<ClassLabel> labels;
  for (double x : {0.0, 10.0, 500.0, 700.0, 1000.0}) {
    m.append_row(std::vector<double>{x, 0.0});
    labels.push_back(ClassLabel::Majority);
  }
  m.append_row(std::vector<double>{0.0, 1.0});  // minority A
  labels.push_back(ClassLabel::Minority);
  m.append_row(std::vector<double>{30.0, 1.0});  // minority B
  labels.push_back(ClassLabel::Minority);
  const Dataset ds = make_dataset(std::move(m), std::move(labels));

  ProfileOptions raw;
  raw.k = 2;
  ProfileOptions scaled;
  scaled.k = 2;
  scaled.normalize = true;
  // raw: A's two nearest are the majority samples at x = 0 and x = 10
  CHECK(classify_minority_safety(ds, raw)[0] == MinoritySafety::Unsafe);
  // scaled: B collapses to distance 0.03 and becomes A's nearest neighbor
  CHECK(classify_minority_safety(ds, scaled)[0] == MinoritySafety::Safe);
}

TEST_CASE("profile carries the dataset shape") {
  Rng rng(263);
  testsupport::RandomDatasetOptions opt;
  opt.min_minority = opt.max_minority = 9;
  opt.min_majority = opt.max_majority = 27;
  opt.min_features = opt.max_features = 4;
  const Dataset ds = testsupport::make_random_dataset(rng, opt);
  const DifficultyProfile p = profile(ds);
  CHECK(p.samples == 36);
  CHECK(p.features == 4);
  CHECK(p.counts.majority == 27);
  CHECK(p.counts.minority == 9);
  CHECK(p.imbalance_ratio == doctest::Approx(3.0));
  CHECK(p.n_safe + p.n_unsafe == 9);
  CHECK(p.unsafe_pct ==
        doctest::Approx(100.0 * static_cast<double>(p.n_unsafe) / 9.0));
}

TEST_CASE("profiling needs minority samples") {
  Matrix m(6, 2);
  const Dataset ds =
      make_dataset(m, std::vector<ClassLabel>(6, ClassLabel::Majority));
  CHECK_THROWS_AS(classify_minority_safety(ds), SingleClass);
}

TEST_CASE("profiling needs a large enough dataset") {
  Matrix m(3, 1);
  const Dataset ds = make_dataset(
      m, {ClassLabel::Majority, ClassLabel::Minority, ClassLabel::Minority});
  CHECK_THROWS_AS(classify_minority_safety(ds), NotEnoughNeighbors);
}
