#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "test_support.hpp"
#include "wotboost/error.hpp"
#include "wotboost/neighbors.hpp"
#include "wotboost/samplers.hpp"

using namespace wotboost;

namespace {

Matrix random_pool(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(0, cols);
  std::vector<double> row(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (double& v : row) v = rng.unit() * 8.0 - 4.0;
    m.append_row(row);
  }
  return m;
}

// A synthetic row must be reproducible from its recorded parent and lambda
// through one of the parent's k nearest pool neighbors.
void check_segment_membership(const SynthesisBatch& batch, const Matrix& pool,
                              std::size_t k) {
  for (std::size_t j = 0; j < batch.size(); ++j) {
    const std::size_t parent = batch.parent_indices[j];
    const double lambda = batch.lambdas[j];
    REQUIRE(parent < pool.rows);
    REQUIRE(lambda >= 0.0);
    REQUIRE(lambda <= 1.0);
    const NeighborResult nn = k_nearest(pool.row(parent), pool, k, parent);
    bool matched = false;
    for (std::size_t nbr : nn.indices) {
      bool all_close = true;
      for (std::size_t c = 0; c < pool.cols; ++c) {
        const double expect =
            pool.at(parent, c) + lambda * (pool.at(nbr, c) - pool.at(parent, c));
        if (std::abs(expect - batch.samples.at(j, c)) > 1e-12) {
          all_close = false;
          break;
        }
      }
      if (all_close) {
        matched = true;
        break;
      }
    }
    CHECK(matched);
  }
}

}  // namespace

TEST_CASE("allocate_counts hand cases") {
  SUBCASE("even split") {
    const std::vector<double> w{1.0, 1.0, 1.0, 1.0};
    const AllocationPlan plan = allocate_counts(w, 8);
    CHECK(plan.counts == std::vector<std::size_t>{2, 2, 2, 2});
  }
  SUBCASE("proportional") {
    const std::vector<double> w{3.0, 1.0};
    CHECK(allocate_counts(w, 4).counts == std::vector<std::size_t>{3, 1});
  }
  SUBCASE("largest remainder, tie to the lower index") {
    const std::vector<double> w{0.5, 0.3, 0.2};
    // targets 3.5, 2.1, 1.4 -> floors 3, 2, 1 and the spare unit goes to
    // the largest remainder
    CHECK(allocate_counts(w, 7).counts == std::vector<std::size_t>{4, 2, 1});
  }
  SUBCASE("zero weight gets zero") {
    const std::vector<double> w{0.0, 1.0, 0.0, 1.0};
    const AllocationPlan plan = allocate_counts(w, 9);
    CHECK(plan.counts[0] == 0);
    CHECK(plan.counts[2] == 0);
    CHECK(plan.counts[1] + plan.counts[3] == 9);
  }
  SUBCASE("zero total") {
    CHECK(allocate_counts(std::vector<double>{1.0, 2.0}, 0).counts ==
          std::vector<std::size_t>{0, 0});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(allocate_counts(std::vector<double>{}, 3), EmptyDataset);
    CHECK_THROWS_AS(allocate_counts(std::vector<double>{0.0, 0.0}, 3),
                    AllZeroWeights);
    CHECK_THROWS_AS(allocate_counts(std::vector<double>{-1.0, 2.0}, 3),
                    InvalidArgument);
  }
}

TEST_CASE("allocate_counts conserves the total and stays within one") {
  Rng rng(61);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.index(50);
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& v : w) {
      v = rng.index(5) == 0 ? 0.0 : rng.unit() * 10.0;
      sum += v;
    }
    if (sum == 0.0) w[rng.index(n)] = 1.0, sum = 1.0;
    const std::size_t total = rng.index(2000);
    const AllocationPlan plan = allocate_counts(w, total);
    CHECK(std::accumulate(plan.counts.begin(), plan.counts.end(),
                          std::size_t{0}) == total);
    for (std::size_t i = 0; i < n; ++i) {
      const double target = static_cast<double>(total) * w[i] / sum;
      CHECK(std::abs(static_cast<double>(plan.counts[i]) - target) < 1.0);
      if (w[i] == 0.0) CHECK(plan.counts[i] == 0);
    }
  }
}

TEST_CASE("smote spreads quota evenly and respects geometry") {
  Rng rng(67);
  const Matrix pool = random_pool(rng, 12, 3);
  Rng draw(101);
  const SynthesisBatch batch = smote(pool, 24, 5, draw);
  REQUIRE(batch.size() == 24);
  CHECK(batch.samples.rows == 24);
  CHECK(batch.samples.cols == 3);

  // uniform quota: every parent appears exactly twice
  std::vector<std::size_t> per_parent(12, 0);
  for (std::size_t p : batch.parent_indices) per_parent[p]++;
  for (std::size_t c : per_parent) CHECK(c == 2);

  check_segment_membership(batch, pool, 5);
}

TEST_CASE("smote edge cases") {
  Rng rng(71);
  const Matrix pool = random_pool(rng, 6, 2);
  Rng draw(1);
  CHECK(smote(pool, 0, 5, draw).empty());
  CHECK_THROWS_AS(smote(pool, 3, 6, draw), NotEnoughNeighbors);
  Matrix empty(0, 2);
  CHECK_THROWS_AS(smote(empty, 3, 1, draw), EmptyDataset);
}

TEST_CASE("smote with two points stays on their segment") {
  Matrix pool(0, 2);
  pool.append_row(std::vector<double>{0.0, 0.0});
  pool.append_row(std::vector<double>{2.0, 2.0});
  Rng draw(5);
  const SynthesisBatch batch = smote(pool, 10, 1, draw);
  for (std::size_t j = 0; j < batch.size(); ++j) {
    // every synthetic lies on the segment between the two points, with both
    // coordinates equal
    CHECK(batch.samples.at(j, 0) == doctest::Approx(batch.samples.at(j, 1)));
    CHECK(batch.samples.at(j, 0) >= 0.0);
    CHECK(batch.samples.at(j, 0) <= 2.0);
    // and the recorded lambda reconstructs it exactly
    const double from = batch.parent_indices[j] == 0 ? 0.0 : 2.0;
    const double to = batch.parent_indices[j] == 0 ? 2.0 : 0.0;
    CHECK(batch.samples.at(j, 0) ==
          doctest::Approx(from + batch.lambdas[j] * (to - from)));
  }
}

TEST_CASE("same seed, same batch") {
  Rng data_rng(73);
  const Matrix pool = random_pool(data_rng, 15, 4);
  Rng a(42);
  Rng b(42);
  const SynthesisBatch ba = smote(pool, 30, 5, a);
  const SynthesisBatch bb = smote(pool, 30, 5, b);
  CHECK(ba.samples.values == bb.samples.values);
  CHECK(ba.parent_indices == bb.parent_indices);
  CHECK(ba.lambdas == bb.lambdas);
  Rng c(43);
  const SynthesisBatch bc = smote(pool, 30, 5, c);
  CHECK(ba.samples.values != bc.samples.values);
}

TEST_CASE("adasyn balances and targets difficult samples") {
  Rng rng(79);
  SUBCASE("already balanced gives an empty batch") {
    testsupport::RandomDatasetOptions opt;
    opt.min_minority = opt.max_minority = 10;
    opt.min_majority = opt.max_majority = 10;
    const Dataset ds = testsupport::make_random_dataset(rng, opt);
    Rng draw(3);
    CHECK(adasyn(ds, 5, 1.0, draw).empty());
  }
  SUBCASE("beta 1 closes the gap exactly") {
    testsupport::RandomDatasetOptions opt;
    opt.min_minority = opt.max_minority = 10;
    opt.min_majority = opt.max_majority = 20;
    const Dataset ds = testsupport::make_random_dataset(rng, opt);
    Rng draw(3);
    CHECK(adasyn(ds, 5, 1.0, draw).size() == 10);
  }
  SUBCASE("quota concentrates on the contested sample") {
    // minority cluster far from the majority, plus one minority sample
    // planted inside the majority cluster: only that one is difficult
    Matrix m(0, 2);
    std::vector<ClassLabel> labels;
    Rng noise(83);
    for (int i = 0; i < 10; ++i) {
      m.append_row(std::vector<double>{noise.unit() * 0.5, noise.unit() * 0.5});
      labels.push_back(ClassLabel::Majority);
    }
    m.append_row(std::vector<double>{0.25, 0.25});
    labels.push_back(ClassLabel::Minority);
    for (int i = 0; i < 6; ++i) {
      m.append_row(
          std::vector<double>{20.0 + noise.unit(), 20.0 + noise.unit()});
      labels.push_back(ClassLabel::Minority);
    }
    const Dataset ds = make_dataset(std::move(m), std::move(labels));
    Rng draw(7);
    const SynthesisBatch batch = adasyn(ds, 5, 1.0, draw);
    CHECK(batch.size() == 3);  // 10 majority - 7 minority
    for (std::size_t p : batch.parent_indices) {
      CHECK(p == 0);  // first minority row in dataset order
    }
  }
  SUBCASE("uniform fallback when nothing is difficult") {
    testsupport::RandomDatasetOptions opt;
    opt.min_minority = opt.max_minority = 8;
    opt.min_majority = opt.max_majority = 24;
    opt.spread = 100.0;
    const Dataset ds = testsupport::make_random_dataset(rng, opt);
    Rng draw(11);
    const SynthesisBatch batch = adasyn(ds, 5, 1.0, draw);
    CHECK(batch.size() == 16);
    std::vector<std::size_t> per_parent(8, 0);
    for (std::size_t p : batch.parent_indices) per_parent[p]++;
    for (std::size_t c : per_parent) CHECK(c == 2);
  }
}

TEST_CASE("weighted_batch follows the distribution") {
  Rng rng(89);
  testsupport::RandomDatasetOptions opt;
  opt.min_minority = opt.max_minority = 8;
  opt.min_majority = opt.max_majority = 20;
  const Dataset ds = testsupport::make_random_dataset(rng, opt);
  const auto minority_rows = class_indices(ds, ClassLabel::Minority);

  SUBCASE("concentrated weight pulls every synthetic to one parent") {
    std::vector<double> raw(ds.size(), 0.0);
    raw[minority_rows[3]] = 1.0;
    raw[class_indices(ds, ClassLabel::Majority)[0]] = 5.0;  // ignored
    const WeightDistribution d{raw};
    Rng draw(13);
    const SynthesisBatch batch = weighted_batch(ds, d, 12, 5, draw);
    REQUIRE(batch.size() == 12);
    for (std::size_t p : batch.parent_indices) CHECK(p == 3);
  }
  SUBCASE("uniform weights spread the quota evenly") {
    const WeightDistribution d = WeightDistribution::uniform(ds.size());
    Rng draw(17);
    const SynthesisBatch batch = weighted_batch(ds, d, 16, 5, draw);
    std::vector<std::size_t> per_parent(8, 0);
    for (std::size_t p : batch.parent_indices) per_parent[p]++;
    for (std::size_t c : per_parent) CHECK(c == 2);
    check_segment_membership(batch, class_features(ds, ClassLabel::Minority), 5);
  }
  SUBCASE("zero quota, empty batch") {
    const WeightDistribution d = WeightDistribution::uniform(ds.size());
    Rng draw(19);
    CHECK(weighted_batch(ds, d, 0, 5, draw).empty());
  }
  SUBCASE("all minority weight zero") {
    std::vector<double> raw(ds.size(), 0.0);
    for (std::size_t r : class_indices(ds, ClassLabel::Majority)) raw[r] = 1.0;
    const WeightDistribution d{raw};
    Rng draw(23);
    CHECK_THROWS_AS(weighted_batch(ds, d, 4, 5, draw), AllZeroWeights);
  }
  SUBCASE("length mismatch") {
    const WeightDistribution d = WeightDistribution::uniform(ds.size() + 1);
    Rng draw(29);
    CHECK_THROWS_AS(weighted_batch(ds, d, 4, 5, draw), LengthMismatch);
  }
}

TEST_CASE("weighted_oversample appends minority rows") {
  Rng rng(97);
  testsupport::RandomDatasetOptions opt;
  opt.min_minority = opt.max_minority = 10;
  opt.min_majority = opt.max_majority = 25;
  const Dataset ds = testsupport::make_random_dataset(rng, opt);
  const WeightDistribution d = WeightDistribution::uniform(ds.size());
  Rng draw(31);
  const Dataset grown = weighted_oversample(ds, d, 15, 5, draw);
  CHECK(grown.size() == ds.size() + 15);
  const ClassCounts counts = class_counts(grown);
  CHECK(counts.majority == 25);
  CHECK(counts.minority == 25);
  // originals are untouched, in place
  for (std::size_t r = 0; r < ds.size(); ++r) {
    CHECK(std::equal(ds.features.row(r).begin(), ds.features.row(r).end(),
                     grown.features.row(r).begin()));
    CHECK(ds.labels[r] == grown.labels[r]);
  }
}
