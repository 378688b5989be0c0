#pragma once

#include <cstdint>
#include <random>

namespace wotboost {

/// Deterministic random source used by every stochastic operation.
///
/// Wraps std::mt19937_64 but maps raw draws to indices and unit-interval
/// values by hand. The standard distribution templates are
/// implementation-defined, so going through them would make results differ
/// between standard libraries for the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from {0, ..., bound - 1}. Unbiased via rejection sampling.
  std::size_t index(std::size_t bound);

  /// Uniform draw from the closed interval [0, 1] on a 2^53 grid.
  double unit();

  /// Fisher-Yates shuffle of v, consuming size(v) - 1 index draws.
  template <typename Vec>
  void shuffle(Vec& v) {
    if (v.size() < 2) return;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
      std::size_t j = index(i + 1);
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Stable derivation of an independent stream seed (splitmix64 finalizer).
/// Used to decouple per-model and per-run streams so adding a model to a
/// benchmark never perturbs the draws seen by the others.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace wotboost
