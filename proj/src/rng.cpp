#include "wotboost/rng.hpp"

#include <cassert>
#include <limits>

namespace wotboost {

std::size_t Rng::index(std::size_t bound) {
  assert(bound > 0);
  const std::uint64_t range = bound;
  // Largest multiple of `range` that fits in 64 bits; draws at or above it
  // would bias the low residues, so they are rejected and redrawn.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  std::uint64_t draw = next();
  while (limit != std::numeric_limits<std::uint64_t>::max() && draw > limit) {
    draw = next();
  }
  return static_cast<std::size_t>(draw % range);
}

double Rng::unit() {
  // Top 53 bits over (2^53 - 1) covers [0, 1] with both endpoints reachable.
  constexpr double kDenom = 9007199254740991.0;
  return static_cast<double>(next() >> 11) / kDenom;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace wotboost
