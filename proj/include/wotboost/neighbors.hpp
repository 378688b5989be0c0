#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wotboost/dataset.hpp"
#include "wotboost/matrix.hpp"

namespace wotboost {

struct NeighborResult {
  std::vector<std::size_t> indices;    // ascending by distance
  std::vector<double> distances;       // Euclidean, parallel to indices
};

/// The k nearest rows of `pool` to `query` by Euclidean distance.
/// Exact ties are broken toward the lower row index. When `self_index` is
/// given that row is excluded from the candidates.
/// Throws NotEnoughNeighbors when fewer than k candidates remain,
/// DimensionMismatch when the query width differs from the pool.
NeighborResult k_nearest(std::span<const double> query, const Matrix& pool,
                         std::size_t k,
                         std::optional<std::size_t> self_index = std::nullopt);

/// Of sample `query_index`'s k nearest neighbors within the whole dataset
/// (itself excluded), how many carry `counted`.
std::size_t neighbor_class_count(const Dataset& ds, std::size_t query_index,
                                 std::size_t k, ClassLabel counted);

/// k nearest neighbors within `points` for every row of `points`, self
/// excluded. Row i of the result lists the k neighbor indices of row i.
std::vector<std::vector<std::size_t>> neighbor_table(const Matrix& points,
                                                     std::size_t k);

}  // namespace wotboost
