#include "wotboost/neighbors.hpp"

#include <algorithm>
#include <cmath>

#include "wotboost/error.hpp"

namespace wotboost {

NeighborResult k_nearest(std::span<const double> query, const Matrix& pool,
                         std::size_t k, std::optional<std::size_t> self_index) {
  if (query.size() != pool.cols) {
    throw DimensionMismatch("query width does not match pool columns");
  }
  if (k == 0) throw InvalidArgument("k must be positive");
  std::vector<std::pair<double, std::size_t>> order;
  order.reserve(pool.rows);
  for (std::size_t i = 0; i < pool.rows; ++i) {
    if (self_index && *self_index == i) continue;
    order.emplace_back(squared_distance(query, pool.row(i)), i);
  }
  if (order.size() < k) {
    throw NotEnoughNeighbors("need " + std::to_string(k) +
                             " neighbors, candidate pool has " +
                             std::to_string(order.size()));
  }
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                    order.end());
  NeighborResult out;
  out.indices.reserve(k);
  out.distances.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.indices.push_back(order[i].second);
    out.distances.push_back(std::sqrt(order[i].first));
  }
  return out;
}

std::size_t neighbor_class_count(const Dataset& ds, std::size_t query_index,
                                 std::size_t k, ClassLabel counted) {
  if (query_index >= ds.size()) {
    throw InvalidArgument("query index out of range");
  }
  const NeighborResult nn =
      k_nearest(ds.features.row(query_index), ds.features, k, query_index);
  std::size_t hits = 0;
  for (std::size_t idx : nn.indices) {
    if (ds.labels[idx] == counted) ++hits;
  }
  return hits;
}

std::vector<std::vector<std::size_t>> neighbor_table(const Matrix& points,
                                                     std::size_t k) {
  std::vector<std::vector<std::size_t>> table;
  table.reserve(points.rows);
  for (std::size_t i = 0; i < points.rows; ++i) {
    table.push_back(k_nearest(points.row(i), points, k, i).indices);
  }
  return table;
}

}  // namespace wotboost
