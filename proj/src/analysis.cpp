#include "wotboost/analysis.hpp"

#include <limits>

#include "wotboost/error.hpp"
#include "wotboost/neighbors.hpp"

namespace wotboost {

Dataset min_max_scaled(const Dataset& ds) {
  Dataset out = ds;
  for (std::size_t c = 0; c < ds.n_features(); ++c) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < ds.size(); ++r) {
      lo = std::min(lo, ds.features.at(r, c));
      hi = std::max(hi, ds.features.at(r, c));
    }
    const double range = hi - lo;
    for (std::size_t r = 0; r < ds.size(); ++r) {
      out.features.at(r, c) =
          range > 0.0 ? (ds.features.at(r, c) - lo) / range : 0.0;
    }
  }
  return out;
}

std::vector<MinoritySafety> classify_minority_safety(
    const Dataset& ds, const ProfileOptions& options) {
  const auto minority_rows = class_indices(ds, ClassLabel::Minority);
  if (minority_rows.empty()) {
    throw SingleClass("no minority samples to classify");
  }
  Dataset scaled;
  const Dataset* space = &ds;
  if (options.normalize) {
    scaled = min_max_scaled(ds);
    space = &scaled;
  }
  std::vector<MinoritySafety> out;
  out.reserve(minority_rows.size());
  for (std::size_t row : minority_rows) {
    const std::size_t majority_neighbors =
        neighbor_class_count(*space, row, options.k, ClassLabel::Majority);
    out.push_back(majority_neighbors <= 1 ? MinoritySafety::Safe
                                          : MinoritySafety::Unsafe);
  }
  return out;
}

DifficultyProfile profile(const Dataset& ds, const ProfileOptions& options) {
  DifficultyProfile p;
  p.samples = ds.size();
  p.features = ds.n_features();
  p.counts = class_counts(ds);
  p.imbalance_ratio = imbalance_ratio(ds);
  const auto safety = classify_minority_safety(ds, options);
  for (MinoritySafety s : safety) {
    if (s == MinoritySafety::Safe) {
      ++p.n_safe;
    } else {
      ++p.n_unsafe;
    }
  }
  p.unsafe_pct = 100.0 * static_cast<double>(p.n_unsafe) /
                 static_cast<double>(safety.size());
  return p;
}

}  // namespace wotboost
