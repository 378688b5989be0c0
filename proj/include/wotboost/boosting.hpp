#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wotboost/dataset.hpp"
#include "wotboost/rng.hpp"
#include "wotboost/tree.hpp"

namespace wotboost {

/// How each round builds its temporary training set.
enum class SynthesisStrategy {
  Weighted,      // minority synthesis allocated by the boosting weights
  UniformSmote,  // plain SMOTE, quota spread evenly over minority parents
  None,          // no synthesis; plain reweighted boosting
};

/// Sample weights handed to the weak learner on the temporary set.
enum class TempWeighting {
  Proportional,  // originals keep D_t; synthetics share the minority mass
  Uniform,       // every temporary sample weighs the same
};

struct BoostConfig {
  std::size_t rounds = 10;
  std::size_t k = 5;
  /// Synthetic samples per round; unset means balance the training split
  /// (majority count minus minority count, recomputed from the originals
  /// every round).
  std::optional<std::size_t> synth_per_round = std::nullopt;
  TreeConfig tree = {};
  TempWeighting temp_weighting = TempWeighting::Proportional;
  double epsilon_floor = 1e-10;
};

/// Scores of one round's tree on one original training sample.
struct ScorePair {
  double on_true;   // score assigned to the sample's own class
  double on_wrong;  // score assigned to the other class
};

/// Pseudo-loss of a round:
///   epsilon = 1/2 * sum_i d_i * (1 - s_true_i + s_wrong_i).
/// Lies in [0, 1] for scores in [0, 1]; 1/2 exactly when every sample
/// scores its two classes equally.
/// Throws LengthMismatch when scores and weights disagree in length.
double pseudo_loss(const WeightDistribution& d,
                   std::span<const ScorePair> scores);

/// One boosting weight update:
///   d_i <- d_i * beta^((1/2) * (1 - s_true_i + s_wrong_i)),
/// renormalized to sum to one. Confidently correct samples shrink the most.
/// Throws InvalidArgument unless beta lies in (0, 1).
WeightDistribution update_weights(const WeightDistribution& d, double beta,
                                  std::span<const ScorePair> scores);

struct EnsembleMember {
  DecisionTree tree;
  double beta;  // epsilon / (1 - epsilon); vote weight is log(1 / beta)
};

struct BoostedEnsemble {
  std::vector<EnsembleMember> members;
  std::size_t rounds_requested = 0;
};

/// Telemetry for one completed round, delivered to an observer.
struct RoundInfo {
  std::size_t round = 0;           // 1-based
  std::size_t temp_majority = 0;   // class counts of the temporary set
  std::size_t temp_minority = 0;
  double epsilon = 0.0;
  double beta = 0.0;
  double weight_sum = 0.0;         // distribution total after the update
  bool kept = true;                // false when the round was discarded
};

using RoundObserver = std::function<void(const RoundInfo&)>;

/// Boosting loop shared by the weighted and uniform-SMOTE variants.
///
/// Starts from uniform weights over the training samples. Each round
/// synthesizes minority samples per the strategy, fits a tree on the
/// temporary set, scores the original samples, and updates the weights by
/// the pseudo-loss. The temporary set is discarded after the round. A round
/// with epsilon >= 1/2 is discarded and stops the loop, except at round one
/// where epsilon clamps just below 1/2 so the ensemble is never empty;
/// epsilon also clamps up to the floor so beta stays positive.
///
/// Throws SingleClass when a synthesis strategy is asked to run without
/// both classes; sampler and tree errors propagate.
BoostedEnsemble train_boosted(const Dataset& train, const BoostConfig& config,
                              SynthesisStrategy strategy, Rng& rng,
                              const RoundObserver& observer = {});

struct EnsemblePrediction {
  ClassLabel label = ClassLabel::Majority;
  double minority_score = 0.0;  // minority vote share in [0, 1]
};

/// Weighted vote over the members: each tree contributes log(1 / beta)
/// times its class scores. An exact tie goes to the majority class.
/// Throws EmptyEnsemble on an ensemble with no members.
EnsemblePrediction predict_ensemble(const BoostedEnsemble& ensemble,
                                    std::span<const double> x);

}  // namespace wotboost
