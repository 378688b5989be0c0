#include "wotboost/boosting.hpp"

#include <cassert>
#include <cmath>

#include "wotboost/error.hpp"
#include "wotboost/samplers.hpp"

namespace wotboost {

double pseudo_loss(const WeightDistribution& d,
                   std::span<const ScorePair> scores) {
  if (scores.size() != d.size()) {
    throw LengthMismatch("score vector does not match weight distribution");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    acc += d[i] * (1.0 - scores[i].on_true + scores[i].on_wrong);
  }
  return 0.5 * acc;
}

WeightDistribution update_weights(const WeightDistribution& d, double beta,
                                  std::span<const ScorePair> scores) {
  if (scores.size() != d.size()) {
    throw LengthMismatch("score vector does not match weight distribution");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgument("beta must lie in (0, 1)");
  }
  std::vector<double> raw(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    // Well-scored samples carry the larger exponent, so beta < 1 shrinks
    // them and the misscored ones come out ahead after normalization.
    const double exponent =
        0.5 * (1.0 + scores[i].on_true - scores[i].on_wrong);
    raw[i] = d[i] * std::pow(beta, exponent);
  }
  // beta > 0 keeps every positive weight positive, so the normalizer cannot
  // vanish here.
  return WeightDistribution(std::move(raw));
}

namespace {

std::vector<ScorePair> score_originals(const DecisionTree& tree,
                                       const Dataset& train) {
  std::vector<ScorePair> scores(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    const ClassScores s = tree.predict_scores(train.features.row(i));
    if (train.labels[i] == ClassLabel::Minority) {
      scores[i] = {s.minority, s.majority};
    } else {
      scores[i] = {s.majority, s.minority};
    }
  }
  return scores;
}

}  // namespace

BoostedEnsemble train_boosted(const Dataset& train, const BoostConfig& config,
                              SynthesisStrategy strategy, Rng& rng,
                              const RoundObserver& observer) {
  if (train.size() == 0) throw EmptyDataset("cannot boost on no samples");
  if (config.rounds == 0) throw InvalidArgument("rounds must be positive");
  const ClassCounts counts = class_counts(train);
  if (strategy != SynthesisStrategy::None &&
      (counts.minority == 0 || counts.majority == 0)) {
    throw SingleClass("minority synthesis needs both classes");
  }

  const std::size_t balance_quota =
      counts.majority > counts.minority ? counts.majority - counts.minority : 0;
  const std::size_t quota = config.synth_per_round.value_or(balance_quota);

  BoostedEnsemble ensemble;
  ensemble.rounds_requested = config.rounds;
  WeightDistribution d = WeightDistribution::uniform(train.size());

  for (std::size_t t = 1; t <= config.rounds; ++t) {
    SynthesisBatch batch;
    batch.samples = Matrix(0, train.n_features());
    switch (strategy) {
      case SynthesisStrategy::Weighted:
        batch = weighted_batch(train, d, quota, config.k, rng);
        break;
      case SynthesisStrategy::UniformSmote:
        batch = smote(class_features(train, ClassLabel::Minority), quota,
                      config.k, rng);
        break;
      case SynthesisStrategy::None:
        break;
    }
    const Dataset temp = augment(train, batch);

    std::vector<double> temp_weights(temp.size(), 1.0);
    if (config.temp_weighting == TempWeighting::Proportional) {
      double minority_mass = 0.0;
      for (std::size_t i = 0; i < train.size(); ++i) {
        temp_weights[i] = d[i];
        if (train.labels[i] == ClassLabel::Minority) minority_mass += d[i];
      }
      if (!batch.empty()) {
        const double share = minority_mass / static_cast<double>(batch.size());
        for (std::size_t i = train.size(); i < temp.size(); ++i) {
          temp_weights[i] = share;
        }
      }
    }

    const DecisionTree tree = fit_tree(temp, temp_weights, config.tree);
    const std::vector<ScorePair> scores = score_originals(tree, train);
    double epsilon = pseudo_loss(d, scores);

    RoundInfo info;
    info.round = t;
    const ClassCounts temp_counts = class_counts(temp);
    info.temp_majority = temp_counts.majority;
    info.temp_minority = temp_counts.minority;

    if (epsilon >= 0.5) {
      if (t > 1) {
        // A weak learner no better than chance adds nothing; drop it and
        // freeze the ensemble built so far.
        info.epsilon = epsilon;
        info.kept = false;
        info.weight_sum = d.sum();
        if (observer) observer(info);
        break;
      }
      epsilon = 0.5 - config.epsilon_floor;
    }
    if (epsilon < config.epsilon_floor) epsilon = config.epsilon_floor;
    const double beta = epsilon / (1.0 - epsilon);

    ensemble.members.push_back({tree, beta});
    d = update_weights(d, beta, scores);

    info.epsilon = epsilon;
    info.beta = beta;
    info.weight_sum = d.sum();
    if (observer) observer(info);
  }
  assert(!ensemble.members.empty());
  return ensemble;
}

EnsemblePrediction predict_ensemble(const BoostedEnsemble& ensemble,
                                    std::span<const double> x) {
  if (ensemble.members.empty()) {
    throw EmptyEnsemble("ensemble holds no trained rounds");
  }
  double vote_majority = 0.0;
  double vote_minority = 0.0;
  for (const EnsembleMember& member : ensemble.members) {
    const double alpha = std::log(1.0 / member.beta);
    const ClassScores s = member.tree.predict_scores(x);
    vote_majority += alpha * s.majority;
    vote_minority += alpha * s.minority;
  }
  EnsemblePrediction out;
  out.label = vote_minority > vote_majority ? ClassLabel::Minority
                                            : ClassLabel::Majority;
  const double total = vote_majority + vote_minority;
  out.minority_score = total > 0.0 ? vote_minority / total : 0.5;
  return out;
}

}  // namespace wotboost
