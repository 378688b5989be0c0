"""Weighted minority oversampling, boosting, and imbalance metrics."""

from wotboost._core import (
    BoostedEnsemble,
    Dataset,
    DecisionTree,
    WotboostError,
    adasyn,
    evaluate,
    fit_tree,
    load_csv,
    profile,
    roc_auc,
    smote,
    stratified_split,
    train_boosted,
    weighted_oversample,
)

__all__ = [
    "BoostedEnsemble",
    "Dataset",
    "DecisionTree",
    "WotboostError",
    "adasyn",
    "evaluate",
    "fit_tree",
    "load_csv",
    "profile",
    "roc_auc",
    "smote",
    "stratified_split",
    "train_boosted",
    "weighted_oversample",
]
