"""From-scratch classifiers behind one train/predict interface."""

from zodiac_lab.config import TrainConfig
from zodiac_lab.features import FeatureMatrix
from zodiac_lab.lexicon import TRAIT_POOL_SIZE
from zodiac_lab.models.base import TrainedModel, predict, predict_proba, softmax
from zodiac_lab.models.forest import gini_impurity, train_forest
from zodiac_lab.models.logreg import train_logreg
from zodiac_lab.models.mlp import train_mlp
from zodiac_lab.models.serialization import load_model, save_model


def train_model(X: FeatureMatrix, config: TrainConfig, n_classes: int = TRAIT_POOL_SIZE,
                n_jobs: int = 1) -> TrainedModel:
    """Dispatch to the trainer for ``config.model_kind``."""
    if config.model_kind == "logreg":
        return train_logreg(X, config, n_classes)
    if config.model_kind == "forest":
        return train_forest(X, config, n_classes, n_jobs=n_jobs)
    if config.model_kind == "mlp":
        return train_mlp(X, config, n_classes)
    raise ValueError(f"Unknown model kind: {config.model_kind!r}")


__all__ = [
    "TrainedModel",
    "gini_impurity",
    "load_model",
    "predict",
    "predict_proba",
    "save_model",
    "softmax",
    "train_forest",
    "train_logreg",
    "train_mlp",
    "train_model",
]
