"""Uniform predict interface shared by the three classifier families."""

from dataclasses import dataclass
from typing import Protocol

import numpy as np

from zodiac_lab.config import TrainConfig
from zodiac_lab.errors import FeatureSchemaError
from zodiac_lab.features import FeatureMatrix


class Classifier(Protocol):
    def predict_proba(self, values: np.ndarray) -> np.ndarray:
        ...


def softmax(scores) -> np.ndarray:
    """Row-wise softmax with max-subtraction.

    Raises:
        ValueError: If any score is non-finite
    """
    scores = np.asarray(scores, dtype=np.float64)
    if not np.all(np.isfinite(scores)):
        raise ValueError("softmax input must be finite")
    shifted = scores - scores.max(axis=-1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=-1, keepdims=True)


def log_softmax(scores: np.ndarray) -> np.ndarray:
    """Stable log-softmax; non-finite inputs propagate (used inside training)."""
    with np.errstate(invalid="ignore", over="ignore"):
        shifted = scores - scores.max(axis=-1, keepdims=True)
        return shifted - np.log(np.exp(shifted).sum(axis=-1, keepdims=True))


def check_labels(labels: np.ndarray, n_classes: int) -> None:
    if labels.size and (labels.min() < 0 or labels.max() >= n_classes):
        raise FeatureSchemaError(f"labels must lie in [0, {n_classes})")


def epoch_order(rng, n: int) -> np.ndarray:
    """Per-epoch mini-batch order drawn from the seeded stream."""
    return np.asarray(rng.shuffle(range(n)), dtype=np.int64)


@dataclass(frozen=True, eq=False)
class TrainedModel:
    """A fitted classifier plus the config it was trained with."""

    config: TrainConfig
    n_classes: int
    width: int
    params: Classifier

    @property
    def kind(self) -> str:
        return self.config.model_kind


def predict_proba(model: TrainedModel, X: FeatureMatrix) -> np.ndarray:
    """n x K class probabilities.

    Raises:
        FeatureSchemaError: If the feature width differs from training
    """
    if X.width != model.width:
        raise FeatureSchemaError(
            f"{model.kind} model expects {model.width} features, got {X.width}"
        )
    return model.params.predict_proba(X.values)


def predict(model: TrainedModel, X: FeatureMatrix) -> np.ndarray:
    """Argmax class per row; np.argmax resolves ties to the lowest index."""
    return np.argmax(predict_proba(model, X), axis=1)
