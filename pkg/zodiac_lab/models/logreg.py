"""Multinomial logistic regression trained by mini-batch gradient descent.

Objective: mean softmax cross-entropy + (l2_penalty / 2) * ||W||^2.
Parameters start at zero, so the only seed dependence is batch order.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from zodiac_lab.config import TrainConfig
from zodiac_lab.errors import TrainingDivergenceError
from zodiac_lab.features import FeatureMatrix
from zodiac_lab.lexicon import TRAIT_POOL_SIZE
from zodiac_lab.models.base import (
    TrainedModel,
    check_labels,
    epoch_order,
    log_softmax,
    softmax,
)
from zodiac_lab.synthpop.rng import rng_new

logger = logging.getLogger(__name__)

LOGREG_SHUFFLE_STREAM = 101


@dataclass(frozen=True, eq=False)
class LogRegModel:
    weights: np.ndarray  # K x d
    biases: np.ndarray  # K

    def scores(self, values: np.ndarray) -> np.ndarray:
        return values @ self.weights.T + self.biases

    def predict_proba(self, values: np.ndarray) -> np.ndarray:
        return softmax(self.scores(values))


def logreg_loss_and_gradients(model: LogRegModel, values: np.ndarray, labels: np.ndarray,
                              l2_penalty: float) -> Tuple[float, LogRegModel]:
    """Objective value and its analytic gradient (returned as a LogRegModel)."""
    n = values.shape[0]
    rows = np.arange(n)
    log_probs = log_softmax(model.scores(values))
    loss = -log_probs[rows, labels].mean() + 0.5 * l2_penalty * np.sum(model.weights ** 2)

    delta = np.exp(log_probs)
    delta[rows, labels] -= 1.0
    delta /= n
    grad = LogRegModel(
        weights=delta.T @ values + l2_penalty * model.weights,
        biases=delta.sum(axis=0),
    )
    return float(loss), grad


def train_logreg(X: FeatureMatrix, config: TrainConfig,
                 n_classes: int = TRAIT_POOL_SIZE) -> TrainedModel:
    """Fit a multinomial logistic regression on ``X``.

    Raises:
        TrainingDivergenceError: If the loss becomes non-finite
    """
    params = config.logreg
    check_labels(X.labels, n_classes)
    model = LogRegModel(
        weights=np.zeros((n_classes, X.width), dtype=np.float64),
        biases=np.zeros(n_classes, dtype=np.float64),
    )
    rng = rng_new(config.seed, LOGREG_SHUFFLE_STREAM)

    for epoch in range(params.epochs):
        order = epoch_order(rng, X.n_rows)
        total = 0.0
        for start in range(0, X.n_rows, params.batch_size):
            batch = order[start:start + params.batch_size]
            loss, grad = logreg_loss_and_gradients(
                model, X.values[batch], X.labels[batch], params.l2_penalty
            )
            if not np.isfinite(loss):
                raise TrainingDivergenceError("logreg", epoch)
            model.weights[...] -= params.learning_rate * grad.weights
            model.biases[...] -= params.learning_rate * grad.biases
            total += loss * len(batch)
        if epoch % 50 == 0:
            logger.debug("logreg epoch %d: mean batch loss %.6f", epoch, total / X.n_rows)

    if not (np.all(np.isfinite(model.weights)) and np.all(np.isfinite(model.biases))):
        raise TrainingDivergenceError("logreg", params.epochs)
    return TrainedModel(config=config, n_classes=n_classes, width=X.width, params=model)
