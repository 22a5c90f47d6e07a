"""One-hidden-layer perceptron: ReLU hidden layer, softmax output."""

import logging
import math
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
from zodiac_lab.synthpop.rng import Pcg32, rng_new

logger = logging.getLogger(__name__)

MLP_INIT_STREAM = 201
MLP_SHUFFLE_STREAM = 202


@dataclass(frozen=True, eq=False)
class MlpModel:
    w1: np.ndarray  # hidden x d
    b1: np.ndarray
    w2: np.ndarray  # K x hidden
    b2: np.ndarray

    def arrays(self) -> Tuple[np.ndarray, ...]:
        return self.w1, self.b1, self.w2, self.b2

    def forward(self, values: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        pre_activation = values @ self.w1.T + self.b1
        hidden = np.maximum(pre_activation, 0.0)
        return pre_activation, hidden, hidden @ self.w2.T + self.b2

    def predict_proba(self, values: np.ndarray) -> np.ndarray:
        return softmax(self.forward(values)[2])


def glorot_uniform(rng: Pcg32, fan_out: int, fan_in: int) -> np.ndarray:
    """fan_out x fan_in weights uniform in +/- sqrt(6 / (fan_in + fan_out)), row-major draws."""
    limit = math.sqrt(6.0 / (fan_in + fan_out))
    draws = np.fromiter((rng.random_float() for _ in range(fan_out * fan_in)),
                        dtype=np.float64, count=fan_out * fan_in)
    return ((2.0 * draws - 1.0) * limit).reshape(fan_out, fan_in)


def init_mlp(width: int, hidden_units: int, n_classes: int, seed: int) -> MlpModel:
    rng = rng_new(seed, MLP_INIT_STREAM)
    w1 = glorot_uniform(rng, hidden_units, width)
    w2 = glorot_uniform(rng, n_classes, hidden_units)
    return MlpModel(w1=w1, b1=np.zeros(hidden_units), w2=w2, b2=np.zeros(n_classes))


def mlp_loss_and_gradients(model: MlpModel, values: np.ndarray,
                           labels: np.ndarray) -> Tuple[float, MlpModel]:
    """Mean cross-entropy and its backpropagated gradient (as an MlpModel)."""
    n = values.shape[0]
    rows = np.arange(n)
    pre_activation, hidden, scores = model.forward(values)
    log_probs = log_softmax(scores)
    loss = -log_probs[rows, labels].mean()

    d_scores = np.exp(log_probs)
    d_scores[rows, labels] -= 1.0
    d_scores /= n
    d_hidden = (d_scores @ model.w2) * (pre_activation > 0.0)
    grad = MlpModel(
        w1=d_hidden.T @ values,
        b1=d_hidden.sum(axis=0),
        w2=d_scores.T @ hidden,
        b2=d_scores.sum(axis=0),
    )
    return float(loss), grad


def train_mlp(X: FeatureMatrix, config: TrainConfig,
              n_classes: int = TRAIT_POOL_SIZE) -> TrainedModel:
    """Fit the perceptron with seeded mini-batch gradient descent.

    Raises:
        TrainingDivergenceError: If the loss becomes non-finite
    """
    params = config.mlp
    check_labels(X.labels, n_classes)
    model = init_mlp(X.width, params.hidden_units, n_classes, config.seed)
    rng = rng_new(config.seed, MLP_SHUFFLE_STREAM)

    for epoch in range(params.epochs):
        order = epoch_order(rng, X.n_rows)
        total = 0.0
        for start in range(0, X.n_rows, params.batch_size):
            batch = order[start:start + params.batch_size]
            loss, grad = mlp_loss_and_gradients(model, X.values[batch], X.labels[batch])
            if not np.isfinite(loss):
                raise TrainingDivergenceError("mlp", epoch)
            for param, step in zip(model.arrays(), grad.arrays()):
                param -= params.learning_rate * step
            total += loss * len(batch)
        if epoch % 50 == 0:
            logger.debug("mlp epoch %d: mean batch loss %.6f", epoch, total / X.n_rows)

    if not all(np.all(np.isfinite(a)) for a in model.arrays()):
        raise TrainingDivergenceError("mlp", params.epochs)
    return TrainedModel(config=config, n_classes=n_classes, width=X.width, params=model)
