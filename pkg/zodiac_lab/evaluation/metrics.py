"""Accuracy, confusion matrices and the analytic baselines."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from zodiac_lab.errors import EvaluationError
from zodiac_lab.lexicon import TRAIT_POOL_SIZE, TRAITS_PER_SIGN, AssignmentTable, trait_multiplicity


@dataclass(frozen=True, eq=False)
class ConfusionMatrix:
    """Rows are true classes, columns predicted classes."""

    counts: np.ndarray

    @property
    def support(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def n_classes(self) -> int:
        return self.counts.shape[0]

    def trace(self) -> int:
        return int(np.trace(self.counts))


def _as_pair(predictions: Sequence[int], truths: Sequence[int]):
    predictions = np.asarray(predictions, dtype=np.int64)
    truths = np.asarray(truths, dtype=np.int64)
    if predictions.shape != truths.shape:
        raise EvaluationError(f"{len(predictions)} predictions for {len(truths)} truths")
    if truths.size == 0:
        raise EvaluationError("Cannot score an empty prediction list")
    return predictions, truths


def accuracy(predictions: Sequence[int], truths: Sequence[int]) -> float:
    predictions, truths = _as_pair(predictions, truths)
    return float(np.mean(predictions == truths))


def confusion(predictions: Sequence[int], truths: Sequence[int],
              n_classes: int = TRAIT_POOL_SIZE) -> ConfusionMatrix:
    """Count (truth, prediction) pairs.

    Raises:
        EvaluationError: If any class lies outside [0, n_classes)
    """
    predictions, truths = _as_pair(predictions, truths)
    for name, values in (("prediction", predictions), ("truth", truths)):
        if values.min() < 0 or values.max() >= n_classes:
            raise EvaluationError(f"{name} class outside [0, {n_classes})")
    flat = np.bincount(truths * n_classes + predictions, minlength=n_classes * n_classes)
    return ConfusionMatrix(counts=flat.reshape(n_classes, n_classes))


def uniform_random_baseline(n_classes: int) -> float:
    """Expected accuracy of a uniform random guesser."""
    if n_classes < 1:
        raise EvaluationError("n_classes must be >= 1")
    return 1.0 / n_classes


def majority_baseline(truths: Sequence[int]) -> float:
    truths = np.asarray(truths, dtype=np.int64)
    if truths.size == 0:
        raise EvaluationError("Cannot compute a majority baseline on no labels")
    counts = np.bincount(truths)
    return float(counts[np.argmax(counts)] / truths.size)


def bayes_accuracy(signal_probability: float) -> float:
    """Accuracy of the optimal sign-conditional predictor: p/10 + (1-p)/100."""
    if not 0.0 <= signal_probability <= 1.0:
        raise EvaluationError(f"signal_probability must be in [0, 1], got {signal_probability}")
    return signal_probability / TRAITS_PER_SIGN + (1.0 - signal_probability) / TRAIT_POOL_SIZE


def diagonal_share(matrix: ConfusionMatrix) -> float:
    """Fraction of all evaluated samples on the diagonal (equals accuracy)."""
    return matrix.trace() / matrix.total if matrix.total else 0.0


def assigned_trait_diagonal_share(matrix: ConfusionMatrix, table: AssignmentTable) -> float:
    """Fraction of diagonal mass that falls on traits assigned to at least one sign.

    Returns 0.0 when the diagonal is empty.
    """
    diagonal = np.diag(matrix.counts)
    if diagonal.sum() == 0:
        return 0.0
    assigned = trait_multiplicity(table)[: matrix.n_classes] > 0
    return float(diagonal[assigned].sum() / diagonal.sum())
