"""Seeded stratified k-fold plans and the stratified train/test holdout."""

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from zodiac_lab.errors import EvaluationError
from zodiac_lab.synthpop.rng import rng_new

KFOLD_STREAM = 301
HOLDOUT_STREAM = 302


@dataclass(frozen=True, eq=False)
class SplitPlan:
    k: int
    folds: np.ndarray  # fold index per sample

    def test_rows(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.folds == fold)

    def train_rows(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.folds != fold)

    def fold_sizes(self) -> np.ndarray:
        return np.bincount(self.folds, minlength=self.k)


def kfold_split(labels: Sequence[int], k: int, seed: int) -> SplitPlan:
    """Stratified k-fold assignment.

    Classes are visited in ascending order; each class's members are shuffled
    and dealt round-robin, continuing from where the previous class stopped.
    The first fold dealt to is seeded. Fold sizes therefore differ by at most one.

    Raises:
        EvaluationError: If k < 2 or k > n
    """
    labels = np.asarray(labels, dtype=np.int64)
    n = len(labels)
    if k < 2:
        raise EvaluationError(f"k must be >= 2, got {k}")
    if k > n:
        raise EvaluationError(f"k={k} exceeds the number of samples ({n})")

    rng = rng_new(seed, KFOLD_STREAM)
    folds = np.empty(n, dtype=np.int64)
    pointer = rng.uniform_int(k)
    for cls in np.unique(labels):
        for member in rng.shuffle(np.flatnonzero(labels == cls).tolist()):
            folds[member] = pointer
            pointer = (pointer + 1) % k
    return SplitPlan(k=k, folds=folds)


def stratified_holdout(labels: Sequence[int], test_fraction: float,
                       seed: int) -> Tuple[np.ndarray, np.ndarray]:
    """Split row indices into (train, test), both sorted ascending.

    Each member gets the key (rank + 0.5) / class_size from a shuffled order
    within its class; the ``n_test`` smallest keys (ties broken by a seeded
    permutation) form the test set, so every class is represented in
    proportion to ``test_fraction``.
    """
    labels = np.asarray(labels, dtype=np.int64)
    n = len(labels)
    if n < 2:
        raise EvaluationError("A holdout split needs at least two samples")
    if not 0 < test_fraction < 1:
        raise EvaluationError(f"test_fraction must be in (0, 1), got {test_fraction}")
    n_test = min(max(int(math.floor(n * test_fraction + 0.5)), 1), n - 1)

    rng = rng_new(seed, HOLDOUT_STREAM)
    keys = np.empty(n, dtype=np.float64)
    for cls in np.unique(labels):
        members = rng.shuffle(np.flatnonzero(labels == cls).tolist())
        for rank, member in enumerate(members):
            keys[member] = (rank + 0.5) / len(members)
    tie_break = np.asarray(rng.shuffle(range(n)), dtype=np.int64)
    order = np.lexsort((tie_break, keys))
    return np.sort(order[n_test:]), np.sort(order[:n_test])
