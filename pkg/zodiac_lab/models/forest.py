"""Random forest of CART trees with Gini impurity.

Tree ``t`` draws its bootstrap rows and per-split feature subsets from
``rng_new(seed, t)``, so trees can be fitted in any order or in parallel
without changing the forest.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed

from zodiac_lab.config import ForestParams, TrainConfig
from zodiac_lab.features import FeatureMatrix
from zodiac_lab.lexicon import TRAIT_POOL_SIZE
from zodiac_lab.models.base import TrainedModel, check_labels
from zodiac_lab.synthpop.rng import Pcg32, rng_new

logger = logging.getLogger(__name__)

LEAF = -1


def gini_impurity(counts) -> float:
    """1 - sum(p_k^2) for a vector of class counts (0 for an empty node)."""
    counts = np.asarray(counts, dtype=np.float64)
    total = counts.sum()
    if total == 0:
        return 0.0
    return float(1.0 - np.sum((counts / total) ** 2))


@dataclass(frozen=True, eq=False)
class DecisionTree:
    """Flat node arrays; ``feature[i] == LEAF`` marks a leaf."""

    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    value: np.ndarray  # n_nodes x K class distributions (meaningful at leaves)

    @property
    def n_nodes(self) -> int:
        return len(self.feature)

    def depth(self, node: int = 0) -> int:
        if self.feature[node] == LEAF:
            return 0
        return 1 + max(self.depth(self.left[node]), self.depth(self.right[node]))

    def apply(self, values: np.ndarray) -> np.ndarray:
        """Leaf index reached by each row."""
        nodes = np.zeros(values.shape[0], dtype=np.int64)
        active = self.feature[nodes] != LEAF
        while np.any(active):
            rows = np.flatnonzero(active)
            current = nodes[rows]
            go_left = values[rows, self.feature[current]] <= self.threshold[current]
            nodes[rows] = np.where(go_left, self.left[current], self.right[current])
            active = self.feature[nodes] != LEAF
        return nodes

    def predict_proba(self, values: np.ndarray) -> np.ndarray:
        return self.value[self.apply(values)]


@dataclass(frozen=True, eq=False)
class ForestModel:
    trees: Tuple[DecisionTree, ...]

    def predict_proba(self, values: np.ndarray) -> np.ndarray:
        total = self.trees[0].predict_proba(values).copy()
        for tree in self.trees[1:]:
            total += tree.predict_proba(values)
        return total / len(self.trees)


class _TreeBuilder:
    def __init__(self, values: np.ndarray, labels: np.ndarray, n_classes: int,
                 params: ForestParams, rng: Pcg32):
        self.values = values
        self.labels = labels
        self.n_classes = n_classes
        self.params = params
        self.rng = rng
        self.feature: List[int] = []
        self.threshold: List[float] = []
        self.left: List[int] = []
        self.right: List[int] = []
        self.value: List[np.ndarray] = []

    def build(self, rows: np.ndarray) -> DecisionTree:
        self._grow(rows, depth=0)
        return DecisionTree(
            feature=np.asarray(self.feature, dtype=np.int64),
            threshold=np.asarray(self.threshold, dtype=np.float64),
            left=np.asarray(self.left, dtype=np.int64),
            right=np.asarray(self.right, dtype=np.int64),
            value=np.vstack(self.value),
        )

    def _grow(self, rows: np.ndarray, depth: int) -> int:
        node = len(self.feature)
        counts = np.bincount(self.labels[rows], minlength=self.n_classes)
        self.feature.append(LEAF)
        self.threshold.append(0.0)
        self.left.append(LEAF)
        self.right.append(LEAF)
        self.value.append(counts / counts.sum())

        if (depth >= self.params.max_depth
                or len(rows) < self.params.min_samples_split
                or np.count_nonzero(counts) == 1):
            return node
        split = self._best_split(rows, counts)
        if split is None:
            return node

        column, threshold = split
        goes_left = self.values[rows, column] <= threshold
        self.feature[node] = column
        self.threshold[node] = threshold
        self.left[node] = self._grow(rows[goes_left], depth + 1)
        self.right[node] = self._grow(rows[~goes_left], depth + 1)
        return node

    def _best_split(self, rows: np.ndarray, parent_counts: np.ndarray) -> Optional[Tuple[int, float]]:
        """Lowest weighted Gini over sampled columns; ties keep the lowest column."""
        width = self.values.shape[1]
        columns = sorted(self.rng.sample(range(width), min(self.params.features_per_split, width)))
        y = self.labels[rows]
        n = len(rows)
        best: Optional[Tuple[int, float]] = None
        best_score = np.inf

        for column in columns:
            uniques, inverse = np.unique(self.values[rows, column], return_inverse=True)
            if len(uniques) < 2:
                continue
            per_value = np.bincount(inverse * self.n_classes + y,
                                    minlength=len(uniques) * self.n_classes)
            per_value = per_value.reshape(len(uniques), self.n_classes)
            left = np.cumsum(per_value, axis=0)[:-1].astype(np.float64)
            right = parent_counts - left
            n_left = left.sum(axis=1)
            n_right = n - n_left
            weighted = (n_left - (left ** 2).sum(axis=1) / n_left
                        + n_right - (right ** 2).sum(axis=1) / n_right) / n
            i = int(np.argmin(weighted))
            if weighted[i] < best_score:
                best_score = weighted[i]
                best = (column, float((uniques[i] + uniques[i + 1]) / 2.0))
        return best


def fit_tree(X: FeatureMatrix, params: ForestParams, seed: int, tree_index: int,
             n_classes: int = TRAIT_POOL_SIZE) -> DecisionTree:
    """Fit one CART tree on a bootstrap resample drawn from stream ``tree_index``."""
    rng = rng_new(seed, tree_index)
    n = X.n_rows
    rows = rng.uniform_int_array(np.full(n, n))
    return _TreeBuilder(X.values, X.labels, n_classes, params, rng).build(rows)


def train_forest(X: FeatureMatrix, config: TrainConfig, n_classes: int = TRAIT_POOL_SIZE,
                 n_jobs: int = 1) -> TrainedModel:
    """Fit ``n_trees`` bootstrap CART trees; ``n_jobs`` never changes the result."""
    params = config.forest
    check_labels(X.labels, n_classes)

    if n_jobs > 1:
        trees = tuple(Parallel(n_jobs=n_jobs)(
            delayed(fit_tree)(X, params, config.seed, t, n_classes) for t in range(params.n_trees)
        ))
    else:
        trees = tuple(fit_tree(X, params, config.seed, t, n_classes)
                      for t in range(params.n_trees))

    logger.debug("forest: %d trees, mean %.1f nodes", len(trees),
                 sum(t.n_nodes for t in trees) / len(trees))
    return TrainedModel(config=config, n_classes=n_classes, width=X.width,
                        params=ForestModel(trees=trees))
