"""Shuffled-label control: retrain under permuted labels, add-one p-value."""

import logging
from typing import List, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from zodiac_lab.config import TrainConfig
from zodiac_lab.errors import EvaluationError
from zodiac_lab.evaluation.metrics import accuracy
from zodiac_lab.features import FeatureMatrix
from zodiac_lab.lexicon import TRAIT_POOL_SIZE
from zodiac_lab.models import predict, train_model
from zodiac_lab.synthpop.rng import Pcg32, rng_new

logger = logging.getLogger(__name__)

# repetition r uses stream PERMUTATION_STREAM_BASE + r
PERMUTATION_STREAM_BASE = 1000


def shuffle_labels(labels: Sequence[int], rng: Pcg32) -> np.ndarray:
    """Uniform Fisher-Yates permutation of ``labels``."""
    labels = np.asarray(labels, dtype=np.int64)
    if labels.size == 0:
        raise EvaluationError("Cannot shuffle an empty label vector")
    return labels[np.asarray(rng.shuffle(range(labels.size)), dtype=np.int64)]


def permutation_p_value(real_accuracy: float, shuffled_accuracies: Sequence[float]) -> float:
    """(1 + #{shuffled >= real}) / (R + 1); never zero."""
    shuffled = np.asarray(shuffled_accuracies, dtype=np.float64)
    if shuffled.size == 0:
        raise EvaluationError("Need at least one shuffled accuracy")
    return float((1 + np.count_nonzero(shuffled >= real_accuracy)) / (shuffled.size + 1))


def _shuffled_run(train: FeatureMatrix, test: FeatureMatrix, config: TrainConfig,
                  seed: int, repetition: int, n_classes: int, n_jobs: int) -> float:
    rng = rng_new(seed, PERMUTATION_STREAM_BASE + repetition)
    permuted = shuffle_labels(np.concatenate([train.labels, test.labels]), rng)
    shuffled_train = train.with_labels(permuted[:train.n_rows])
    shuffled_test = test.with_labels(permuted[train.n_rows:])
    model = train_model(shuffled_train, config, n_classes, n_jobs=n_jobs)
    result = accuracy(predict(model, shuffled_test), shuffled_test.labels)
    logger.debug("%s shuffle %d: accuracy %.4f", config.model_kind, repetition, result)
    return result


def permutation_control(train: FeatureMatrix, test: FeatureMatrix, config: TrainConfig,
                        repetitions: int, seed: int, real_accuracy: float,
                        n_classes: int = TRAIT_POOL_SIZE,
                        n_jobs: int = 1) -> Tuple[List[float], float]:
    """Retrain ``repetitions`` times on jointly shuffled train+test labels.

    Uses the same train/test protocol as the real run. Results are returned
    in repetition order regardless of ``n_jobs``.

    Raises:
        EvaluationError: If ``repetitions`` < 1
        TrainingDivergenceError: Propagated from training
    """
    if repetitions < 1:
        raise EvaluationError(f"repetitions must be >= 1, got {repetitions}")

    # parallelism lives at the repetition level; trainers stay single-process
    if n_jobs > 1:
        shuffled = Parallel(n_jobs=n_jobs)(
            delayed(_shuffled_run)(train, test, config, seed, r, n_classes, 1)
            for r in range(repetitions)
        )
    else:
        shuffled = [_shuffled_run(train, test, config, seed, r, n_classes, 1)
                    for r in range(repetitions)]
    return shuffled, permutation_p_value(real_accuracy, shuffled)
