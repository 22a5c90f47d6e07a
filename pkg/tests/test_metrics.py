"""Tests for accuracy, confusion matrices and baselines."""

import numpy as np
import pytest

from zodiac_lab.errors import EvaluationError
from zodiac_lab.evaluation import (
    accuracy,
    bayes_accuracy,
    confusion,
    majority_baseline,
    uniform_random_baseline,
)
from zodiac_lab.evaluation.metrics import assigned_trait_diagonal_share, diagonal_share
from zodiac_lab.lexicon import ZodiacSign, trait_multiplicity
from zodiac_lab.synthpop import label_distribution


def test_accuracy_examples():
    assert accuracy([1, 2, 3], [1, 2, 3]) == 1.0
    assert accuracy([1, 2, 3], [4, 5, 6]) == 0.0
    assert accuracy([0, 1, 2], [0, 1, 3]) == pytest.approx(2 / 3)


def test_accuracy_rejects_mismatched_or_empty_lists():
    with pytest.raises(EvaluationError):
        accuracy([1, 2], [1])
    with pytest.raises(EvaluationError):
        accuracy([], [])


def test_perfect_predictions_give_diagonal_matrix():
    matrix = confusion([0, 1, 2, 2], [0, 1, 2, 2], 3)
    assert np.array_equal(matrix.counts, np.diag([1, 1, 2]))


def test_confusion_structural_identities():
    """Trace over total equals accuracy and row sums equal class supports."""
    # Arrange
    gen = np.random.default_rng(0)
    truths = gen.integers(0, 100, size=500)
    predictions = gen.integers(0, 100, size=500)

    # Act
    matrix = confusion(predictions, truths)

    # Assert
    assert matrix.counts.shape == (100, 100)
    assert matrix.total == 500
    assert matrix.trace() / matrix.total == accuracy(predictions, truths)
    assert np.array_equal(matrix.support, np.bincount(truths, minlength=100))
    assert diagonal_share(matrix) == accuracy(predictions, truths)


def test_confusion_rejects_out_of_range_classes():
    with pytest.raises(EvaluationError):
        confusion([0, 5], [0, 1], 3)


@pytest.mark.parametrize("k, expected", [(100, 0.01), (1, 1.0), (2, 0.5)])
def test_uniform_baseline(k, expected):
    assert uniform_random_baseline(k) == pytest.approx(expected)


def test_majority_baseline_examples():
    assert majority_baseline([4, 4, 4]) == 1.0
    assert majority_baseline(list(range(100))) == pytest.approx(0.01)
    assert majority_baseline([0, 0, 1]) == pytest.approx(2 / 3)


@pytest.mark.parametrize("p, expected", [(0.0, 0.01), (1.0, 0.10), (0.1, 0.019)])
def test_bayes_accuracy_values(p, expected):
    assert bayes_accuracy(p) == pytest.approx(expected)


@pytest.mark.parametrize("p", [0.0, 0.1, 0.37, 1.0])
def test_bayes_accuracy_matches_enumeration(table, p):
    """Exhaustive argmax over the mixture distribution reproduces the closed form."""
    # Arrange
    dist = label_distribution(table, p)

    # Act
    best_per_sign = dist.max(axis=1)
    enumerated = float(best_per_sign.mean())

    # Assert
    assert enumerated == pytest.approx(bayes_accuracy(p))


def test_bayes_accuracy_rejects_bad_probability():
    with pytest.raises(EvaluationError):
        bayes_accuracy(1.5)


def test_assigned_trait_diagonal_share(table):
    # Arrange
    unassigned = int(np.flatnonzero(trait_multiplicity(table) == 0)[0])
    assigned = table.traits(ZodiacSign.LEO)[0]
    truths = [assigned, assigned, assigned, unassigned]

    # Act
    matrix = confusion(truths, truths)

    # Assert
    assert assigned_trait_diagonal_share(matrix, table) == pytest.approx(0.75)
    assert assigned_trait_diagonal_share(confusion([0], [1]), table) == 0.0
