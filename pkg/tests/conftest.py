"""Shared fixtures: the canonical lexicon and small, fast experiment configs."""

import json

import numpy as np
import pytest

from zodiac_lab.config import ExperimentConfig, GenerationConfig
from zodiac_lab.features import FeatureMatrix
from zodiac_lab.lexicon import build_default_assignments, build_default_lexicon

SMALL_CONFIG = {
    "generation": {"population_size": 400, "signal_probability": 0.1, "seed": 7},
    "models": [
        {"model_kind": "logreg", "logreg": {"epochs": 5, "batch_size": 32}},
        {"model_kind": "forest", "forest": {"n_trees": 3, "max_depth": 4}},
        {"model_kind": "mlp", "mlp": {"hidden_units": 8, "epochs": 3, "batch_size": 32}},
    ],
    "evaluation": {"k_folds": 3, "test_fraction": 0.25, "permutation_repetitions": 2,
                   "experiment_seed": 11},
}


@pytest.fixture(scope="session")
def lexicon():
    return build_default_lexicon()


@pytest.fixture(scope="session")
def table(lexicon):
    return build_default_assignments(lexicon)


@pytest.fixture
def small_config_dict():
    return json.loads(json.dumps(SMALL_CONFIG))


@pytest.fixture
def small_config(small_config_dict):
    return ExperimentConfig.from_dict(small_config_dict)


@pytest.fixture
def write_config(tmp_path):
    """Write a config dict to a JSON file and return its path."""
    def _write(data, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def generation_config():
    return GenerationConfig(population_size=300, signal_probability=0.5, seed=3)


@pytest.fixture
def xor_matrix():
    """Ten copies of each XOR corner on centred inputs; labels are x0 XOR x1."""
    corners = np.array([[-1.0, -1.0], [-1.0, 1.0], [1.0, -1.0], [1.0, 1.0]])
    labels = np.array([0, 1, 1, 0])
    return FeatureMatrix.from_arrays(np.repeat(corners, 10, axis=0), np.repeat(labels, 10))


