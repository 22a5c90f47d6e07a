"""Small builders shared by several test modules."""

import numpy as np

from zodiac_lab.config import TrainConfig, train_config_from_dict


def train_config(kind: str, seed: int = 0, **params) -> TrainConfig:
    """TrainConfig for ``kind`` with its parameter block overridden."""
    return train_config_from_dict({"model_kind": kind, "seed": seed, kind: params})


def central_difference(loss, array: np.ndarray, h: float = 1e-5) -> np.ndarray:
    """Numerical gradient of ``loss()`` with respect to ``array`` (perturbed in place)."""
    grad = np.zeros_like(array)
    for index in np.ndindex(array.shape):
        original = array[index]
        array[index] = original + h
        plus = loss()
        array[index] = original - h
        minus = loss()
        array[index] = original
        grad[index] = (plus - minus) / (2 * h)
    return grad


def relative_error(analytic, numeric) -> float:
    analytic = np.asarray(analytic, dtype=np.float64).ravel()
    numeric = np.asarray(numeric, dtype=np.float64).ravel()
    denominator = np.linalg.norm(analytic) + np.linalg.norm(numeric)
    if denominator == 0:
        return 0.0
    return float(np.linalg.norm(analytic - numeric) / denominator)
