"""Evaluation report data: per-model results, baselines and provenance."""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from zodiac_lab.evaluation.metrics import ConfusionMatrix

BEST_MODEL_SELECTION = "highest held-out test accuracy; ties go to configuration order"


@dataclass(frozen=True, eq=False)
class ModelResult:
    model_kind: str
    cv_fold_accuracies: Tuple[float, ...]
    cv_mean_accuracy: float
    test_accuracy: float
    confusion: ConfusionMatrix
    shuffled_accuracies: Tuple[float, ...]
    permutation_p_value: float
    diagonal_share: float
    assigned_trait_diagonal_share: float

    @property
    def shuffled_mean_accuracy(self) -> float:
        return float(np.mean(self.shuffled_accuracies))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model_kind": self.model_kind,
            "cv_fold_accuracies": list(self.cv_fold_accuracies),
            "cv_mean_accuracy": self.cv_mean_accuracy,
            "test_accuracy": self.test_accuracy,
            "shuffled_accuracies": list(self.shuffled_accuracies),
            "shuffled_mean_accuracy": self.shuffled_mean_accuracy,
            "permutation_p_value": self.permutation_p_value,
            "diagonal_share": self.diagonal_share,
            "assigned_trait_diagonal_share": self.assigned_trait_diagonal_share,
            "confusion": {
                "counts": self.confusion.counts.tolist(),
                "support": self.confusion.support.tolist(),
            },
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ModelResult":
        return cls(
            model_kind=data["model_kind"],
            cv_fold_accuracies=tuple(float(a) for a in data["cv_fold_accuracies"]),
            cv_mean_accuracy=float(data["cv_mean_accuracy"]),
            test_accuracy=float(data["test_accuracy"]),
            confusion=ConfusionMatrix(np.asarray(data["confusion"]["counts"], dtype=np.int64)),
            shuffled_accuracies=tuple(float(a) for a in data["shuffled_accuracies"]),
            permutation_p_value=float(data["permutation_p_value"]),
            diagonal_share=float(data["diagonal_share"]),
            assigned_trait_diagonal_share=float(data["assigned_trait_diagonal_share"]),
        )


@dataclass(frozen=True)
class Baselines:
    uniform_random_accuracy: float
    majority_class_accuracy: float
    bayes_accuracy: float


@dataclass(frozen=True, eq=False)
class EvaluationReport:
    models: Tuple[ModelResult, ...]
    baselines: Baselines
    n_train: int
    n_test: int
    config: Dict[str, Any]

    @property
    def best_model(self) -> Optional[ModelResult]:
        best = None
        for result in self.models:
            if best is None or result.test_accuracy > best.test_accuracy:
                best = result
        return best

    def model(self, kind: str) -> ModelResult:
        for result in self.models:
            if result.model_kind == kind:
                return result
        raise KeyError(kind)

    def to_dict(self) -> Dict[str, Any]:
        best = self.best_model
        return {
            "models": [m.to_dict() for m in self.models],
            "baselines": {
                "uniform_random_accuracy": self.baselines.uniform_random_accuracy,
                "majority_class_accuracy": self.baselines.majority_class_accuracy,
                "bayes_accuracy": self.baselines.bayes_accuracy,
            },
            "best_model": best.model_kind if best else None,
            "best_model_selection": BEST_MODEL_SELECTION,
            "n_train": self.n_train,
            "n_test": self.n_test,
            "config": self.config,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "EvaluationReport":
        return cls(
            models=tuple(ModelResult.from_dict(m) for m in data["models"]),
            baselines=Baselines(**{k: float(v) for k, v in data["baselines"].items()}),
            n_train=int(data["n_train"]),
            n_test=int(data["n_test"]),
            config=data["config"],
        )
