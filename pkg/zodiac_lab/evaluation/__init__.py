"""Cross-validation, baselines, permutation control and the experiment runner."""

from zodiac_lab.evaluation.experiment import (
    ExperimentOutcome,
    cross_validate,
    execute_experiment,
    run_experiment,
)
from zodiac_lab.evaluation.metrics import (
    ConfusionMatrix,
    accuracy,
    bayes_accuracy,
    confusion,
    majority_baseline,
    uniform_random_baseline,
)
from zodiac_lab.evaluation.permutation import (
    permutation_control,
    permutation_p_value,
    shuffle_labels,
)
from zodiac_lab.evaluation.report import EvaluationReport, ModelResult
from zodiac_lab.evaluation.splits import SplitPlan, kfold_split, stratified_holdout

__all__ = [
    "ConfusionMatrix",
    "EvaluationReport",
    "ExperimentOutcome",
    "ModelResult",
    "SplitPlan",
    "accuracy",
    "bayes_accuracy",
    "confusion",
    "cross_validate",
    "execute_experiment",
    "kfold_split",
    "majority_baseline",
    "permutation_control",
    "permutation_p_value",
    "run_experiment",
    "shuffle_labels",
    "stratified_holdout",
    "uniform_random_baseline",
]
