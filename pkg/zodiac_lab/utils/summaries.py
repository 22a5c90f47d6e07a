"""Flat per-model summary rows extracted from an EvaluationReport."""

from typing import Dict, List

from zodiac_lab.evaluation.report import EvaluationReport

MODEL_DISPLAY_NAMES = {
    "logreg": "Logistic Regression",
    "forest": "Random Forest",
    "mlp": "Multilayer Perceptron",
}

SUMMARY_COLUMNS = [
    "model",
    "cv_mean",
    "test_acc",
    "shuffled_mean",
    "p_value",
    "uniform_baseline",
    "majority_baseline",
    "bayes_accuracy",
]


def display_name(model_kind: str) -> str:
    return MODEL_DISPLAY_NAMES.get(model_kind, model_kind)


def extract_summary_rows(report: EvaluationReport) -> List[Dict[str, object]]:
    """One row per model, keyed by ``SUMMARY_COLUMNS``, in report order.

    Rows are looked up by model kind rather than position, so a filtered run
    (``--models logreg``) yields exactly the models it trained.
    """
    baselines = report.baselines
    rows = []
    for result in report.models:
        rows.append({
            "model": result.model_kind,
            "cv_mean": result.cv_mean_accuracy,
            "test_acc": result.test_accuracy,
            "shuffled_mean": result.shuffled_mean_accuracy,
            "p_value": result.permutation_p_value,
            "uniform_baseline": baselines.uniform_random_accuracy,
            "majority_baseline": baselines.majority_class_accuracy,
            "bayes_accuracy": baselines.bayes_accuracy,
        })
    return rows
