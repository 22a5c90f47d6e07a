"""Export utilities for converting and saving ZodiacLab experiment outputs."""

import json
import math
from pathlib import Path
from typing import Any, Dict, List

import markdown
import numpy as np
import pandas as pd

from zodiac_lab.evaluation.report import BEST_MODEL_SELECTION, EvaluationReport, ModelResult
from zodiac_lab.lexicon import TraitLexicon
from zodiac_lab.utils.summaries import SUMMARY_COLUMNS, display_name, extract_summary_rows


def convert_markdown_to_html(text):
    """Convert markdown to HTML using the markdown library with extensions.

    Args:
        text: Markdown-formatted text string

    Returns:
        str: HTML-formatted string
    """
    return markdown.markdown(text, extensions=['tables', 'fenced_code'])


def to_fixed_json(value: Any, indent: int = 2, level: int = 0) -> str:
    """Serialize to JSON with every float written as 17 significant digits.

    Lists of scalars stay on one line so confusion matrices remain compact.
    """
    if value is None or isinstance(value, bool):
        return json.dumps(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"Cannot serialize non-finite float {value!r}")
        return format(value, ".17g")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, str):
        return json.dumps(value)
    pad = " " * (indent * (level + 1))
    close = " " * (indent * level)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {to_fixed_json(v, indent, level + 1)}"
                 for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            return "[" + ", ".join(to_fixed_json(v) for v in value) + "]"
        items = [pad + to_fixed_json(v, indent, level + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def write_report_json(path: str, report: EvaluationReport) -> None:
    Path(path).write_text(to_fixed_json(report.to_dict()) + "\n", encoding="utf-8")


def read_report_json(path: str) -> EvaluationReport:
    return EvaluationReport.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def write_accuracy_summary_csv(path: str, report: EvaluationReport) -> None:
    frame = pd.DataFrame(extract_summary_rows(report), columns=SUMMARY_COLUMNS)
    frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")


def read_accuracy_summary_csv(path: str) -> List[Dict[str, object]]:
    return pd.read_csv(path, float_precision="round_trip").to_dict(orient="records")


def write_confusion_csv(path: str, result: ModelResult) -> None:
    """Rows are true classes, columns predicted classes (both as TraitIds)."""
    counts = result.confusion.counts
    frame = pd.DataFrame(counts, columns=[str(c) for c in range(counts.shape[1])])
    frame.insert(0, "true_class", np.arange(counts.shape[0]))
    frame.to_csv(path, index=False, lineterminator="\n")


def read_confusion_csv(path: str) -> np.ndarray:
    frame = pd.read_csv(path)
    return frame.drop(columns=["true_class"]).to_numpy(dtype=np.int64)


def _top_predictions(result: ModelResult, lexicon: TraitLexicon, limit: int = 5) -> str:
    predicted = result.confusion.counts.sum(axis=0)
    order = np.argsort(-predicted, kind="stable")[:limit]
    return ", ".join(f"{lexicon.name(int(c))} ({int(predicted[c])})" for c in order if predicted[c])


def generate_markdown_report(report: EvaluationReport, lexicon: TraitLexicon) -> str:
    """Generate the Markdown summary of one experiment (returns a string).

    Args:
        report: Completed evaluation report
        lexicon: Lexicon used to name predicted traits

    Returns:
        str: Markdown document
    """
    generation = report.config["generation"]
    baselines = report.baselines
    best = report.best_model

    content = "# Zodiac Personality Experiment\n\n"
    content += "## Generation\n\n"
    content += "| Parameter | Value |\n|---|---|\n"
    for key, value in generation.items():
        content += f"| {key} | {value} |\n"
    content += f"\nTrain / test rows: {report.n_train} / {report.n_test}\n\n"

    content += "## Accuracy\n\n"
    content += "| Model | CV mean | Test | Shuffled mean | p-value |\n|---|---|---|---|---|\n"
    for row in extract_summary_rows(report):
        content += (f"| {display_name(str(row['model']))} | {row['cv_mean']:.4f} | "
                    f"{row['test_acc']:.4f} | {row['shuffled_mean']:.4f} | {row['p_value']:.3f} |\n")
    content += "\n## Baselines\n\n"
    content += f"- Uniform random guess: {baselines.uniform_random_accuracy:.4f}\n"
    content += f"- Majority class (test split): {baselines.majority_class_accuracy:.4f}\n"
    content += f"- Bayes accuracy: {baselines.bayes_accuracy:.4f}\n\n"

    content += "## Confusion structure\n\n"
    content += "| Model | Diagonal share | Diagonal on assigned traits | Most predicted traits |\n"
    content += "|---|---|---|---|\n"
    for result in report.models:
        content += (f"| {display_name(result.model_kind)} | {result.diagonal_share:.4f} | "
                    f"{result.assigned_trait_diagonal_share:.4f} | "
                    f"{_top_predictions(result, lexicon)} |\n")
    if best is not None:
        content += f"\nBest model: **{display_name(best.model_kind)}** ({BEST_MODEL_SELECTION}).\n"
    return content


def save_text_output(output_file, content):
    """Save a text (Markdown) document.

    Args:
        output_file: Path to the output file
        content: Text content
    """
    with open(output_file, 'w', encoding='utf-8') as f:
        f.write(content)


def save_html_output(html_output_file, html_content):
    """Save HTML content to a file.

    Args:
        html_output_file: Path to the output HTML file
        html_content: HTML content string
    """
    with open(html_output_file, 'w', encoding='utf-8') as f:
        f.write(html_content)
