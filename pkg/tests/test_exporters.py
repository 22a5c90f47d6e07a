"""Tests for report serialization, CSV summaries, Markdown/HTML and the SVG chart."""

import xml.etree.ElementTree as ET

import numpy as np
import pytest

from zodiac_lab.config import ExperimentConfig
from zodiac_lab.evaluation import run_experiment
from zodiac_lab.lexicon import build_default_lexicon
from zodiac_lab.templates import generate_html_template, generate_svg_chart
from zodiac_lab.utils.exporters import (
    convert_markdown_to_html,
    generate_markdown_report,
    read_accuracy_summary_csv,
    read_confusion_csv,
    read_report_json,
    to_fixed_json,
    write_accuracy_summary_csv,
    write_confusion_csv,
    write_report_json,
)
from zodiac_lab.utils.summaries import MODEL_DISPLAY_NAMES, SUMMARY_COLUMNS, extract_summary_rows

from tests.conftest import SMALL_CONFIG

SVG_NS = "{http://www.w3.org/2000/svg}"


@pytest.fixture(scope="module")
def report():
    return run_experiment(ExperimentConfig.from_dict(SMALL_CONFIG))


def test_fixed_json_writes_seventeen_significant_digits():
    assert to_fixed_json(0.1) == "0.10000000000000001"
    assert to_fixed_json(1.0) == "1"
    assert to_fixed_json(np.int64(3)) == "3"
    assert to_fixed_json({"a": [1, 2.5], "b": None}) == '{\n  "a": [1, 2.5],\n  "b": null\n}'


def test_fixed_json_rejects_non_finite():
    with pytest.raises(ValueError):
        to_fixed_json(float("nan"))


def test_report_json_round_trips_byte_for_byte(tmp_path, report):
    # Arrange
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"

    # Act
    write_report_json(str(first), report)
    write_report_json(str(second), read_report_json(str(first)))

    # Assert
    assert first.read_bytes() == second.read_bytes()


def test_accuracy_summary_csv(tmp_path, report):
    # Arrange
    path = tmp_path / "accuracy_summary.csv"

    # Act
    write_accuracy_summary_csv(str(path), report)
    rows = read_accuracy_summary_csv(str(path))

    # Assert
    assert path.read_text().splitlines()[0] == ",".join(SUMMARY_COLUMNS)
    assert [row["model"] for row in rows] == ["logreg", "forest", "mlp"]
    for row, model in zip(rows, report.models):
        assert row["test_acc"] == model.test_accuracy
        assert row["p_value"] == model.permutation_p_value
        assert row["uniform_baseline"] == 0.01


def test_confusion_csv_round_trips(tmp_path, report):
    path = tmp_path / "confusion_logreg.csv"
    write_confusion_csv(str(path), report.model("logreg"))
    assert np.array_equal(read_confusion_csv(str(path)), report.model("logreg").confusion.counts)
    assert path.read_text().splitlines()[0].startswith("true_class,0,1,2,")


def test_svg_has_one_bar_group_per_model(report):
    """The chart parses as XML and renders one group plus two baseline lines."""
    # Arrange
    rows = extract_summary_rows(report)

    # Act
    svg = generate_svg_chart(rows, 0.01, 0.019, MODEL_DISPLAY_NAMES)
    root = ET.fromstring(svg)

    # Assert
    groups = [g for g in root.iter(f"{SVG_NS}g") if g.get("class") == "model-group"]
    assert [g.get("data-model") for g in groups] == ["logreg", "forest", "mlp"]
    for group in groups:
        classes = {rect.get("class") for rect in group.iter(f"{SVG_NS}rect")}
        assert classes == {"bar-real", "bar-shuffled"}
    baselines = [line for line in root.iter(f"{SVG_NS}line") if line.get("class") == "baseline"]
    assert len(baselines) == 2


def test_markdown_report_lists_models_and_baselines(report):
    text = generate_markdown_report(report, build_default_lexicon())
    assert "# Zodiac Personality Experiment" in text
    for name in MODEL_DISPLAY_NAMES.values():
        assert name in text
    assert "Bayes accuracy: 0.0190" in text
    assert "Best model:" in text


def test_html_template_wraps_sections():
    html = generate_html_template("Title & more", [("Report", "Results", "<p>body</p>")])
    assert html.startswith("<!DOCTYPE html>")
    assert "Title &amp; more" in html
    assert "<p>body</p>" in html
    assert "toggleSection" in html


def test_markdown_tables_convert_to_html():
    html = convert_markdown_to_html("| a | b |\n|---|---|\n| 1 | 2 |\n")
    assert "<table>" in html
