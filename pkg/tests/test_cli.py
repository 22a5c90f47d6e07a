"""Tests for the command-line entry point and its exit-code contract."""

import json
import xml.etree.ElementTree as ET

import pytest

from main import EXIT_CONFIG, EXIT_DIVERGENCE, EXIT_IO, EXIT_OK, main
from zodiac_lab.utils.exporters import read_accuracy_summary_csv, read_report_json


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("ZODIAC_LAB_OUTPUT_DIR", "ZODIAC_LAB_JOBS", "ZODIAC_LAB_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr("main.load_dotenv", lambda: None)


def test_generate_writes_csv_and_sidecar(tmp_path, write_config, small_config_dict):
    # Arrange
    out = tmp_path / "pop.csv"

    # Act
    code = main(["generate", "--config", write_config(small_config_dict), "--out", str(out)])

    # Assert
    assert code == EXIT_OK
    assert len(out.read_text().splitlines()) == 401
    sidecar = json.loads((tmp_path / "pop.config.json").read_text())
    assert sidecar["population_size"] == 400


def test_generate_twice_gives_identical_bytes(tmp_path, write_config, small_config_dict):
    config = write_config(small_config_dict)
    main(["generate", "--config", config, "--out", str(tmp_path / "a.csv")])
    main(["generate", "--config", config, "--out", str(tmp_path / "b.csv")])
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_generate_seed_flag_changes_population(tmp_path, write_config, small_config_dict):
    config = write_config(small_config_dict)
    main(["generate", "--config", config, "--out", str(tmp_path / "a.csv")])
    main(["generate", "--config", config, "--out", str(tmp_path / "b.csv"), "--seed", "8"])
    assert (tmp_path / "a.csv").read_bytes() != (tmp_path / "b.csv").read_bytes()


def test_invalid_probability_exits_with_config_code(tmp_path, write_config, capsys):
    # Arrange
    config = write_config({"generation": {"signal_probability": 1.7}})

    # Act
    code = main(["generate", "--config", config, "--out", str(tmp_path / "p.csv")])

    # Assert
    assert code == EXIT_CONFIG
    assert "generation.signal_probability" in capsys.readouterr().err


def test_syntax_error_message_is_line_anchored(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"generation": {"seed": }}')
    assert main(["run", "--config", str(path), "--out", str(tmp_path / "o")]) == EXIT_CONFIG
    assert f"{path}:1:" in capsys.readouterr().err


def test_missing_config_exits_with_io_code(tmp_path):
    code = main(["generate", "--config", str(tmp_path / "absent.json"), "--out", str(tmp_path / "p.csv")])
    assert code == EXIT_IO


def test_run_writes_all_artifacts(tmp_path, write_config, small_config_dict):
    """A run emits the report, summaries, per-model confusion CSVs and the chart."""
    # Arrange
    out = tmp_path / "results"

    # Act
    code = main(["run", "--config", write_config(small_config_dict), "--out", str(out),
                 "--dump-features", "--save-models", str(tmp_path / "models")])

    # Assert
    assert code == EXIT_OK
    report = read_report_json(str(out / "report.json"))
    assert [m.model_kind for m in report.models] == ["logreg", "forest", "mlp"]
    assert len(read_accuracy_summary_csv(str(out / "accuracy_summary.csv"))) == 3
    for kind in ("logreg", "forest", "mlp"):
        assert (out / f"confusion_{kind}.csv").exists()
        assert (tmp_path / "models" / f"{kind}.json").exists()
    ET.parse(out / "accuracy_comparison.svg")
    assert (out / "features.csv").exists()
    assert (out / "report.md").exists()
    assert (out / "report.html").exists()


def test_run_models_flag_keeps_one_model(tmp_path, write_config, small_config_dict):
    out = tmp_path / "results"
    code = main(["run", "--config", write_config(small_config_dict), "--out", str(out),
                 "--models", "logreg"])
    assert code == EXIT_OK
    report = json.loads((out / "report.json").read_text())
    assert [m["model_kind"] for m in report["models"]] == ["logreg"]
    assert not (out / "confusion_forest.csv").exists()


def test_run_unknown_model_is_a_config_error(tmp_path, write_config, small_config_dict):
    code = main(["run", "--config", write_config(small_config_dict), "--out", str(tmp_path),
                 "--models", "svm"])
    assert code == EXIT_CONFIG


def test_run_twice_gives_byte_identical_reports(tmp_path, write_config, small_config_dict):
    config = write_config(small_config_dict)
    main(["run", "--config", config, "--out", str(tmp_path / "a"), "--models", "logreg,forest"])
    main(["run", "--config", config, "--out", str(tmp_path / "b"), "--models", "logreg,forest"])
    assert (tmp_path / "a" / "report.json").read_bytes() == (tmp_path / "b" / "report.json").read_bytes()


def test_run_output_dir_from_environment(tmp_path, monkeypatch, write_config, small_config_dict):
    monkeypatch.setenv("ZODIAC_LAB_OUTPUT_DIR", str(tmp_path / "env-out"))
    code = main(["run", "--config", write_config(small_config_dict), "--models", "logreg"])
    assert code == EXIT_OK
    assert (tmp_path / "env-out" / "report.json").exists()


def test_invalid_jobs_variable_is_a_config_error(tmp_path, monkeypatch, write_config,
                                                 small_config_dict):
    monkeypatch.setenv("ZODIAC_LAB_JOBS", "many")
    code = main(["run", "--config", write_config(small_config_dict), "--out", str(tmp_path)])
    assert code == EXIT_CONFIG


def test_divergence_exits_with_code_four(tmp_path, write_config, small_config_dict, capsys):
    # Arrange
    small_config_dict["models"] = [
        {"model_kind": "logreg", "logreg": {"learning_rate": 1e300, "epochs": 3}},
    ]

    # Act
    code = main(["run", "--config", write_config(small_config_dict), "--out", str(tmp_path)])

    # Assert
    assert code == EXIT_DIVERGENCE
    assert "logreg" in capsys.readouterr().err


def test_export_lexicon(tmp_path):
    # Arrange
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"

    # Act
    assert main(["export-lexicon", "--out", str(first)]) == EXIT_OK
    assert main(["export-lexicon", "--out", str(second)]) == EXIT_OK

    # Assert
    data = json.loads(first.read_text())
    assert len(data["descriptors"]) == 100
    assert len(data["assignments"]) == 12
    assert all(len(traits) == 10 for traits in data["assignments"].values())
    assert first.read_bytes() == second.read_bytes()
