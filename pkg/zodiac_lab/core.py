"""Core workflow execution engine for ZodiacLab.

This module provides the reusable workflow functions called from the CLI
(main.py). They never raise for library errors: failures are captured in the
returned result dictionary and the caller maps them to exit codes.
"""

import logging
import os
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

from zodiac_lab.config import ExperimentConfig, GenerationConfig
from zodiac_lab.errors import ZodiacLabError
from zodiac_lab.evaluation.experiment import execute_experiment
from zodiac_lab.features import write_feature_csv
from zodiac_lab.lexicon import build_default_assignments, build_default_lexicon
from zodiac_lab.models import save_model
from zodiac_lab.synthpop.population import (
    generate_population,
    write_config_sidecar,
    write_population_csv,
)
from zodiac_lab.templates import generate_html_template, generate_svg_chart
from zodiac_lab.utils.exporters import (
    convert_markdown_to_html,
    generate_markdown_report,
    save_html_output,
    save_text_output,
    write_accuracy_summary_csv,
    write_confusion_csv,
    write_report_json,
)
from zodiac_lab.utils.summaries import MODEL_DISPLAY_NAMES, extract_summary_rows

logger = logging.getLogger(__name__)


def _new_result() -> Dict[str, Any]:
    return {
        'success': False,
        'report': None,
        'files': {},
        'timestamp': datetime.now().strftime('%Y%m%d_%H%M%S'),
        'error': None,
        'exception': None,
    }


def _capture(result: Dict[str, Any], exc: BaseException) -> None:
    result['error'] = f"{type(exc).__name__}: {exc}"
    result['exception'] = exc
    logger.error("Workflow failed: %s", result['error'])


def sidecar_path(population_path: str) -> str:
    """JSON config sidecar written next to a population CSV."""
    path = Path(population_path)
    return str(path.with_name(path.stem + ".config.json"))


def run_generation_workflow(config: GenerationConfig, output_path: str) -> Dict[str, Any]:
    """Generate a population and write it as CSV plus a JSON config sidecar.

    Returns:
        dict: {'success', 'report' (None), 'files': {'population', 'config'},
               'timestamp', 'error', 'exception'}
    """
    result = _new_result()
    try:
        lexicon = build_default_lexicon()
        population = generate_population(config, lexicon, build_default_assignments(lexicon))
        Path(output_path).parent.mkdir(parents=True, exist_ok=True)
        write_population_csv(output_path, population)
        result['files']['population'] = output_path
        config_path = sidecar_path(output_path)
        write_config_sidecar(config_path, config)
        result['files']['config'] = config_path
        result['success'] = True
    except (ZodiacLabError, OSError) as exc:
        _capture(result, exc)
    return result


def run_experiment_workflow(
    config: ExperimentConfig,
    output_dir: str,
    dump_features: bool = False,
    save_models_dir: Optional[str] = None,
    n_jobs: int = 1
) -> Dict[str, Any]:
    """
    Execute the full experiment and write every report artifact.

    Args:
        config: Validated experiment configuration
        output_dir: Directory receiving report.json, CSV summaries, SVG, Markdown/HTML
        dump_features: Also write the encoded (unstandardized) design matrix
        save_models_dir: If set, save each final model there as JSON
        n_jobs: Worker processes for forest trees and permutation repetitions

    Returns:
        dict: {
            'success': bool,
            'report': EvaluationReport or None,
            'files': {artifact name: path},
            'timestamp': str,
            'error': Optional[str],
            'exception': Optional[BaseException]
        }
    """
    result = _new_result()

    try:
        lexicon = build_default_lexicon()
        table = build_default_assignments(lexicon)
        outcome = execute_experiment(config, lexicon=lexicon, table=table, n_jobs=n_jobs)
        report = outcome.report
        result['report'] = report

        out = Path(output_dir)
        out.mkdir(parents=True, exist_ok=True)
        files = result['files']

        files['report'] = str(out / "report.json")
        write_report_json(files['report'], report)

        files['summary'] = str(out / "accuracy_summary.csv")
        write_accuracy_summary_csv(files['summary'], report)

        for model_result in report.models:
            key = f"confusion_{model_result.model_kind}"
            files[key] = str(out / f"{key}.csv")
            write_confusion_csv(files[key], model_result)

        files['chart'] = str(out / "accuracy_comparison.svg")
        svg = generate_svg_chart(
            extract_summary_rows(report),
            report.baselines.uniform_random_accuracy,
            report.baselines.bayes_accuracy,
            MODEL_DISPLAY_NAMES,
        )
        save_text_output(files['chart'], svg)

        markdown_text = generate_markdown_report(report, lexicon)
        files['markdown'] = str(out / "report.md")
        save_text_output(files['markdown'], markdown_text)
        files['html'] = str(out / "report.html")
        save_html_output(files['html'], generate_html_template(
            "Zodiac Personality Experiment",
            [("Report", "Results", convert_markdown_to_html(markdown_text))],
        ))

        if dump_features:
            files['features'] = str(out / "features.csv")
            write_feature_csv(files['features'], outcome.features)

        if save_models_dir:
            os.makedirs(save_models_dir, exist_ok=True)
            for kind, model in outcome.models.items():
                files[f"model_{kind}"] = os.path.join(save_models_dir, f"{kind}.json")
                save_model(files[f"model_{kind}"], model)

        result['success'] = True
    except (ZodiacLabError, OSError) as exc:
        _capture(result, exc)

    return result
