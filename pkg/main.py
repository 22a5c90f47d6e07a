"""ZodiacLab - synthetic zodiac-personality experiment

Main entry point. Subcommands:
    generate        write a seeded population CSV plus its config sidecar
    run             run the full experiment and write report artifacts
    export-lexicon  write the trait lexicon and assignment table as JSON

Exit codes: 0 success, 2 config error, 3 I/O error, 4 numeric divergence.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv

from zodiac_lab.config import ExperimentConfig, load_config
from zodiac_lab.core import run_experiment_workflow, run_generation_workflow
from zodiac_lab.errors import ConfigError, TrainingDivergenceError
from zodiac_lab.lexicon import build_default_assignments, build_default_lexicon, write_lexicon_json
from zodiac_lab.utils.summaries import display_name, extract_summary_rows

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_DIVERGENCE = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zodiac-lab",
        description="Synthetic zodiac-personality prediction experiment",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="Generate a population CSV")
    gen.add_argument("--config", help="Experiment config JSON (defaults if omitted)")
    gen.add_argument("--out", default="population.csv", help="Population CSV path")
    gen.add_argument("--seed", type=int, help="Override the generation seed")

    run = sub.add_parser("run", help="Run the full experiment")
    run.add_argument("--config", help="Experiment config JSON (defaults if omitted)")
    run.add_argument("--out", help="Output directory")
    run.add_argument("--models", help="Comma-separated model kinds to keep (logreg,forest,mlp)")
    run.add_argument("--dump-features", action="store_true", help="Also write features.csv")
    run.add_argument("--save-models", metavar="DIR", help="Save final models as JSON into DIR")
    run.add_argument("--seed", type=int, help="Override generation and experiment seeds")

    lex = sub.add_parser("export-lexicon", help="Write the lexicon and assignment JSON")
    lex.add_argument("--out", default="lexicon.json", help="Output JSON path")
    return parser


def _load(path: Optional[str], seed: Optional[int]) -> ExperimentConfig:
    config = load_config(path) if path else ExperimentConfig()
    if seed is not None:
        config = config.with_seed(seed)
    return config


def _jobs_from_env() -> int:
    raw = os.getenv("ZODIAC_LAB_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise ConfigError("ZODIAC_LAB_JOBS", f"must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise ConfigError("ZODIAC_LAB_JOBS", "must be >= 1")
    return jobs


def _exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ConfigError):
        return EXIT_CONFIG
    if isinstance(exc, TrainingDivergenceError):
        return EXIT_DIVERGENCE
    if isinstance(exc, OSError):
        return EXIT_IO
    return EXIT_FAILURE


def cmd_generate(args: argparse.Namespace) -> int:
    config = _load(args.config, args.seed)
    result = run_generation_workflow(config.generation, args.out)
    if not result['success']:
        print(f"ERROR: {result['error']}", file=sys.stderr)
        return _exit_code_for(result['exception'])
    print(f"Population: {result['files']['population']}")
    print(f"Config sidecar: {result['files']['config']}")
    return EXIT_OK


def cmd_run(args: argparse.Namespace) -> int:
    config = _load(args.config, args.seed)
    if args.models:
        config = config.with_models(args.models.split(","))
        config.validate()
    output_dir = (args.out or config.output_directory
                  or os.getenv("ZODIAC_LAB_OUTPUT_DIR", "results"))

    print("\n" + "=" * 60)
    print("   ZODIACLAB - Zodiac Personality Experiment")
    print("=" * 60 + "\n")

    result = run_experiment_workflow(
        config.with_output_directory(output_dir),
        output_dir,
        dump_features=args.dump_features,
        save_models_dir=args.save_models,
        n_jobs=_jobs_from_env(),
    )
    if not result['success']:
        exc = result['exception']
        if isinstance(exc, TrainingDivergenceError):
            print(f"ERROR: model '{exc.model_kind}' diverged: {exc}", file=sys.stderr)
        else:
            print(f"ERROR: {result['error']}", file=sys.stderr)
        return _exit_code_for(exc)

    report = result['report']
    print(f"{'Model':<24}{'test':>8}{'shuffled':>10}{'p':>8}")
    for row in extract_summary_rows(report):
        print(f"{display_name(str(row['model'])):<24}{row['test_acc']:>8.4f}"
              f"{row['shuffled_mean']:>10.4f}{row['p_value']:>8.3f}")
    print(f"\nUniform baseline {report.baselines.uniform_random_accuracy:.4f}, "
          f"Bayes accuracy {report.baselines.bayes_accuracy:.4f}")

    print(f"\n{'=' * 60}")
    print("  OUTPUT SAVED")
    print("=" * 60)
    for name, path in result['files'].items():
        print(f"   {name}: {path}")
    print("=" * 60 + "\n")
    return EXIT_OK


def cmd_export_lexicon(args: argparse.Namespace) -> int:
    lexicon = build_default_lexicon()
    write_lexicon_json(args.out, lexicon, build_default_assignments(lexicon))
    print(f"Lexicon: {args.out}")
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "run": cmd_run,
    "export-lexicon": cmd_export_lexicon,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, dispatch the subcommand and return its exit code."""
    load_dotenv()
    logging.basicConfig(
        level=os.getenv("ZODIAC_LAB_LOG_LEVEL", "INFO").upper(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[logging.StreamHandler(sys.stdout)],
    )
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"CONFIG ERROR: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"I/O ERROR: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
