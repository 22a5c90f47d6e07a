"""Experiment configuration: frozen dataclasses loaded from a JSON file.

Every section has documented defaults, so ``{}`` is a valid config. Unknown
keys, wrong types and out-of-range values raise ``ConfigError`` naming the
dotted field path.
"""

import json
import math
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Tuple

from zodiac_lab.errors import ConfigError

MODEL_KINDS = ("logreg", "forest", "mlp")
MAX_SEED = (1 << 64) - 1
# exp(-rate) must stay a normal double for the Poisson sampler
MAX_CHAI_RATE = 700.0


@dataclass(frozen=True)
class GenerationConfig:
    """Synthetic population parameters (nuisance defaults are arbitrary)."""

    population_size: int = 5000
    signal_probability: float = 0.1
    seed: int = 42
    sleep_mean_hours: float = 7.0
    sleep_sd_hours: float = 1.0
    chai_rate_cups_per_day: float = 3.0
    retrograde_probability: float = 0.19

    def validate(self, path: str = "generation") -> None:
        _check(self.population_size >= 1, f"{path}.population_size", "must be >= 1")
        _check_probability(self.signal_probability, f"{path}.signal_probability")
        _check_seed(self.seed, f"{path}.seed")
        _check(math.isfinite(self.sleep_mean_hours), f"{path}.sleep_mean_hours", "must be finite")
        _check_positive(self.sleep_sd_hours, f"{path}.sleep_sd_hours")
        _check_positive(self.chai_rate_cups_per_day, f"{path}.chai_rate_cups_per_day")
        _check(self.chai_rate_cups_per_day <= MAX_CHAI_RATE, f"{path}.chai_rate_cups_per_day",
               f"must be <= {MAX_CHAI_RATE:g}")
        _check_probability(self.retrograde_probability, f"{path}.retrograde_probability")


@dataclass(frozen=True)
class LogRegParams:
    learning_rate: float = 0.1
    epochs: int = 200
    batch_size: int = 64
    l2_penalty: float = 1e-4

    def validate(self, path: str) -> None:
        _check_positive(self.learning_rate, f"{path}.learning_rate")
        # zero epochs is allowed: it leaves the zero-initialized model untouched
        _check(self.epochs >= 0, f"{path}.epochs", "must be >= 0")
        _check(self.batch_size >= 1, f"{path}.batch_size", "must be >= 1")
        _check(self.l2_penalty >= 0 and math.isfinite(self.l2_penalty),
               f"{path}.l2_penalty", "must be a finite value >= 0")


@dataclass(frozen=True)
class ForestParams:
    n_trees: int = 100
    max_depth: int = 12
    min_samples_split: int = 2
    features_per_split: int = 5

    def validate(self, path: str) -> None:
        _check(self.n_trees >= 1, f"{path}.n_trees", "must be >= 1")
        _check(self.max_depth >= 1, f"{path}.max_depth", "must be >= 1")
        _check(self.min_samples_split >= 1, f"{path}.min_samples_split", "must be >= 1")
        _check(self.features_per_split >= 1, f"{path}.features_per_split", "must be >= 1")


@dataclass(frozen=True)
class MlpParams:
    hidden_units: int = 64
    learning_rate: float = 0.05
    epochs: int = 200
    batch_size: int = 64

    def validate(self, path: str) -> None:
        _check(self.hidden_units >= 1, f"{path}.hidden_units", "must be >= 1")
        _check_positive(self.learning_rate, f"{path}.learning_rate")
        _check(self.epochs >= 0, f"{path}.epochs", "must be >= 0")
        _check(self.batch_size >= 1, f"{path}.batch_size", "must be >= 1")


@dataclass(frozen=True)
class TrainConfig:
    """One classifier to train. Only the block matching ``model_kind`` is used."""

    model_kind: str = "logreg"
    seed: int = 0
    logreg: LogRegParams = field(default_factory=LogRegParams)
    forest: ForestParams = field(default_factory=ForestParams)
    mlp: MlpParams = field(default_factory=MlpParams)

    def validate(self, path: str = "model") -> None:
        _check(self.model_kind in MODEL_KINDS, f"{path}.model_kind",
               f"must be one of {', '.join(MODEL_KINDS)}, got {self.model_kind!r}")
        _check_seed(self.seed, f"{path}.seed")
        self.logreg.validate(f"{path}.logreg")
        self.forest.validate(f"{path}.forest")
        self.mlp.validate(f"{path}.mlp")


@dataclass(frozen=True)
class EvaluationConfig:
    k_folds: int = 5
    test_fraction: float = 0.2
    permutation_repetitions: int = 19
    experiment_seed: int = 42

    def validate(self, path: str = "evaluation") -> None:
        _check(self.k_folds >= 2, f"{path}.k_folds", "must be >= 2")
        _check(0 < self.test_fraction < 1, f"{path}.test_fraction", "must be in (0, 1)")
        _check(self.permutation_repetitions >= 1, f"{path}.permutation_repetitions", "must be >= 1")
        _check_seed(self.experiment_seed, f"{path}.experiment_seed")


def _default_models() -> Tuple[TrainConfig, ...]:
    return tuple(TrainConfig(model_kind=kind) for kind in MODEL_KINDS)


@dataclass(frozen=True)
class ExperimentConfig:
    generation: GenerationConfig = field(default_factory=GenerationConfig)
    models: Tuple[TrainConfig, ...] = field(default_factory=_default_models)
    evaluation: EvaluationConfig = field(default_factory=EvaluationConfig)
    output_directory: Optional[str] = None

    def validate(self) -> None:
        self.generation.validate("generation")
        _check(len(self.models) >= 1, "models", "at least one model is required")
        for i, model in enumerate(self.models):
            model.validate(f"models[{i}]")
        kinds = [m.model_kind for m in self.models]
        _check(len(set(kinds)) == len(kinds), "models", "each model_kind may appear only once")
        self.evaluation.validate("evaluation")

    def with_seed(self, seed: int) -> "ExperimentConfig":
        """Override the generation seed and the experiment seed together."""
        _check_seed(seed, "--seed")
        return replace(
            self,
            generation=replace(self.generation, seed=seed),
            evaluation=replace(self.evaluation, experiment_seed=seed),
        )

    def with_models(self, kinds: Iterable[str]) -> "ExperimentConfig":
        """Keep only the listed model kinds, in configuration order."""
        wanted = [k.strip() for k in kinds if k.strip()]
        known = {m.model_kind for m in self.models}
        for kind in wanted:
            _check(kind in MODEL_KINDS, "--models", f"unknown model kind {kind!r}")
            _check(kind in known, "--models", f"model kind {kind!r} is not configured")
        return replace(self, models=tuple(m for m in self.models if m.model_kind in wanted))

    def with_output_directory(self, directory: str) -> "ExperimentConfig":
        return replace(self, output_directory=str(directory))

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["models"] = [asdict(m) for m in self.models]
        return data

    @classmethod
    def from_dict(cls, data: Any) -> "ExperimentConfig":
        """Build and validate a config from parsed JSON."""
        _check(isinstance(data, dict), "<root>", "config must be a JSON object")
        _reject_unknown(data, {"generation", "models", "evaluation", "output_directory"}, "")

        generation = _build(GenerationConfig, data.get("generation", {}), "generation")
        evaluation = _build(EvaluationConfig, data.get("evaluation", {}), "evaluation")

        if "models" in data:
            raw_models = data["models"]
            _check(isinstance(raw_models, list), "models", "must be a list")
            models = tuple(train_config_from_dict(m, f"models[{i}]") for i, m in enumerate(raw_models))
        else:
            models = _default_models()

        output_directory = data.get("output_directory")
        _check(output_directory is None or isinstance(output_directory, str),
               "output_directory", "must be a string")

        config = cls(generation=generation, models=models, evaluation=evaluation,
                     output_directory=output_directory)
        config.validate()
        return config


def load_config(path: str) -> ExperimentConfig:
    """Read and validate an experiment config JSON file.

    Raises:
        ConfigError: Syntax errors (anchored at file:line:column) or invalid fields
        OSError: The file cannot be read
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from exc
    return ExperimentConfig.from_dict(data)


def load_generation_config(path: str) -> GenerationConfig:
    """Read a generation sidecar, or the generation section of an experiment config."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from exc
    if isinstance(data, dict) and "population_size" not in data:
        return ExperimentConfig.from_dict(data).generation
    config = _build(GenerationConfig, data, "generation")
    config.validate()
    return config


def train_config_from_dict(data: Any, path: str = "model") -> TrainConfig:
    _check(isinstance(data, dict), path, "must be an object")
    _reject_unknown(data, {"model_kind", "seed", "logreg", "forest", "mlp"}, path)
    kind = data.get("model_kind", TrainConfig.model_kind)
    _check(isinstance(kind, str), f"{path}.model_kind", "must be a string")
    seed = _coerce(data.get("seed", TrainConfig.seed), int, f"{path}.seed")
    return TrainConfig(
        model_kind=kind,
        seed=seed,
        logreg=_build(LogRegParams, data.get("logreg", {}), f"{path}.logreg"),
        forest=_build(ForestParams, data.get("forest", {}), f"{path}.forest"),
        mlp=_build(MlpParams, data.get("mlp", {}), f"{path}.mlp"),
    )


def _build(cls, data: Any, path: str):
    """Instantiate a flat dataclass from a dict, type-checking each field."""
    _check(isinstance(data, dict), path, "must be an object")
    known = {f.name: f for f in fields(cls)}
    _reject_unknown(data, set(known), path)
    kwargs = {name: _coerce(value, known[name].type, f"{path}.{name}")
              for name, value in data.items()}
    return cls(**kwargs)


def _coerce(value: Any, kind: type, path: str) -> Any:
    # bool is a subclass of int; JSON true/false are never numbers here
    if kind is int:
        _check(isinstance(value, int) and not isinstance(value, bool), path,
               f"must be an integer, got {value!r}")
        return value
    if kind is float:
        _check(isinstance(value, (int, float)) and not isinstance(value, bool), path,
               f"must be a number, got {value!r}")
        _check(math.isfinite(value), path, "must be finite")
        return float(value)
    _check(isinstance(value, kind), path, f"must be of type {kind.__name__}, got {value!r}")
    return value


def _reject_unknown(data: Dict[str, Any], allowed: set, path: str) -> None:
    for key in data:
        if key not in allowed:
            where = f"{path}.{key}" if path else key
            raise ConfigError(where, "unknown field")


def _check(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise ConfigError(path, message)


def _check_positive(value: float, path: str) -> None:
    _check(math.isfinite(value) and value > 0, path, f"must be > 0, got {value!r}")


def _check_probability(value: float, path: str) -> None:
    _check(0.0 <= value <= 1.0, path, f"must be in [0, 1], got {value!r}")


def _check_seed(value: int, path: str) -> None:
    _check(0 <= value <= MAX_SEED, path, f"must be an unsigned 64-bit integer, got {value!r}")
