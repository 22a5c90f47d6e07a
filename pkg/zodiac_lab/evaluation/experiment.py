"""End-to-end protocol: holdout split, per-fold CV, final fit, permutation control."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from zodiac_lab.config import ExperimentConfig, TrainConfig
from zodiac_lab.evaluation.metrics import (
    accuracy,
    assigned_trait_diagonal_share,
    bayes_accuracy,
    confusion,
    diagonal_share,
    majority_baseline,
    uniform_random_baseline,
)
from zodiac_lab.evaluation.permutation import permutation_control
from zodiac_lab.evaluation.report import Baselines, EvaluationReport, ModelResult
from zodiac_lab.evaluation.splits import kfold_split, stratified_holdout
from zodiac_lab.features import (
    FeatureMatrix,
    apply_standardizer,
    encode,
    fit_standardizer,
)
from zodiac_lab.lexicon import (
    TRAIT_POOL_SIZE,
    AssignmentTable,
    TraitLexicon,
    build_default_assignments,
    build_default_lexicon,
)
from zodiac_lab.models import TrainedModel, predict, train_model
from zodiac_lab.synthpop.population import Population, generate_population

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ExperimentOutcome:
    """The report plus the artifacts the CLI can optionally persist."""

    report: EvaluationReport
    features: FeatureMatrix
    models: Dict[str, TrainedModel]


def _standardized_pair(matrix: FeatureMatrix, train_rows, test_rows):
    params = fit_standardizer(matrix, train_rows)
    return (apply_standardizer(matrix.subset(train_rows), params),
            apply_standardizer(matrix.subset(test_rows), params))


def cross_validate(train: FeatureMatrix, config: TrainConfig, k: int, seed: int,
                   n_classes: int = TRAIT_POOL_SIZE, n_jobs: int = 1) -> List[float]:
    """k-fold accuracies; each fold's standardizer sees only that fold's training rows."""
    plan = kfold_split(train.labels, k, seed)
    accuracies = []
    for fold in range(k):
        fold_train, fold_val = _standardized_pair(train, plan.train_rows(fold), plan.test_rows(fold))
        model = train_model(fold_train, config, n_classes, n_jobs=n_jobs)
        accuracies.append(accuracy(predict(model, fold_val), fold_val.labels))
        logger.debug("%s fold %d: accuracy %.4f", config.model_kind, fold, accuracies[-1])
    return accuracies


def execute_experiment(config: ExperimentConfig, population: Optional[Population] = None,
                       lexicon: Optional[TraitLexicon] = None,
                       table: Optional[AssignmentTable] = None,
                       n_jobs: int = 1) -> ExperimentOutcome:
    """Run the full protocol for every configured model.

    Raises:
        TrainingDivergenceError: If any model diverges
    """
    lexicon = lexicon or build_default_lexicon()
    table = table or build_default_assignments(lexicon)
    if population is None:
        population = generate_population(config.generation, lexicon, table)
    evaluation = config.evaluation
    seed = evaluation.experiment_seed

    matrix = encode(population)
    train_rows, test_rows = stratified_holdout(matrix.labels, evaluation.test_fraction, seed)
    raw_train = matrix.subset(train_rows)
    train, test = _standardized_pair(matrix, train_rows, test_rows)
    logger.info("Split %d individuals into %d train / %d test",
                matrix.n_rows, len(train_rows), len(test_rows))

    results = []
    models: Dict[str, TrainedModel] = {}
    for model_config in config.models:
        kind = model_config.model_kind
        logger.info("%s: %d-fold cross-validation", kind, evaluation.k_folds)
        fold_accuracies = cross_validate(raw_train, model_config, evaluation.k_folds, seed,
                                         n_jobs=n_jobs)

        logger.info("%s: final fit on the training split", kind)
        model = train_model(train, model_config, n_jobs=n_jobs)
        predictions = predict(model, test)
        test_accuracy = accuracy(predictions, test.labels)
        matrix_counts = confusion(predictions, test.labels, TRAIT_POOL_SIZE)

        logger.info("%s: %d shuffled-label repetitions", kind, evaluation.permutation_repetitions)
        shuffled, p_value = permutation_control(
            train, test, model_config, evaluation.permutation_repetitions, seed,
            test_accuracy, n_jobs=n_jobs,
        )
        results.append(ModelResult(
            model_kind=kind,
            cv_fold_accuracies=tuple(fold_accuracies),
            cv_mean_accuracy=sum(fold_accuracies) / len(fold_accuracies),
            test_accuracy=test_accuracy,
            confusion=matrix_counts,
            shuffled_accuracies=tuple(shuffled),
            permutation_p_value=p_value,
            diagonal_share=diagonal_share(matrix_counts),
            assigned_trait_diagonal_share=assigned_trait_diagonal_share(matrix_counts, table),
        ))
        models[kind] = model
        logger.info("%s: test accuracy %.4f, shuffled mean %.4f, p=%.3f",
                    kind, test_accuracy, results[-1].shuffled_mean_accuracy, p_value)

    snapshot = config.to_dict()
    snapshot.pop("output_directory", None)
    report = EvaluationReport(
        models=tuple(results),
        baselines=Baselines(
            uniform_random_accuracy=uniform_random_baseline(TRAIT_POOL_SIZE),
            majority_class_accuracy=majority_baseline(test.labels),
            bayes_accuracy=bayes_accuracy(config.generation.signal_probability),
        ),
        n_train=len(train_rows),
        n_test=len(test_rows),
        config=snapshot,
    )
    return ExperimentOutcome(report=report, features=matrix, models=models)


def run_experiment(config: ExperimentConfig, population: Optional[Population] = None,
                   n_jobs: int = 1) -> EvaluationReport:
    return execute_experiment(config, population=population, n_jobs=n_jobs).report
