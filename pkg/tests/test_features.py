"""Tests for one-hot encoding and train-only standardization."""

import numpy as np
import pandas as pd
import pytest

from zodiac_lab.config import GenerationConfig
from zodiac_lab.errors import FeatureSchemaError
from zodiac_lab.features import (
    MONTH_BLOCK,
    NUMERIC,
    POPULATION_SCHEMA,
    SIGN_BLOCK,
    FeatureMatrix,
    StandardizationParams,
    apply_standardizer,
    decode_months,
    decode_signs,
    encode,
    fit_standardizer,
    read_feature_csv,
    write_feature_csv,
)
from zodiac_lab.lexicon import ZodiacSign
from zodiac_lab.synthpop import generate_population
from zodiac_lab.synthpop.population import Individual, Population


@pytest.fixture
def population(lexicon, table):
    return generate_population(GenerationConfig(population_size=500, seed=17), lexicon, table)


@pytest.fixture
def matrix(population):
    return encode(population)


def person(sign=ZodiacSign.ARIES, month=4, retrograde=False, sleep=7.0):
    return Individual(sign, month, sleep, 2, retrograde, 0.25, 3)


def test_schema_layout():
    assert POPULATION_SCHEMA.width == 28
    assert POPULATION_SCHEMA.names[0] == "sign=Aries"
    assert POPULATION_SCHEMA.names[12] == "month=1"
    assert list(POPULATION_SCHEMA.indices(NUMERIC)) == [24, 25, 26]


def test_aries_encodes_to_first_sign_column():
    # Arrange
    population = Population((person(), person(ZodiacSign.PISCES, 3, True)), GenerationConfig(2))

    # Act
    values = encode(population).values

    # Assert
    assert list(values[0, SIGN_BLOCK]) == [1.0] + [0.0] * 11
    assert values[1, 11] == 1.0
    assert values[0, 27] == 0.0
    assert values[1, 27] == 1.0
    assert values[0, 24] == 7.0


def test_one_hot_blocks_sum_to_one(matrix):
    assert np.all(matrix.values[:, SIGN_BLOCK].sum(axis=1) == 1.0)
    assert np.all(matrix.values[:, MONTH_BLOCK].sum(axis=1) == 1.0)


def test_decode_recovers_signs_and_months(population, matrix):
    assert list(decode_signs(matrix)) == [int(p.sign) for p in population]
    assert list(decode_months(matrix)) == [p.birth_month for p in population]


def test_encode_keeps_labels(population, matrix):
    assert np.array_equal(matrix.labels, population.labels())


def test_constant_column_gets_unit_std():
    # Arrange
    X = FeatureMatrix.from_arrays([[5.0, 1.0], [5.0, 2.0], [5.0, 3.0]], [0, 1, 2])

    # Act
    params = fit_standardizer(X, [0, 1, 2])

    # Assert
    assert params.stds[0] == 1.0
    assert params.means[1] == pytest.approx(2.0)
    assert params.stds[1] == pytest.approx(np.sqrt(2.0 / 3.0))


def test_full_fit_centres_numeric_columns(matrix):
    rows = np.arange(matrix.n_rows)
    standardized = apply_standardizer(matrix, fit_standardizer(matrix, rows))
    numeric = standardized.values[:, POPULATION_SCHEMA.indices(NUMERIC)]
    assert np.all(np.abs(numeric.mean(axis=0)) < 1e-9)
    assert np.all(np.abs(numeric.var(axis=0) - 1.0) < 1e-6)


def test_identity_params_leave_matrix_unchanged(matrix):
    columns = POPULATION_SCHEMA.indices(NUMERIC)
    params = StandardizationParams(POPULATION_SCHEMA, columns, np.zeros(3), np.ones(3))
    assert np.array_equal(apply_standardizer(matrix, params).values, matrix.values)


def test_train_fold_fit_never_reads_test_rows(matrix):
    """Fitting on training rows centres them while held-out rows stay off-centre."""
    # Arrange
    train_rows = np.arange(0, 400)
    test_rows = np.arange(400, 500)
    shifted = matrix.values.copy()
    shifted[test_rows, 24] += 100.0
    X = FeatureMatrix(shifted, matrix.schema, matrix.labels)

    # Act
    params = fit_standardizer(X, train_rows)
    standardized = apply_standardizer(X, params)

    # Assert
    train_numeric = standardized.values[np.ix_(train_rows, params.columns)]
    assert np.all(np.abs(train_numeric.mean(axis=0)) < 1e-9)
    assert np.all(np.abs(train_numeric.var(axis=0) - 1.0) < 1e-6)
    assert standardized.values[test_rows, 24].mean() > 10.0


def test_standardizer_leaves_one_hot_and_binary_columns_bitwise(matrix):
    standardized = apply_standardizer(matrix, fit_standardizer(matrix, np.arange(250)))
    untouched = [i for i in range(28) if i not in (24, 25, 26)]
    assert np.array_equal(standardized.values[:, untouched], matrix.values[:, untouched])
    assert not np.shares_memory(standardized.values, matrix.values)


def test_empty_fit_subset_is_rejected(matrix):
    with pytest.raises(FeatureSchemaError):
        fit_standardizer(matrix, [])


def test_schema_mismatch_is_rejected(matrix):
    other = FeatureMatrix.from_arrays(matrix.values, matrix.labels)
    params = fit_standardizer(other, np.arange(10))
    with pytest.raises(FeatureSchemaError):
        apply_standardizer(matrix, params)


def test_label_count_must_match_rows():
    with pytest.raises(FeatureSchemaError):
        FeatureMatrix.from_arrays(np.zeros((3, 2)), [0, 1])


def test_feature_csv_has_schema_header(tmp_path, matrix):
    path = tmp_path / "features.csv"
    write_feature_csv(str(path), matrix)
    frame = pd.read_csv(path)
    assert list(frame.columns) == list(POPULATION_SCHEMA.names) + ["label"]


def test_feature_csv_round_trips_through_reader(tmp_path, matrix):
    """Values written with 17 significant digits read back bit-identical."""
    # Arrange
    path = str(tmp_path / "features.csv")
    write_feature_csv(path, matrix)

    # Act
    restored = read_feature_csv(path)

    # Assert
    assert restored.schema == matrix.schema
    assert np.array_equal(restored.values, matrix.values)
    assert np.array_equal(restored.labels, matrix.labels)


def test_feature_csv_reader_rejects_foreign_header(tmp_path):
    path = tmp_path / "other.csv"
    path.write_text("a,b,label\n1,2,0\n", encoding="utf-8")
    with pytest.raises(FeatureSchemaError):
        read_feature_csv(str(path))
