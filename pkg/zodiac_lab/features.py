"""Population -> numeric design matrix.

Column layout (d = 28): sign one-hot (12), birth-month one-hot (12),
numeric sleep_hours / chai_cups / lunar_vibe (3), binary mercury_retrograde (1).
Standardizers are fitted on training rows only and touch numeric columns only.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from zodiac_lab.errors import FeatureSchemaError
from zodiac_lab.lexicon import N_SIGNS, ZodiacSign
from zodiac_lab.synthpop.population import Population

ONEHOT = "onehot"
NUMERIC = "numeric"
BINARY = "binary"

STD_FLOOR = 1e-12

NUMERIC_FIELDS = ("sleep_hours", "chai_cups", "lunar_vibe")


@dataclass(frozen=True)
class FeatureSchema:
    columns: Tuple[Tuple[str, str], ...]

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.columns)

    def indices(self, kind: str) -> np.ndarray:
        return np.array([i for i, (_, k) in enumerate(self.columns) if k == kind], dtype=np.int64)


POPULATION_SCHEMA = FeatureSchema(
    columns=tuple((f"sign={s.display_name}", ONEHOT) for s in ZodiacSign)
    + tuple((f"month={m}", ONEHOT) for m in range(1, 13))
    + tuple((name, NUMERIC) for name in NUMERIC_FIELDS)
    + (("mercury_retrograde", BINARY),)
)

SIGN_BLOCK = slice(0, N_SIGNS)
MONTH_BLOCK = slice(N_SIGNS, N_SIGNS + 12)


@dataclass(frozen=True, eq=False)
class FeatureMatrix:
    values: np.ndarray
    schema: FeatureSchema
    labels: np.ndarray

    def __post_init__(self):
        if self.values.ndim != 2 or self.values.shape[1] != self.schema.width:
            raise FeatureSchemaError(
                f"values shape {self.values.shape} does not match schema width {self.schema.width}"
            )
        if len(self.labels) != self.values.shape[0]:
            raise FeatureSchemaError(
                f"{len(self.labels)} labels for {self.values.shape[0]} rows"
            )

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def width(self) -> int:
        return self.values.shape[1]

    def subset(self, rows: Sequence[int]) -> "FeatureMatrix":
        rows = np.asarray(rows, dtype=np.int64)
        return FeatureMatrix(self.values[rows], self.schema, self.labels[rows])

    def with_labels(self, labels: Sequence[int]) -> "FeatureMatrix":
        return FeatureMatrix(self.values, self.schema, np.asarray(labels, dtype=np.int64))

    @classmethod
    def from_arrays(cls, values, labels, schema: Optional[FeatureSchema] = None) -> "FeatureMatrix":
        """Wrap raw arrays; without a schema every column is numeric."""
        values = np.asarray(values, dtype=np.float64)
        if schema is None:
            schema = FeatureSchema(tuple((f"x{i}", NUMERIC) for i in range(values.shape[1])))
        return cls(values, schema, np.asarray(labels, dtype=np.int64))


@dataclass(frozen=True, eq=False)
class StandardizationParams:
    schema: FeatureSchema
    columns: np.ndarray
    means: np.ndarray
    stds: np.ndarray


def encode(population: Population) -> FeatureMatrix:
    """One-hot sign and month, raw numeric covariates, 0/1 retrograde flag."""
    n = len(population)
    if n == 0:
        raise FeatureSchemaError("Cannot encode an empty population")
    values = np.zeros((n, POPULATION_SCHEMA.width), dtype=np.float64)
    for row, person in enumerate(population):
        values[row, int(person.sign)] = 1.0
        values[row, N_SIGNS + person.birth_month - 1] = 1.0
        values[row, 24] = person.sleep_hours
        values[row, 25] = person.chai_cups
        values[row, 26] = person.lunar_vibe
        values[row, 27] = 1.0 if person.mercury_retrograde else 0.0
    return FeatureMatrix(values, POPULATION_SCHEMA, population.labels())


def fit_standardizer(matrix: FeatureMatrix, row_subset: Sequence[int]) -> StandardizationParams:
    """Per numeric column mean and population std over ``row_subset`` only.

    Raises:
        FeatureSchemaError: If ``row_subset`` is empty
    """
    rows = np.asarray(row_subset, dtype=np.int64)
    if rows.size == 0:
        raise FeatureSchemaError("Cannot fit a standardizer on an empty row subset")
    columns = matrix.schema.indices(NUMERIC)
    block = matrix.values[np.ix_(rows, columns)]
    means = block.mean(axis=0)
    stds = block.std(axis=0)  # ddof=0: population std
    stds = np.where(stds < STD_FLOOR, 1.0, stds)
    return StandardizationParams(matrix.schema, columns, means, stds)


def apply_standardizer(matrix: FeatureMatrix, params: StandardizationParams) -> FeatureMatrix:
    """Return a copy with numeric columns mapped to (x - mean) / std.

    Raises:
        FeatureSchemaError: If the matrix schema differs from the fitted one
    """
    if matrix.schema != params.schema:
        raise FeatureSchemaError("Standardizer was fitted on a different feature schema")
    values = matrix.values.copy()
    values[:, params.columns] = (values[:, params.columns] - params.means) / params.stds
    return FeatureMatrix(values, matrix.schema, matrix.labels)


def decode_signs(matrix: FeatureMatrix) -> np.ndarray:
    """Sign ordinals recovered from the sign one-hot block."""
    return np.argmax(matrix.values[:, SIGN_BLOCK], axis=1)


def decode_months(matrix: FeatureMatrix) -> np.ndarray:
    """Calendar months (1-12) recovered from the month one-hot block."""
    return np.argmax(matrix.values[:, MONTH_BLOCK], axis=1) + 1


def write_feature_csv(path: str, matrix: FeatureMatrix) -> None:
    frame = pd.DataFrame(matrix.values, columns=list(matrix.schema.names))
    frame["label"] = matrix.labels
    frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")


def read_feature_csv(path: str, schema: FeatureSchema = POPULATION_SCHEMA) -> FeatureMatrix:
    """Read a matrix written by ``write_feature_csv``.

    Raises:
        FeatureSchemaError: If the header does not match ``schema`` plus ``label``
    """
    frame = pd.read_csv(path, float_precision="round_trip")
    expected = list(schema.names) + ["label"]
    if list(frame.columns) != expected:
        raise FeatureSchemaError(f"{path}: header does not match the feature schema")
    return FeatureMatrix(
        frame[list(schema.names)].to_numpy(dtype=np.float64),
        schema,
        frame["label"].to_numpy(dtype=np.int64),
    )
