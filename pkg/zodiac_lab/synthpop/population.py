"""Seeded synthetic population generator.

Each individual consumes the generator stream in a fixed field order:
sign, birth month, sleep (two draws), chai, retrograde, lunar vibe, label
(branch draw + selection draw).
"""

import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Tuple

import numpy as np
import pandas as pd

from zodiac_lab.config import GenerationConfig
from zodiac_lab.errors import GenerationError
from zodiac_lab.lexicon import (
    N_SIGNS,
    TRAIT_POOL_SIZE,
    TRAITS_PER_SIGN,
    AssignmentTable,
    TraitId,
    TraitLexicon,
    ZodiacSign,
)
from zodiac_lab.synthpop.rng import Pcg32, rng_new

logger = logging.getLogger(__name__)

POPULATION_STREAM = 1

CSV_COLUMNS = ["sign", "birth_month", "sleep_hours", "chai_cups",
               "mercury_retrograde", "lunar_vibe", "label"]

# (first month, days of the sign in it, second month, days in it); non-leap tropical dates
SIGN_MONTH_SPANS = {
    ZodiacSign.ARIES: (3, 11, 4, 19),
    ZodiacSign.TAURUS: (4, 11, 5, 20),
    ZodiacSign.GEMINI: (5, 11, 6, 20),
    ZodiacSign.CANCER: (6, 10, 7, 22),
    ZodiacSign.LEO: (7, 9, 8, 22),
    ZodiacSign.VIRGO: (8, 9, 9, 22),
    ZodiacSign.LIBRA: (9, 8, 10, 22),
    ZodiacSign.SCORPIO: (10, 9, 11, 21),
    ZodiacSign.SAGITTARIUS: (11, 9, 12, 21),
    ZodiacSign.CAPRICORN: (12, 10, 1, 19),
    ZodiacSign.AQUARIUS: (1, 12, 2, 18),
    ZodiacSign.PISCES: (2, 10, 3, 20),
}


@dataclass(frozen=True)
class Individual:
    sign: ZodiacSign
    birth_month: int
    sleep_hours: float
    chai_cups: int
    mercury_retrograde: bool
    lunar_vibe: float
    label: TraitId


@dataclass(frozen=True)
class Population:
    individuals: Tuple[Individual, ...]
    config: GenerationConfig

    def __len__(self) -> int:
        return len(self.individuals)

    def __iter__(self):
        return iter(self.individuals)

    def labels(self) -> np.ndarray:
        return np.fromiter((p.label for p in self.individuals), dtype=np.int64,
                           count=len(self.individuals))


def birth_month_for_sign(sign: ZodiacSign, rng: Pcg32) -> int:
    """Pick one of the two calendar months a sign spans, weighted by days."""
    first, first_days, second, second_days = SIGN_MONTH_SPANS[sign]
    if rng.random_float() < first_days / (first_days + second_days):
        return first
    return second


def sample_label(sign: ZodiacSign, table: AssignmentTable, signal_probability: float,
                 rng: Pcg32) -> TraitId:
    """Draw a label from the sign/pool mixture.

    With probability ``signal_probability`` the label is uniform over the
    sign's 10 traits, otherwise uniform over all 100.
    """
    if rng.random_float() < signal_probability:
        return table.traits(sign)[rng.uniform_int(TRAITS_PER_SIGN)]
    return rng.uniform_int(TRAIT_POOL_SIZE)


def _generate_individual(config: GenerationConfig, table: AssignmentTable,
                         rng: Pcg32) -> Individual:
    sign = ZodiacSign(rng.uniform_int(N_SIGNS))
    birth_month = birth_month_for_sign(sign, rng)
    sleep_hours = min(24.0, max(0.0, rng.normal(config.sleep_mean_hours, config.sleep_sd_hours)))
    chai_cups = rng.poisson(config.chai_rate_cups_per_day)
    mercury_retrograde = rng.bernoulli(config.retrograde_probability)
    lunar_vibe = rng.random_float()
    label = sample_label(sign, table, config.signal_probability, rng)
    return Individual(sign, birth_month, sleep_hours, chai_cups, mercury_retrograde,
                      lunar_vibe, label)


def generate_population(config: GenerationConfig, lexicon: TraitLexicon,
                        table: AssignmentTable) -> Population:
    """Generate ``config.population_size`` individuals from ``config.seed``.

    Raises:
        GenerationError: If the population size is zero
    """
    if config.population_size < 1:
        raise GenerationError("population_size must be >= 1 (empty experiment)")
    if len(lexicon) != TRAIT_POOL_SIZE:
        raise GenerationError(f"Lexicon must hold {TRAIT_POOL_SIZE} traits")

    logger.info("Generating %d individuals (p_signal=%.3g, seed=%d)",
                config.population_size, config.signal_probability, config.seed)
    rng = rng_new(config.seed, POPULATION_STREAM)
    individuals = tuple(_generate_individual(config, table, rng)
                        for _ in range(config.population_size))
    return Population(individuals=individuals, config=config)


def label_distribution(table: AssignmentTable, signal_probability: float) -> np.ndarray:
    """Closed-form P(label = t | sign = s) as a 12 x 100 matrix."""
    dist = np.full((N_SIGNS, TRAIT_POOL_SIZE), (1.0 - signal_probability) / TRAIT_POOL_SIZE)
    for sign in ZodiacSign:
        dist[int(sign), list(table.traits(sign))] += signal_probability / TRAITS_PER_SIGN
    return dist


def population_to_frame(population: Population) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "sign": [p.sign.display_name for p in population],
            "birth_month": [p.birth_month for p in population],
            "sleep_hours": [p.sleep_hours for p in population],
            "chai_cups": [p.chai_cups for p in population],
            "mercury_retrograde": [int(p.mercury_retrograde) for p in population],
            "lunar_vibe": [p.lunar_vibe for p in population],
            "label": [p.label for p in population],
        },
        columns=CSV_COLUMNS,
    )


def write_population_csv(path: str, population: Population) -> None:
    population_to_frame(population).to_csv(path, index=False, float_format="%.9g",
                                            lineterminator="\n")


def write_config_sidecar(path: str, config: GenerationConfig) -> None:
    Path(path).write_text(json.dumps(asdict(config), indent=2) + "\n", encoding="utf-8")


def read_population_csv(path: str, config: GenerationConfig) -> Population:
    """Read a population CSV written by ``write_population_csv``.

    Raises:
        GenerationError: On a wrong header or a row count that disagrees with config
    """
    frame = pd.read_csv(path, float_precision="round_trip")
    if list(frame.columns) != CSV_COLUMNS:
        raise GenerationError(f"{path}: unexpected header {list(frame.columns)}")
    if len(frame) != config.population_size:
        raise GenerationError(
            f"{path}: {len(frame)} rows but config says population_size={config.population_size}"
        )
    individuals = tuple(
        Individual(
            sign=ZodiacSign.from_name(row.sign),
            birth_month=int(row.birth_month),
            sleep_hours=float(row.sleep_hours),
            chai_cups=int(row.chai_cups),
            mercury_retrograde=bool(row.mercury_retrograde),
            lunar_vibe=float(row.lunar_vibe),
            label=int(row.label),
        )
        for row in frame.itertuples(index=False)
    )
    return Population(individuals=individuals, config=config)
