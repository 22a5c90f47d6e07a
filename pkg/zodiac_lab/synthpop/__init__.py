"""Synthetic population generation."""

from zodiac_lab.synthpop.population import (
    Individual,
    Population,
    generate_population,
    label_distribution,
    read_population_csv,
    sample_label,
    write_config_sidecar,
    write_population_csv,
)
from zodiac_lab.synthpop.rng import Pcg32, rng_new, rng_uniform_int

__all__ = [
    "Individual",
    "Pcg32",
    "Population",
    "generate_population",
    "label_distribution",
    "read_population_csv",
    "rng_new",
    "rng_uniform_int",
    "sample_label",
    "write_config_sidecar",
    "write_population_csv",
]
