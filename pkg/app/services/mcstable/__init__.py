"""
Oráculo Monte Carlo: muestreo α-estable reproducible y comparaciones estadísticas
"""

from app.services.mcstable.generator import block_generator, standard_stable, sample, flight_positions
from app.services.mcstable.statistics import (
    stability_check,
    numeric_cdf,
    ks_against_numeric,
    hill_tail_index,
    running_variance,
    median_variance_growth,
    sign_balance,
)

__all__ = [
    "block_generator",
    "standard_stable",
    "sample",
    "flight_positions",
    "stability_check",
    "numeric_cdf",
    "ks_against_numeric",
    "hill_tail_index",
    "running_variance",
    "median_variance_growth",
    "sign_balance",
]
