"""
Comprobaciones globales del propagador
Normalización con corrección de cola y propiedad de semigrupo (Chapman–Kolmogorov)
por convolución numérica sobre una malla uniforme.
"""

import logging
from typing import Optional

import numpy as np

from app.schemas.core_schema import StableParams
from app.schemas.propagator_schema import DensityQuery
from app.services.asymlag import tail_mass, tail_series
from app.services.propagator import cdf_1d, density_1d
from app.utils.constants import DEFAULT_TOL

logger = logging.getLogger(__name__)

# Más allá de TAIL_SWITCH·a^(1/α) la serie de cola con TAIL_TERMS términos es exacta a ~1e−9
TAIL_SWITCH = 20.0
TAIL_TERMS = 8


def normalization_defect(params: StableParams, length: float = 50.0, terms: int = 3, tol: float = DEFAULT_TOL) -> float:
    """|∫_{−L}^{L} P dx + 2·∫_L^∞ (serie de cola) − 1|, con ∫_{−L}^{L} P = 2F(L) − 1"""
    inner = 2.0 * cdf_1d(length, params, tol) - 1.0
    return abs(inner + 2.0 * tail_mass(length, params, terms) - 1.0)


def density_profile(params: StableParams, distances: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """P(|x|) sobre una malla: cuadratura cerca del origen, serie de cola lejos (1 < α < 2)"""
    use_tail = 1.0 < params.alpha < 2.0
    switch = TAIL_SWITCH * params.width
    values = np.empty(distances.size)
    for index, r in enumerate(distances):
        if use_tail and r > switch:
            values[index] = tail_series(r, params, TAIL_TERMS)
        else:
            values[index] = density_1d(DensityQuery(r=float(r), n=1, params=params, tol=tol)).value
    return values


def semigroup_defect(
        alpha: float,
        a1: float,
        a2: float,
        half_width: float = 40.0,
        spacing: float = 0.01,
        eval_limit: Optional[float] = None,
        tol: float = DEFAULT_TOL,
) -> float:
    """
    sup |(P(·; a₁) ∗ P(·; a₂))(x) − P(x; a₁+a₂)| sobre los nodos con |x| ≤ eval_limit

    La convolución es la suma de Riemann sobre [−half_width, half_width] con paso `spacing`;
    sin eval_limit el supremo recorre la malla completa.
    """
    steps = int(round(half_width / spacing))
    distances = spacing * np.arange(steps + 1)

    def full_profile(a: float, half_steps: int = steps) -> np.ndarray:
        half = density_profile(StableParams(alpha=alpha, a=a), distances[:half_steps + 1], tol)
        return np.concatenate((half[:0:-1], half))

    convolution = np.convolve(full_profile(a1), full_profile(a2), mode="same") * spacing

    limit_steps = steps if eval_limit is None else min(steps, int(round(eval_limit / spacing)))
    target = full_profile(a1 + a2, limit_steps)
    window = convolution[steps - limit_steps:steps + limit_steps + 1]
    defect = float(np.max(np.abs(window - target)))

    logger.info(f"Semigrupo α={alpha:g} a₁={a1:g} a₂={a2:g}: defecto {defect:.3e} en {target.size} nodos")
    return defect
