"""
Desarrollo de corto alcance del propagador 1D
Taylor del coseno bajo la integral:

    P(x) = (1/(πα))·a^(−1/α)·Σ_k (−1)^k Γ((2k+1)/α)/(2k)!·y^(2k),   y = |x|/a^(1/α)

Converge para α > 1; en doble precisión la cancelación crece con y.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import special

from app.schemas.core_schema import EvalResult, StableParams
from app.settings import get_settings
from app.utils.constants import EvalMethod
from app.utils.exceptions import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

EPS = 2.220446049250313e-16
SERIES_STOP = 1e-16


@dataclass(frozen=True)
class SeriesSum:
    """Suma parcial de la serie reducida (sin el prefactor 1/(πα a^(1/α)))"""
    total: float
    truncation: float
    roundoff: float
    terms: int

    @property
    def error(self) -> float:
        return self.truncation + self.roundoff


def reduced_series(y: float, alpha: float, max_terms: Optional[int] = None) -> SeriesSum:
    """
    Σ_k (−1)^k Γ((2k+1)/α)/(2k)!·y^(2k) con términos en escala logarítmica

    Se detiene cuando dos términos consecutivos son < 1e−16·|suma|.

    Raises:
        DomainError: Si α ≤ 1 (la serie no converge)
        ConvergenceError: Tope de términos alcanzado sin converger
    """
    if alpha <= 1.0:
        raise DomainError("La serie de corto alcance requiere α > 1")
    cap = max_terms or get_settings().series_max_terms

    if y == 0.0:
        value = float(special.gamma(1.0 / alpha))
        return SeriesSum(total=value, truncation=0.0, roundoff=EPS * value, terms=1)

    log_y = math.log(y)
    total = 0.0
    largest = 0.0
    small_run = 0
    previous = math.inf
    for k in range(cap):
        log_term = special.gammaln((2 * k + 1) / alpha) - special.gammaln(2 * k + 1) + 2 * k * log_y
        magnitude = math.exp(log_term) if log_term < 700.0 else math.inf
        if math.isinf(magnitude):
            raise ConvergenceError(f"La serie desborda en y={y:g} (α={alpha:g})", best_estimate=None)
        total += -magnitude if k % 2 else magnitude
        largest = max(largest, magnitude)
        small_run = small_run + 1 if magnitude < SERIES_STOP * abs(total) else 0
        if small_run >= 2:
            return SeriesSum(
                total=total,
                truncation=magnitude + previous,
                roundoff=4.0 * EPS * largest * math.sqrt(k + 1),
                terms=k + 1,
            )
        previous = magnitude

    raise ConvergenceError(
        f"La serie no convergió en {cap} términos (y={y:g}, α={alpha:g})",
        best_estimate=total,
        abs_err_estimate=previous,
    )


def density_series(x: float, params: StableParams, max_terms: Optional[int] = None) -> EvalResult:
    """
    Propagador 1D por la serie de corto alcance

    Returns:
        EvalResult (method = hfox_series: es la serie de residuos de la representación H)
        con error = truncación + redondeo acumulado
    """
    alpha = params.alpha
    width = params.width
    y = abs(x) / width
    series = reduced_series(y, alpha, max_terms)
    prefactor = 1.0 / (math.pi * alpha * width)
    return EvalResult(
        value=prefactor * series.total,
        abs_err_estimate=prefactor * series.error,
        method=EvalMethod.HFOX_SERIES,
    )


def series_terms(y: float, alpha: float, count: int) -> np.ndarray:
    """Primeros `count` términos con signo (para comparar con la serie de residuos genérica)"""
    k = np.arange(count)
    with np.errstate(divide="ignore"):
        log_terms = special.gammaln((2 * k + 1) / alpha) - special.gammaln(2 * k + 1) + 2 * k * np.log(y)
    return np.where(k % 2 == 0, 1.0, -1.0) * np.exp(log_terms)
