"""
Comparaciones estadísticas del muestreador
Estabilidad (KS de dos muestras), KS contra la CDF numérica, índice de cola de Hill,
varianza acumulada y balance de signos.
"""

import logging
import math
from typing import Callable, Iterable, Optional

import numpy as np
from scipy import interpolate, stats

from app.models.sample_batch import SampleBatch
from app.schemas.core_schema import StableParams
from app.services.mcstable.generator import sample
from app.services.propagator import cdf_1d
from app.utils.exceptions import DomainError

logger = logging.getLogger(__name__)

MIN_STABILITY_COUNT = 10_000
# Malla de la CDF: x = w·sinh(t), t ∈ [0, asinh(CDF_GRID_SPAN)]
CDF_GRID_SPAN = 1000.0
CDF_GRID_POINTS = 257


def stability_check(
        alpha: float,
        m: int,
        count: int,
        seed: int,
        norming_exponent: Optional[float] = None,
) -> float:
    """
    Distancia KS entre m^(−1/α)(X₁+…+X_m) y una muestra fresca de X

    Args:
        norming_exponent: Exponente de la normalización (default 1/α); otro valor
            sirve de control negativo

    Returns:
        Estadístico KS de dos muestras
    """
    if m < 2:
        raise DomainError("m debe ser ≥ 2")
    if count < MIN_STABILITY_COUNT:
        raise DomainError(f"count debe ser ≥ {MIN_STABILITY_COUNT}")

    exponent = 1.0 / alpha if norming_exponent is None else norming_exponent
    draws = sample(alpha, 1.0, (m + 1) * count, seed).draws
    sums = draws[: m * count].reshape(count, m).sum(axis=1) * m ** (-exponent)
    fresh = draws[m * count:]
    return float(stats.ks_2samp(sums, fresh).statistic)


def numeric_cdf(params: StableParams, cdf_tol: float) -> Callable[[np.ndarray], np.ndarray]:
    """
    CDF vectorizada de la ley

    α = 2 y α = 1 usan las formas cerradas; el resto interpola con PCHIP los
    valores de cdf_1d sobre una malla en asinh, usando F(−x) = 1 − F(x).
    """
    alpha, a = params.alpha, params.a
    if alpha == 2.0:
        return stats.norm(scale=math.sqrt(2.0 * a)).cdf
    if alpha == 1.0:
        return stats.cauchy(scale=a).cdf

    width = params.width
    knots = np.linspace(0.0, math.asinh(CDF_GRID_SPAN), CDF_GRID_POINTS)
    values = np.array([cdf_1d(width * math.sinh(t), params, cdf_tol) for t in knots])
    spline = interpolate.PchipInterpolator(knots, values, extrapolate=False)

    def cdf(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        t = np.minimum(np.arcsinh(np.abs(x) / width), knots[-1])
        upper = np.clip(spline(t), 0.5, 1.0)
        return np.where(x >= 0.0, upper, 1.0 - upper)

    return cdf


def ks_against_numeric(batch: SampleBatch, cdf_tol: float = 1e-8) -> float:
    """Distancia KS de una muestra contra la CDF de la ley (cdf_1d)"""
    params = StableParams(alpha=batch.alpha, a=batch.a)
    statistic = float(stats.kstest(batch.draws, numeric_cdf(params, cdf_tol)).statistic)
    logger.info(f"KS α={batch.alpha:g} n={batch.count}: {statistic:.5f}")
    return statistic


def hill_tail_index(draws: np.ndarray, fraction: float = 0.01) -> float:
    """
    Estimador de Hill del índice de cola sobre la fracción superior de |draws|

    Returns:
        1/H con H = media de log(|x|_(i)/|x|_(k)), i < k
    """
    if not (0.0 < fraction < 1.0):
        raise DomainError("fraction debe estar en (0, 1)")
    magnitudes = np.sort(np.abs(np.asarray(draws)))[::-1]
    k = int(fraction * magnitudes.size)
    if k < 2:
        raise DomainError("Muy pocas variables para la fracción pedida")
    top = magnitudes[:k]
    return float(1.0 / np.mean(np.log(top / magnitudes[k])))


def running_variance(draws: np.ndarray, prefixes: Iterable[int]) -> np.ndarray:
    """Varianza muestral de los prefijos draws[:n] para cada n"""
    draws = np.asarray(draws)
    sizes = list(prefixes)
    if any(n < 2 or n > draws.size for n in sizes):
        raise DomainError("Cada prefijo debe estar entre 2 y el tamaño de la muestra")
    return np.array([np.var(draws[:n], ddof=1) for n in sizes])


def median_variance_growth(
        alpha: float,
        a: float,
        prefixes: Iterable[int],
        seeds: Iterable[int],
) -> np.ndarray:
    """
    Mediana sobre semillas de la varianza de cada prefijo

    Con α < 2 el segundo momento diverge y la mediana crece con el prefijo;
    una sola semilla no es monótona con probabilidad apreciable.

    Args:
        prefixes: Tamaños de prefijo crecientes; el mayor fija el tamaño de cada lote
        seeds: Semillas independientes (al menos 3)

    Returns:
        Varianza mediana por prefijo
    """
    sizes = sorted(int(n) for n in prefixes)
    seed_list = list(seeds)
    if len(seed_list) < 3:
        raise DomainError("Se necesitan al menos 3 semillas para la mediana")
    table = np.vstack([running_variance(sample(alpha, a, sizes[-1], seed).draws, sizes) for seed in seed_list])
    medians = np.median(table, axis=0)
    logger.debug(f"median_variance_growth α={alpha:g}: {', '.join(f'{v:.4g}' for v in medians)}")
    return medians


def sign_balance(draws: np.ndarray) -> float:
    """Media de sign(draws); 0 ± 3/√n para una ley simétrica"""
    return float(np.mean(np.sign(draws)))
