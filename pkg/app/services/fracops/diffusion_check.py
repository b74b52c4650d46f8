"""
Verificación de la ecuación de difusión fraccionaria
∂P/∂t = −(−∇²)^(α/2) P en unidades reducidas (c = 1, ∂a/∂t = 1). El operador
espacial se evalúa del lado de Fourier:

    ∂P/∂t = −(1/π)∫₀^∞ p^α·e^(−a p^α)·cos(p·x) dp
"""

import logging
import math
from typing import Iterable, NamedTuple, Optional

from app.schemas.core_schema import StableParams
from app.schemas.oscquad_schema import OscIntegrand
from app.schemas.propagator_schema import DensityQuery
from app.services.oscquad import integrate
from app.services.propagator import density_1d
from app.utils.constants import KernelType
from app.utils.exceptions import DomainError

logger = logging.getLogger(__name__)

# Tolerancia de las densidades en la diferencia finita (error / δ acotado)
RESIDUAL_DENSITY_TOL = 1e-12


class ResidualRow(NamedTuple):
    x: float
    fd_dt: float
    quad_dt: float
    abs_diff: float


def dPdt_quadrature(x: float, params: StableParams, tol: float = RESIDUAL_DENSITY_TOL) -> float:
    """
    Derivada temporal del propagador en (x, a)

    Raises:
        ConvergenceError: Propagado desde oscquad
    """
    spec = OscIntegrand(
        alpha=params.alpha,
        a=params.a,
        weight_power=params.alpha,
        kernel=KernelType.COSINE,
        r=abs(x),
    )
    quad = integrate(spec, math.pi * tol)
    return -quad.value / math.pi


def dPdt_finite_difference(x: float, params: StableParams, delta: float, tol: float = RESIDUAL_DENSITY_TOL) -> float:
    """(P(x; a+δ) − P(x; a−δ)) / (2δ) con density_1d"""
    if not (0.0 < delta < params.a):
        raise DomainError("δ debe cumplir 0 < δ < a")

    def density(a: float) -> float:
        shifted = StableParams(alpha=params.alpha, a=a)
        return density_1d(DensityQuery(r=abs(x), n=1, params=shifted, tol=tol)).value

    return (density(params.a + delta) - density(params.a - delta)) / (2.0 * delta)


def diffusion_residual_table(
        params: StableParams,
        x_grid: Iterable[float],
        delta: float,
        tol: Optional[float] = None,
) -> list[ResidualRow]:
    """Filas (x, fd_dt, quad_dt, |fd_dt − quad_dt|) para cada punto de la malla"""
    tol = tol or RESIDUAL_DENSITY_TOL
    rows = []
    for x in x_grid:
        fd_dt = dPdt_finite_difference(x, params, delta, tol)
        quad_dt = dPdt_quadrature(x, params, tol)
        rows.append(ResidualRow(x, fd_dt, quad_dt, abs(fd_dt - quad_dt)))
    return rows


def diffusion_residual(
        params: StableParams,
        x_grid: Iterable[float],
        delta: float,
        tol: Optional[float] = None,
) -> float:
    """
    sup_x |∂P/∂t por diferencia finita en a − ∂P/∂t por cuadratura|

    Args:
        params: α y a
        x_grid: Puntos de evaluación
        delta: Paso de la diferencia central en a (δ > 0)
        tol: Tolerancia de cada densidad

    Returns:
        Residuo en norma del supremo
    """
    rows = diffusion_residual_table(params, x_grid, delta, tol)
    if not rows:
        raise DomainError("La malla de x está vacía")
    residual = max(row.abs_diff for row in rows)
    logger.info(f"Residuo de difusión α={params.alpha:g}: {residual:.3e} en {len(rows)} puntos")
    return residual
