"""
Propagador 1D como función H de Fox

    P(x) = (1/(α|x|))·H^{1,1}_{2,2}[ |x|/a^(1/α) | (1,1/α),(1,½); (1,1),(1,½) ]

Ruta primaria: la serie de residuos especializada (propagator.density_series), que
coincide término a término con la genérica. Si la cancelación en doble precisión
supera la tolerancia se recurre a la integral de contorno.
"""

import logging
import math

from app.schemas.core_schema import EvalResult, StableParams
from app.services.hfox.mellin_barnes import hfox_eval_contour
from app.services.hfox.specs import HFoxSpecFactory
from app.services.propagator import density_series, peak_value
from app.utils.constants import DEFAULT_TOL, EvalMethod
from app.utils.exceptions import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

EPS = 2.220446049250313e-16


def stable_density_hfox(x: float, params: StableParams, tol: float = DEFAULT_TOL) -> EvalResult:
    """
    Densidad α-estable simétrica por la representación H

    Args:
        x: Desplazamiento
        params: α en (1, 2], a > 0
        tol: Tolerancia absoluta; por encima se cambia de la serie al contorno

    Returns:
        EvalResult con method hfox_series o hfox_contour

    Raises:
        DomainError: α fuera de (1, 2]
        ConvergenceError: Ni la serie ni el contorno alcanzan tol
    """
    alpha = params.alpha
    if not (1.0 < alpha <= 2.0):
        raise DomainError(f"stable_density_hfox requiere 1 < α ≤ 2 (llegó {alpha})")

    if x == 0.0:
        value = peak_value(params)
        return EvalResult(value=value, abs_err_estimate=4.0 * EPS * value, method=EvalMethod.HFOX_SERIES)

    try:
        series = density_series(x, params)
        if series.abs_err_estimate <= tol:
            return series
        logger.info(
            f"hfox: pérdida de precisión en la serie (err={series.abs_err_estimate:.2g}) "
            f"en x={x:g}; serie → contorno"
        )
    except ConvergenceError as error:
        logger.info(f"hfox: serie no convergente en x={x:g} ({error}); serie → contorno")

    result = stable_density_contour(x, params)
    result = result.model_copy(update={"value": max(result.value, 0.0)})
    if result.abs_err_estimate > tol:
        raise ConvergenceError(
            f"hfox: el contorno no alcanza tol={tol:.2g} en x={x:g}",
            best_estimate=result.value,
            abs_err_estimate=result.abs_err_estimate,
        )
    return result


def stable_density_contour(x: float, params: StableParams) -> EvalResult:
    """Ruta de contorno forzada (para comparar rutas en x ≠ 0)"""
    if x == 0.0:
        raise DomainError("La representación H no está definida en x = 0")
    distance = abs(x)
    contour = hfox_eval_contour(HFoxSpecFactory.stable_density_spec(params.alpha), distance / params.width)
    scale = 1.0 / (params.alpha * distance)
    return EvalResult(
        value=scale * contour.value,
        abs_err_estimate=scale * contour.abs_err_estimate,
        method=EvalMethod.HFOX_CONTOUR,
    )
