"""
Evaluación de la función H de Fox
Serie de residuos en los polos de Γ(b_j − B_j s) y cuadratura directa de la integral
de Mellin–Barnes sobre la recta vertical Re s = σ.
"""

import logging
import math
from typing import Optional

import numpy as np
from scipy import integrate as sp_integrate
from scipy import special

from app.schemas.core_schema import EvalResult
from app.schemas.hfox_schema import POLE_COLLISION_TOL, HFoxSpec
from app.services.hfox.specs import HFoxSpecFactory
from app.services.specfun import log_gamma_complex
from app.settings import get_settings
from app.utils.constants import EvalMethod
from app.utils.exceptions import ConvergenceError, DomainError, NumericOverflowError, UnsupportedError

logger = logging.getLogger(__name__)

EPS = 2.220446049250313e-16
SERIES_STOP = 1e-16
LOG_OVERFLOW = 700.0
CONTOUR_START_T = 8.0
CONTOUR_MAX_T = 4096.0
CONTOUR_DECAY = 1e-16


def convergence_parameter(spec: HFoxSpec) -> float:
    """μ = Σ B_j − Σ A_i; μ > 0 ⇒ la serie de residuos converge para todo z > 0"""
    return sum(weight for _, weight in spec.lower) - sum(weight for _, weight in spec.upper)


def _is_gamma_pole(x: float) -> bool:
    return x <= 0.0 and abs(x - round(x)) < POLE_COLLISION_TOL


def _log_rest(spec: HFoxSpec, j: int, s: float) -> tuple[float, float]:
    """
    (log|R_j(s)|, signo) del integrando χ(s) sin el factor Γ(b_j − B_j s)

    Un Γ del denominador en su polo anula el término (signo 0).
    """
    log_mag = 0.0
    sign = 1.0
    numerators = [b - weight * s for index, (b, weight) in enumerate(spec.lower[:spec.m]) if index != j]
    numerators += [1.0 - a + weight * s for a, weight in spec.upper[:spec.n]]
    denominators = [1.0 - b + weight * s for b, weight in spec.lower[spec.m:]]
    denominators += [a - weight * s for a, weight in spec.upper[spec.n:]]

    for argument in numerators:
        if _is_gamma_pole(argument):
            raise UnsupportedError(f"Polo de orden superior en s = {s:.6g}")
        log_mag += special.gammaln(argument)
        sign *= special.gammasgn(argument)
    for argument in denominators:
        if _is_gamma_pole(argument):
            return -math.inf, 0.0
        log_mag -= special.gammaln(argument)
        sign *= special.gammasgn(argument)
    return log_mag, sign


def _check_simple_poles(spec: HFoxSpec, depth: int) -> None:
    """Los polos b de factores distintos no deben coincidir"""
    if spec.m < 2:
        return
    poles = sorted(
        ((b + k) / weight, j)
        for j, (b, weight) in enumerate(spec.lower[:spec.m])
        for k in range(depth)
    )
    for (left, j_left), (right, j_right) in zip(poles, poles[1:]):
        if j_left != j_right and abs(right - left) < POLE_COLLISION_TOL:
            raise UnsupportedError(f"Polos dobles en s = {left:.6g}: solo se admiten polos simples")


def residue_terms(spec: HFoxSpec, z: float, count: int) -> np.ndarray:
    """
    Matriz (count × m) de términos de residuo

    término_{k,j} = (−1)^k/(k!·B_j) · R_j(s_jk) · z^(s_jk),   s_jk = (b_j + k)/B_j
    """
    if z <= 0.0:
        raise DomainError("La serie de residuos requiere z > 0")
    _check_simple_poles(spec, count)
    log_z = math.log(z)
    return np.vstack([residue_terms_row(spec, log_z, k) for k in range(count)])


def hfox_eval_series(spec: HFoxSpec, z: float, max_terms: Optional[int] = None) -> EvalResult:
    """
    H(z) como suma de residuos en los polos de Γ(b_j − B_j s), j ≤ m

    Se detiene cuando dos índices consecutivos aportan < 1e−16·|suma|. Si μ ≤ 0
    la serie se trata como asintótica y se trunca en su término mínimo.

    Returns:
        EvalResult (method = hfox_series); error = truncación + redondeo acumulado

    Raises:
        DomainError: z ≤ 0
        UnsupportedError: Polos b de orden superior
        ConvergenceError: Tope de términos sin converger o desbordamiento de la serie
    """
    if z <= 0.0:
        raise DomainError("hfox_eval_series requiere z > 0")
    if spec.m == 0:
        raise DomainError("Sin factores Γ(b_j − B_j s) no hay polos que sumar (m = 0)")

    cap = max_terms or get_settings().series_max_terms
    _check_simple_poles(spec, cap)
    asymptotic = convergence_parameter(spec) <= 0.0
    log_z = math.log(z)

    total = 0.0
    largest = 0.0
    previous = math.inf
    smallest = math.inf
    last_nonzero = math.inf
    small_run = 0
    for k in range(cap):
        try:
            row = residue_terms_row(spec, log_z, k)
        except NumericOverflowError as error:
            raise ConvergenceError(f"Serie divergente para z={z:g}: {error}", best_estimate=total) from error
        magnitude = float(np.abs(row).sum())

        if asymptotic and magnitude > 0.0 and k > 2 and magnitude > last_nonzero and last_nonzero <= smallest:
            # Truncación óptima antes del primer término creciente
            logger.info(f"hfox: serie asintótica truncada en k={k} (z={z:g})")
            return _series_result(total, last_nonzero, largest, k)

        total += float(row.sum())
        largest = max(largest, magnitude)
        if magnitude > 0.0:
            smallest = min(smallest, magnitude)
            last_nonzero = magnitude
        small_run = small_run + 1 if magnitude < SERIES_STOP * abs(total) else 0
        if small_run >= 2:
            return _series_result(total, magnitude + previous, largest, k + 1)
        previous = magnitude

    raise ConvergenceError(
        f"La serie de residuos no convergió en {cap} términos (z={z:g})",
        best_estimate=total,
        abs_err_estimate=previous,
    )


def residue_terms_row(spec: HFoxSpec, log_z: float, k: int) -> np.ndarray:
    """Términos de índice k para cada factor j ≤ m"""
    row = np.zeros(spec.m)
    log_factorial = special.gammaln(k + 1.0)
    for j, (b, weight) in enumerate(spec.lower[:spec.m]):
        s = (b + k) / weight
        log_mag, sign = _log_rest(spec, j, s)
        if sign == 0.0:
            continue
        log_term = log_mag + s * log_z - log_factorial - math.log(weight)
        if log_term > LOG_OVERFLOW:
            raise NumericOverflowError(f"Término de residuo desborda en k = {k}")
        row[j] = (-1.0) ** k * sign * math.exp(log_term)
    return row


def _series_result(total: float, truncation: float, largest: float, terms: int) -> EvalResult:
    roundoff = 4.0 * EPS * largest * math.sqrt(terms)
    return EvalResult(value=total, abs_err_estimate=truncation + roundoff, method=EvalMethod.HFOX_SERIES)


def _validate_sigma(spec: HFoxSpec, sigma: Optional[float]) -> float:
    left, right = spec.separating_gap()
    if sigma is None:
        sigma = spec.default_sigma()
        if sigma is None:
            raise DomainError("No existe recta vertical que separe los polos")
    if not (left < sigma < right):
        raise DomainError(f"σ = {sigma:g} no separa los polos (hueco ({left:g}, {right:g}))")
    return float(sigma)


def _log_integrand(spec: HFoxSpec, s: complex, log_z: float) -> Optional[complex]:
    """log(χ(s)·z^s) o None si un Γ del denominador está en su polo"""
    numerators = [b - weight * s for b, weight in spec.lower[:spec.m]]
    numerators += [1.0 - a + weight * s for a, weight in spec.upper[:spec.n]]
    denominators = [1.0 - b + weight * s for b, weight in spec.lower[spec.m:]]
    denominators += [a - weight * s for a, weight in spec.upper[spec.n:]]

    if any(w.imag == 0.0 and _is_gamma_pole(w.real) for w in denominators):
        return None
    value = sum(log_gamma_complex(w) for w in numerators) - sum(log_gamma_complex(w) for w in denominators)
    return value + s * log_z


def hfox_eval_contour(
        spec: HFoxSpec,
        z: float,
        contour_sigma: Optional[float] = None,
        truncation_T: Optional[float] = None,
        tol: float = 1e-13,
) -> EvalResult:
    """
    H(z) = (1/π)∫₀^∞ Re[χ(σ+it)·z^(σ+it)] dt

    Args:
        spec: Función H
        z: Argumento > 0
        contour_sigma: Abscisa de la recta (default: punto medio del hueco separador)
        truncation_T: Corte en t (default: adaptativo hasta |integrando| < 1e−16·|suma|)
        tol: Tolerancia absoluta por tramo de cuadratura

    Returns:
        EvalResult (method = hfox_contour); error = cuadratura + cola truncada

    Raises:
        DomainError: σ no separa los polos, z ≤ 0 o T ≤ 0
        NumericOverflowError: El integrando desborda
        ConvergenceError: El integrando no decae antes de CONTOUR_MAX_T
    """
    if z <= 0.0:
        raise DomainError("hfox_eval_contour requiere z > 0")
    if truncation_T is not None and truncation_T <= 0.0:
        raise DomainError("truncation_T debe ser positivo")
    sigma = _validate_sigma(spec, contour_sigma)
    log_z = math.log(z)

    def log_magnitude(t: float) -> float:
        value = _log_integrand(spec, complex(sigma, t), log_z)
        return -math.inf if value is None else value.real

    def integrand(t: float) -> float:
        value = _log_integrand(spec, complex(sigma, t), log_z)
        if value is None:
            return 0.0
        if value.real > LOG_OVERFLOW:
            raise NumericOverflowError(f"El integrando de Mellin–Barnes desborda en t = {t:g}")
        return math.exp(value.real) * math.cos(value.imag) / math.pi

    total = 0.0
    quad_error = 0.0
    low = 0.0
    high = truncation_T if truncation_T is not None else CONTOUR_START_T
    chunk = CONTOUR_START_T
    while True:
        edges = np.arange(low, high, chunk).tolist() + [high]
        for left, right in zip(edges[:-1], edges[1:]):
            piece, piece_err = sp_integrate.quad(integrand, left, right, epsabs=tol, epsrel=1e-13, limit=400)
            total += piece
            quad_error += piece_err
        magnitude = math.exp(log_magnitude(high)) / math.pi
        if truncation_T is not None or magnitude < CONTOUR_DECAY * max(abs(total), 1e-300):
            break
        if high >= CONTOUR_MAX_T:
            raise ConvergenceError(
                f"El integrando de contorno no decae antes de t = {CONTOUR_MAX_T:g}",
                best_estimate=total,
            )
        low, high = high, 2.0 * high

    tail = _tail_estimate(log_magnitude, high)
    logger.debug(f"hfox contorno: z={z:g} σ={sigma:g} T={high:g} cola={tail:.2g}")
    return EvalResult(value=total, abs_err_estimate=quad_error + tail, method=EvalMethod.HFOX_CONTOUR)


def _tail_estimate(log_magnitude, t_end: float) -> float:
    """∫_T^∞ |integrando| suponiendo decaimiento exponencial local"""
    at_end = log_magnitude(t_end)
    if not math.isfinite(at_end):
        return 0.0
    before = log_magnitude(0.5 * t_end)
    rate = (before - at_end) / (0.5 * t_end)
    if rate <= 0.0:
        return math.exp(at_end) * t_end / math.pi
    return math.exp(at_end) / (math.pi * rate)


def hfox_eval(spec: HFoxSpec, z: float, tol: float = 1e-12) -> EvalResult:
    """Serie de residuos si converge con error ≤ tol; si no, contorno"""
    try:
        series = hfox_eval_series(spec, z)
        if series.abs_err_estimate <= tol:
            return series
        logger.info(f"hfox: error de serie {series.abs_err_estimate:.2g} > tol en z={z:g}; se usa el contorno")
    except (ConvergenceError, UnsupportedError, DomainError) as error:
        logger.info(f"hfox: serie no disponible en z={z:g} ({error}); se usa el contorno")
    return hfox_eval_contour(spec, z)


def hfox_scale_identity_check(spec: HFoxSpec, z: float, k: float) -> float:
    """
    |H(z) − k·H_k(z^k)| con H_k de pesos multiplicados por k

    Returns:
        Discrepancia absoluta entre ambos lados
    """
    if z <= 0.0 or k <= 0.0:
        raise DomainError("Se requiere z > 0 y k > 0")
    lhs = hfox_eval(spec, z)
    rhs = hfox_eval(HFoxSpecFactory.scale_spec(spec, k), z ** k)
    return abs(lhs.value - k * rhs.value)
