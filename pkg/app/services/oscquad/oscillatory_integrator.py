"""
Cuadratura oscilatoria semi-infinita
∫₀^∞ p^s·e^(−a·p^α)·K(p·r) dp partiendo en los ceros de K(p·r):
primer panel adaptativo (scipy.integrate.quad con peso algebraico en p = 0),
paneles siguientes con Gauss–Legendre de orden 31 + una bisección, y aceleración
de Aitken iterada sobre las sumas parciales alternantes.
"""

import logging
import math
import warnings
from typing import Callable, Optional

import numpy as np
from scipy import integrate as sp_integrate

from app.schemas.oscquad_schema import OscIntegrand, QuadResult
from app.services.oscquad.kernels import KernelFactory, OscillatoryKernel
from app.settings import get_settings
from app.utils.constants import DEFAULT_TOL, R_MIN, KernelType
from app.utils.exceptions import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

GAUSS_ORDER = 31
GAUSS_NODES, GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(GAUSS_ORDER)
PANEL_BLOCK = 16
# e^(−40) ≈ 4e−18: más allá de a·p^α = 40 la envolvente es despreciable
ENVELOPE_CUTOFF = 40.0
MIN_PANELS_FOR_EXTRAPOLATION = 6
QUAD_LIMIT = 200
FIRST_PANEL_GROWTH = 8.0


def _quad(func: Callable, low: float, high: float, tol: float, **kwargs) -> tuple[float, float]:
    """scipy quad que registra los avisos de integración en el log en lugar de imprimirlos"""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", sp_integrate.IntegrationWarning)
        value, error = sp_integrate.quad(
            func, low, high, epsabs=tol, epsrel=1e-14, limit=QUAD_LIMIT, **kwargs
        )
    for warning in caught:
        logger.warning(f"⚠️ quad en [{low:.4g}, {high:.4g}]: {str(warning.message).splitlines()[0]}")
    return float(value), float(error)


def integrate_plain(alpha: float, a: float, weight_power: float, tol: float = DEFAULT_TOL) -> QuadResult:
    """
    Ruta no oscilatoria ∫₀^∞ p^s·e^(−a·p^α) dp

    Con u = a·p^α la integral queda (1/α)·a^(−c)·∫₀^∞ u^(c−1) e^(−u) du, c = (s+1)/α,
    integrada con peso algebraico en [0, 1] y adaptativa en [1, ∞).

    Raises:
        DomainError: Si (s+1)/α ≤ 0 (integral divergente)
    """
    exponent = (weight_power + 1.0) / alpha
    if exponent <= 0.0:
        raise DomainError(f"∫ p^{weight_power:g} e^(−a p^α) dp diverge en p = 0")

    prefactor = a ** (-exponent) / alpha
    local_tol = 0.5 * tol / prefactor
    head, head_err = _quad(lambda u: math.exp(-u), 0.0, 1.0, local_tol, weight="alg", wvar=(exponent - 1.0, 0.0))
    body, body_err = _quad(lambda u: u ** (exponent - 1.0) * math.exp(-u), 1.0, np.inf, local_tol)
    return QuadResult(
        value=prefactor * (head + body),
        abs_err_estimate=prefactor * (head_err + body_err),
        panels_used=1,
    )


def _envelope_cutoff(spec: OscIntegrand) -> float:
    """p a partir del cual p^s·e^(−a p^α) < e^(−40)"""
    p = (ENVELOPE_CUTOFF / spec.a) ** (1.0 / spec.alpha)
    for _ in range(2):
        growth = max(spec.weight_power, 0.0) * math.log(max(p, 1.0))
        p = ((ENVELOPE_CUTOFF + growth) / spec.a) ** (1.0 / spec.alpha)
    return p


def _envelope_peak(spec: OscIntegrand) -> float:
    """Máximo de p^s·e^(−a p^α) (0 si s ≤ 0)"""
    if spec.weight_power <= 0.0:
        return 0.0
    return (spec.weight_power / (spec.a * spec.alpha)) ** (1.0 / spec.alpha)


def _small_frequency(spec: OscIntegrand, kernel: OscillatoryKernel, tol: float) -> QuadResult:
    """r < R_MIN: K(p·r) ≈ c·(p·r)^λ reduce la integral a la ruta no oscilatoria"""
    power = kernel.leading_power
    if spec.r == 0.0:
        if power > 0.0:
            return QuadResult(value=0.0, abs_err_estimate=0.0, panels_used=1)
        if power < 0.0:
            raise DomainError("La integral diverge en r = 0 para ν < 0")

    scale = kernel.small_argument_coefficient() * spec.r ** power
    plain = integrate_plain(spec.alpha, spec.a, spec.weight_power + power, tol / max(scale, 1e-300))
    return QuadResult(
        value=scale * plain.value,
        abs_err_estimate=scale * plain.abs_err_estimate,
        panels_used=1,
    )


def _first_panel(spec: OscIntegrand, kernel: OscillatoryKernel, upper: float, tol: float) -> tuple[float, float]:
    """
    ∫₀^upper subdividido geométricamente desde el ancho de la envolvente

    El primer subintervalo absorbe p^(s+λ) en el peso algebraico de QUADPACK;
    el resto de la singularidad (e^(−a p^α) con α no entero) la resuelve la bisección adaptativa.
    """
    s, alpha, a, r = spec.weight_power, spec.alpha, spec.a, spec.r
    power = s + kernel.leading_power
    scale = r ** kernel.leading_power

    def regular(p: float) -> float:
        return scale * math.exp(-a * p ** alpha) * float(kernel.regular_part(np.asarray(p * r)))

    def full(p: float) -> float:
        return p ** s * math.exp(-a * p ** alpha) * float(kernel.evaluate(np.asarray(p * r)))

    edge = min(upper, a ** (-1.0 / alpha))
    edges = [0.0, edge]
    while edges[-1] < upper:
        edges.append(min(upper, edges[-1] * FIRST_PANEL_GROWTH))

    local_tol = tol / len(edges)
    if power != 0.0:
        value, error = _quad(regular, 0.0, edges[1], local_tol, weight="alg", wvar=(power, 0.0))
    else:
        value, error = _quad(regular, 0.0, edges[1], local_tol)
    for low, high in zip(edges[1:-1], edges[2:]):
        piece, piece_err = _quad(full, low, high, local_tol)
        value += piece
        error += piece_err
    return value, error


def _gauss_panels(func: Callable[[np.ndarray], np.ndarray], low: np.ndarray, high: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Gauss–Legendre de orden 31 sobre cada panel y sobre sus dos mitades

    Returns:
        (valor refinado, |refinado − grueso|) por panel
    """
    half = 0.5 * (high - low)
    mid = 0.5 * (high + low)
    nodes = mid[:, None] + half[:, None] * GAUSS_NODES[None, :]
    coarse = (func(nodes) @ GAUSS_WEIGHTS) * half

    quarter = 0.5 * half
    left = (low + quarter)[:, None] + quarter[:, None] * GAUSS_NODES[None, :]
    right = (high - quarter)[:, None] + quarter[:, None] * GAUSS_NODES[None, :]
    fine = ((func(left) + func(right)) @ GAUSS_WEIGHTS) * quarter
    return fine, np.abs(fine - coarse)


def iterated_aitken(partial_sums: np.ndarray, depth: int) -> tuple[float, float]:
    """
    Aceleración Δ² de Aitken iterada sobre una sucesión de sumas parciales

    Returns:
        (estimación, |diferencia entre las dos últimas entradas de la columna más profunda|)
    """
    column = np.asarray(partial_sums, dtype=np.float64)
    previous = column
    level = 0
    while column.size >= 3 and level < depth:
        forward = column[2:] - column[1:-1]
        backward = column[1:-1] - column[:-2]
        curvature = forward - backward
        with np.errstate(divide="ignore", invalid="ignore"):
            accelerated = column[2:] - forward * forward / curvature
        accelerated = np.where(np.isfinite(accelerated) & (curvature != 0.0), accelerated, column[2:])
        previous, column = column, accelerated
        level += 1

    if column.size >= 2:
        return float(column[-1]), float(abs(column[-1] - column[-2]))
    return float(column[-1]), float(abs(column[-1] - previous[-1]))


def integrate(
        spec: OscIntegrand,
        tol: float = DEFAULT_TOL,
        panel_budget: Optional[int] = None,
        extrapolation_depth: Optional[int] = None,
) -> QuadResult:
    """
    ∫₀^∞ p^s·e^(−a·p^α)·K(p·r) dp

    Args:
        spec: Integrando (núcleo coseno, seno o Bessel)
        tol: Tolerancia absoluta objetivo
        panel_budget: Máximo de paneles (default: Settings.panel_budget)
        extrapolation_depth: Niveles de Aitken (default: Settings.extrapolation_depth)

    Returns:
        QuadResult con abs_err_estimate ≤ tol

    Raises:
        DomainError: tol no positiva o integral divergente
        ConvergenceError: Presupuesto agotado; lleva la mejor estimación
    """
    if not (tol > 0.0):
        raise DomainError("tol debe ser positiva")
    settings = get_settings()
    budget = panel_budget or settings.panel_budget
    depth = extrapolation_depth or settings.extrapolation_depth
    kernel = KernelFactory.create(spec)

    if spec.r < R_MIN:
        return _small_frequency(spec, kernel, tol)

    cutoff = _envelope_cutoff(spec)
    peak = _envelope_peak(spec)
    boundaries = kernel.zeros(budget + 1) / spec.r

    head, head_err = _first_panel(spec, kernel, min(boundaries[0], cutoff), 0.25 * tol)
    if boundaries[0] >= cutoff:
        return _finish(spec, head, head_err, 1, tol)

    def integrand(p: np.ndarray) -> np.ndarray:
        return np.power(p, spec.weight_power) * np.exp(-spec.a * np.power(p, spec.alpha)) * kernel.evaluate(p * spec.r)

    partial_sums = [head]
    panel_error = head_err
    previous_estimate: Optional[float] = None
    estimate, estimate_err = head, math.inf
    index = 0
    while index < budget - 1:
        stop = min(index + PANEL_BLOCK, budget - 1)
        low, high = boundaries[index:stop], boundaries[index + 1:stop + 1]
        contributions, errors = _gauss_panels(integrand, low, high)
        panel_error += float(errors.sum())
        partial_sums.extend(partial_sums[-1] + np.cumsum(contributions))
        index = stop
        panels = index + 1

        if high[-1] >= cutoff:
            return _finish(spec, partial_sums[-1], panel_error, panels, tol)

        past_peak = low[-1] >= peak
        tail_terms = np.abs(contributions[-2:])
        if past_peak and np.all(tail_terms <= 0.01 * tol):
            return _finish(spec, partial_sums[-1], panel_error + float(tail_terms[-1]), panels, tol)

        if past_peak and index >= MIN_PANELS_FOR_EXTRAPOLATION:
            window = np.asarray(partial_sums[-(2 * depth + 1):])
            estimate, estimate_err = iterated_aitken(window, depth)
            if previous_estimate is not None:
                drift = abs(estimate - previous_estimate)
                total = max(estimate_err, drift) + panel_error
                if total <= tol:
                    return _finish(spec, estimate, total, panels, tol)
            previous_estimate = estimate

    best = estimate if previous_estimate is not None else partial_sums[-1]
    raise ConvergenceError(
        f"oscquad no convergió con {budget} paneles (α={spec.alpha:g}, a={spec.a:g}, r={spec.r:g})",
        best_estimate=best,
        abs_err_estimate=estimate_err + panel_error,
    )


def _finish(spec: OscIntegrand, value: float, error: float, panels: int, tol: float) -> QuadResult:
    if error > tol:
        raise ConvergenceError(
            f"Error estimado {error:.3g} supera tol={tol:.3g} (r={spec.r:g})",
            best_estimate=value,
            abs_err_estimate=error,
        )
    logger.debug(f"oscquad {spec.kernel.value}: r={spec.r:g} paneles={panels} err={error:.2g}")
    return QuadResult(value=value, abs_err_estimate=error, panels_used=panels)


def integrate_sine(
        spec: OscIntegrand,
        tol: float = DEFAULT_TOL,
        panel_budget: Optional[int] = None,
        extrapolation_depth: Optional[int] = None,
) -> QuadResult:
    """
    Igual que integrate con núcleo sin(p·r)

    Raises:
        DomainError: Si r = 0
    """
    if spec.r <= 0.0:
        raise DomainError("integrate_sine requiere r > 0")
    sine_spec = OscIntegrand(**{**spec.model_dump(), "kernel": KernelType.SINE, "nu": None})
    return integrate(sine_spec, tol, panel_budget, extrapolation_depth)
