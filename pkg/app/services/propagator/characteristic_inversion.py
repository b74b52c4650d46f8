"""
Propagador por inversión de la función característica e^(−a|p|^α)
Ruta hamiltoniana en unidades reducidas: 1D (coseno), integración por partes (seno),
n-D (Hankel con J_{n/2−1}), forma derivada 3D y función de distribución 1D.
"""

import logging
import math

from app.schemas.core_schema import EvalResult, StableParams
from app.schemas.oscquad_schema import OscIntegrand
from app.schemas.propagator_schema import DensityQuery
from app.services.oscquad import integrate, integrate_sine
from app.services.propagator.closed_forms import peak_value_nd
from app.utils.constants import DEFAULT_TOL, R_MIN, EvalMethod, KernelType
from app.utils.exceptions import DomainError

logger = logging.getLogger(__name__)

EPS = 2.220446049250313e-16


def _require_dimension(q: DensityQuery, n: int, operation: str) -> None:
    if q.n != n:
        raise DomainError(f"{operation} requiere n = {n} (llegó n = {q.n})")


def _result(value: float, error: float, prefactor: float, method: EvalMethod = EvalMethod.QUADRATURE) -> EvalResult:
    """Escala valor y error por el prefactor; recorta a 0 los negativos de redondeo"""
    return EvalResult(
        value=max(prefactor * value, 0.0),
        abs_err_estimate=abs(prefactor) * error,
        method=method,
    )


def density_1d(q: DensityQuery) -> EvalResult:
    """
    P(r) = (1/π)∫₀^∞ cos(p·r)·e^(−a p^α) dp

    Args:
        q: Consulta con n = 1

    Returns:
        EvalResult (method = quadrature) con abs_err_estimate ≤ q.tol

    Raises:
        DomainError: Si n ≠ 1
        ConvergenceError: Propagado desde oscquad
    """
    _require_dimension(q, 1, "density_1d")
    params = q.params
    spec = OscIntegrand(alpha=params.alpha, a=params.a, weight_power=0.0, kernel=KernelType.COSINE, r=q.r)
    quad = integrate(spec, math.pi * q.tol)
    return _result(quad.value, quad.abs_err_estimate, 1.0 / math.pi)


def density_1d_ibp(q: DensityQuery) -> EvalResult:
    """
    Forma integrada por partes (cambio ξ = p·r):

        P(r) = (aα / (π r^(α+1))) ∫₀^∞ ξ^(α−1)·sin ξ·e^(−a(ξ/r)^α) dξ

    Raises:
        DomainError: Si r = 0 (fórmula singular) o n ≠ 1
    """
    _require_dimension(q, 1, "density_1d_ibp")
    if q.r <= 0.0:
        raise DomainError("density_1d_ibp no está definida en r = 0")

    alpha, a, r = q.params.alpha, q.params.a, q.r
    prefactor = a * alpha / (math.pi * r ** (alpha + 1.0))
    spec = OscIntegrand(
        alpha=alpha,
        a=a / r ** alpha,
        weight_power=alpha - 1.0,
        kernel=KernelType.SINE,
        r=1.0,
    )
    quad = integrate_sine(spec, q.tol / prefactor)
    return _result(quad.value, quad.abs_err_estimate, prefactor)


def density_nd(q: DensityQuery) -> EvalResult:
    """
    P_n(r) = (2π)^(−n/2)·r^(−(n/2−1))·∫₀^∞ p^(n/2)·e^(−a p^α)·J_{n/2−1}(p·r) dp

    En r < R_MIN se usa la forma cerrada del pico (method = peak).
    """
    params = q.params
    n = q.n
    if q.r < R_MIN:
        value = peak_value_nd(n, params)
        return EvalResult(value=value, abs_err_estimate=8.0 * EPS * value, method=EvalMethod.PEAK)

    order = 0.5 * n - 1.0
    prefactor = (2.0 * math.pi) ** (-0.5 * n) * q.r ** (-order)
    spec = OscIntegrand(
        alpha=params.alpha,
        a=params.a,
        weight_power=0.5 * n,
        kernel=KernelType.BESSEL,
        nu=order,
        r=q.r,
    )
    quad = integrate(spec, q.tol / prefactor)
    return _result(quad.value, quad.abs_err_estimate, prefactor)


def density_3d_derivative(q: DensityQuery) -> EvalResult:
    """
    P₃(r) = (1/(2π² r)) ∫₀^∞ p·sin(p·r)·e^(−a p^α) dp

    Raises:
        DomainError: Si r = 0 o n ≠ 3
    """
    _require_dimension(q, 3, "density_3d_derivative")
    if q.r <= 0.0:
        raise DomainError("density_3d_derivative no está definida en r = 0")

    prefactor = 1.0 / (2.0 * math.pi ** 2 * q.r)
    spec = OscIntegrand(alpha=q.params.alpha, a=q.params.a, weight_power=1.0, kernel=KernelType.SINE, r=q.r)
    quad = integrate_sine(spec, q.tol / prefactor)
    return _result(quad.value, quad.abs_err_estimate, prefactor)


def cdf_1d(x: float, params: StableParams, tol: float = DEFAULT_TOL) -> float:
    """
    F(x) = 1/2 + (1/π)∫₀^∞ sin(p·x)·e^(−a p^α)/p dp

    Simétrica por construcción: F(−x) = 1 − F(x), F(0) = 1/2.
    """
    if x == 0.0:
        return 0.5
    spec = OscIntegrand(alpha=params.alpha, a=params.a, weight_power=-1.0, kernel=KernelType.SINE, r=abs(x))
    quad = integrate_sine(spec, math.pi * tol)
    half_mass = quad.value / math.pi
    value = 0.5 + math.copysign(half_mass, x)
    return min(max(value, 0.0), 1.0)
