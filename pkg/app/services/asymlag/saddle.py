"""
Ruta lagrangiana y de punto de silla
Acción clásica de la partícula libre fraccionaria, camino clásico, punto de silla
de h(z) = i·z − ρ·z^α y la densidad de descenso más pronunciado (continuación euclídea).
"""

import cmath
import logging
import math

from app.schemas.asymlag_schema import SaddleInput
from app.schemas.core_schema import EvalResult, StableParams
from app.utils.constants import EvalMethod
from app.utils.exceptions import DomainError

logger = logging.getLogger(__name__)

EPS = 2.220446049250313e-16


def classical_action_constant(alpha: float) -> float:
    """
    f(α) = (α−1)·α^(−α/(α−1))

    R_α fijado para que el exponente lagrangiano coincida con el de descenso
    hamiltoniano; en α = 2 reproduce x²/(4t).

    Raises:
        DomainError: α ≤ 1 o α > 2
    """
    if not (1.0 < alpha <= 2.0):
        raise DomainError(f"f(α) requiere 1 < α ≤ 2 (llegó {alpha})")
    return (alpha - 1.0) * alpha ** (-alpha / (alpha - 1.0))


def classical_path(t: float, x_i: float, x_f: float) -> float:
    """
    x_cl(t) = x_i + t·(x_i − x_f), t ∈ [−1, 0]

    Solución lineal de Euler–Lagrange: x_cl(0) = x_i, x_cl(−1) = x_f.
    """
    if not (-1.0 <= t <= 0.0):
        raise DomainError("t debe estar en [−1, 0]")
    return x_i + t * (x_i - x_f)


def classical_action(x: float, params: StableParams) -> float:
    """S_E = f(α)·a^(−1/(α−1))·|x|^(α/(α−1)) sobre el camino clásico"""
    alpha = params.alpha
    f = classical_action_constant(alpha)
    return f * params.a ** (-1.0 / (alpha - 1.0)) * abs(x) ** (alpha / (alpha - 1.0))


def saddle_phase(s: SaddleInput) -> float:
    """θ = π/(2(α−1)), fase de z₀ sobre la hoja en que se construye"""
    return 0.5 * math.pi / (s.alpha - 1.0)


def saddle_modulus(s: SaddleInput) -> float:
    """|z₀| = (ρα)^(−1/(α−1))"""
    return (s.rho * s.alpha) ** (-1.0 / (s.alpha - 1.0))


def saddle_point(s: SaddleInput) -> complex:
    """
    z₀ = (ρα)^(−1/(α−1))·e^(iπ/(2(α−1)))

    Returns:
        z₀ con h′(z₀) = i − ρα·z₀^(α−1) = 0
    """
    return saddle_modulus(s) * cmath.exp(1j * saddle_phase(s))


def saddle_residual(s: SaddleInput) -> float:
    """
    |h′(z₀)| con z₀^(α−1) evaluado sobre la hoja de fase θ

    Para α ≥ 3/2 (θ ≤ π) coincide con la rama principal.
    """
    power = saddle_modulus(s) ** (s.alpha - 1.0) * cmath.exp(1j * (s.alpha - 1.0) * saddle_phase(s))
    return abs(1j - s.rho * s.alpha * power)


def saddle_exponent(s: SaddleInput) -> complex:
    """h(z₀) = i·z₀·(1 − 1/α); |h(z₀)| = (1 − 1/α)(ρα)^(−1/(α−1))"""
    return 1j * saddle_point(s) * (1.0 - 1.0 / s.alpha)


def saddle_curvature(s: SaddleInput) -> float:
    """|h″(z₀)| = (α−1)·(ρα)^(1/(α−1))"""
    return (s.alpha - 1.0) * (s.rho * s.alpha) ** (1.0 / (s.alpha - 1.0))


def saddle_density(x: float, params: StableParams) -> EvalResult:
    """
    Aproximación de punto de silla del propagador

        P ≈ (2π)^(−1/2)·f^(1/2)·a^(−1/(2(α−1)))·(√α/(α−1))·|x|^((2−α)/(2(α−1)))
            ·exp(−f·a^(−1/(α−1))·|x|^(α/(α−1)))

    Sin estimación de error (abs_err_estimate = inf) salvo en α = 2, donde es exacta.
    En x = 0 devuelve 0 con degenerate = True.

    Raises:
        DomainError: α fuera de (1, 2]
    """
    alpha, a = params.alpha, params.a
    f = classical_action_constant(alpha)

    if x == 0.0:
        logger.debug("saddle_density: x = 0 es degenerado")
        return EvalResult(value=0.0, abs_err_estimate=math.inf, method=EvalMethod.SADDLE, degenerate=True)

    distance = abs(x)
    prefactor = (
        (2.0 * math.pi) ** -0.5
        * math.sqrt(f)
        * a ** (-0.5 / (alpha - 1.0))
        * math.sqrt(alpha) / (alpha - 1.0)
        * distance ** ((2.0 - alpha) / (2.0 * (alpha - 1.0)))
    )
    value = prefactor * math.exp(-classical_action(x, params))
    error = 8.0 * EPS * value if alpha == 2.0 else math.inf
    return EvalResult(value=value, abs_err_estimate=error, method=EvalMethod.SADDLE)
