"""
Formas cerradas del propagador
Pico exacto en el origen (1D y n-D) y los oráculos gaussiano (α = 2) y de Cauchy (α = 1)
"""

import math

from app.schemas.core_schema import StableParams
from app.services.specfun import gamma_real


def peak_value(params: StableParams) -> float:
    """
    P(0) = Γ(1/α) / (π·α·a^(1/α))

    Exacto: en x = 0 el coseno vale 1 y la integral es elemental.
    """
    alpha = params.alpha
    return gamma_real(1.0 / alpha) / (math.pi * alpha * params.a ** (1.0 / alpha))


def peak_value_nd(n: int, params: StableParams) -> float:
    """P_n(0) = Γ(n/α) / (α·2^(n−1)·π^(n/2)·Γ(n/2)·a^(n/α))"""
    alpha = params.alpha
    numerator = gamma_real(n / alpha)
    denominator = alpha * 2.0 ** (n - 1) * math.pi ** (0.5 * n) * gamma_real(0.5 * n) * params.a ** (n / alpha)
    return numerator / denominator


def gaussian_density(r: float, a: float, n: int = 1) -> float:
    """Límite α = 2: (4πa)^(−n/2)·e^(−r²/(4a))"""
    return (4.0 * math.pi * a) ** (-0.5 * n) * math.exp(-r * r / (4.0 * a))


def gaussian_cdf(x: float, a: float) -> float:
    """CDF normal con varianza 2a"""
    return 0.5 * (1.0 + math.erf(x / (2.0 * math.sqrt(a))))


def cauchy_density(x: float, a: float) -> float:
    """α = 1: a / (π(a² + x²))"""
    return a / (math.pi * (a * a + x * x))


def cauchy_cdf(x: float, a: float) -> float:
    return 0.5 + math.atan(x / a) / math.pi

