"""
Factor angular de la reducción n-dimensional

    F(c, n) = ∫₀¹ cos(c√u)·u^(−1/2)·(1−u)^((n−3)/2) du
            = √π·Γ((n−1)/2)·(2/c)^((n−2)/2)·J_{n/2−1}(c)

Identidad que conecta la medida de Dirichlet sobre la esfera con el núcleo de Hankel.
"""

import math

from scipy import integrate as sp_integrate

from app.services.specfun import bessel_j, gamma_real
from app.utils.exceptions import DomainError


def angular_factor(n: int, c: float) -> float:
    """
    F(c, n) por cuadratura adaptativa con peso algebraico u^(−1/2)(1−u)^((n−3)/2)

    Raises:
        DomainError: Si n < 2 o c < 0
    """
    if n < 2 or c < 0.0:
        raise DomainError("angular_factor requiere n ≥ 2 y c ≥ 0")
    value, _ = sp_integrate.quad(
        lambda u: math.cos(c * math.sqrt(u)),
        0.0,
        1.0,
        weight="alg",
        wvar=(-0.5, 0.5 * (n - 3)),
        epsabs=1e-14,
        epsrel=1e-13,
    )
    return float(value)


def angular_factor_closed(n: int, c: float) -> float:
    """F(c, n) en forma cerrada con J_{n/2−1}; en c = 0 vale B(1/2, (n−1)/2)"""
    if n < 2 or c < 0.0:
        raise DomainError("angular_factor_closed requiere n ≥ 2 y c ≥ 0")
    if c == 0.0:
        return gamma_real(0.5) * gamma_real(0.5 * (n - 1)) / gamma_real(0.5 * n)
    order = 0.5 * n - 1.0
    return math.sqrt(math.pi) * gamma_real(0.5 * (n - 1)) * (2.0 / c) ** order * bessel_j(order, c)
