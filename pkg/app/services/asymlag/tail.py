"""
Ley de potencias de la cola
Desarrollo de gran distancia del propagador 1D (1 < α < 2):

    P(x) ≈ (1/π)·Σ_{k≥1} (−1)^(k+1)·Γ(αk+1)/k!·sin(πkα/2)·a^k/|x|^(αk+1)

El primer término es la cola a·α·Γ(α)·sin(πα/2)/(π|x|^(α+1)).
"""

import math

from scipy import special

from app.schemas.core_schema import StableParams
from app.utils.exceptions import DomainError


def _require_tail_regime(alpha: float) -> None:
    if alpha >= 2.0:
        raise DomainError("Para α = 2 la constante de cola se anula: la cola gaussiana no es potencial")
    if alpha <= 1.0:
        raise DomainError("La ley de cola se implementa para 1 < α < 2")


def _coefficient(alpha: float, k: int) -> float:
    """(−1)^(k+1)·Γ(αk+1)/k!·sin(πkα/2)/π"""
    sign = 1.0 if k % 2 else -1.0
    return sign * math.exp(special.gammaln(alpha * k + 1.0) - special.gammaln(k + 1.0)) \
        * math.sin(0.5 * math.pi * k * alpha) / math.pi


def tail_constant(alpha: float) -> float:
    """C(α) = α·Γ(α)·sin(πα/2)/π"""
    _require_tail_regime(alpha)
    return _coefficient(alpha, 1)


def tail_density(x: float, params: StableParams) -> float:
    """
    Término dominante de la cola

    Args:
        x: Desplazamiento ≠ 0
        params: 1 < α < 2

    Returns:
        a·C(α)/|x|^(α+1); validez en |x| ≫ a^(1/α) a cargo del llamador

    Raises:
        DomainError: x = 0, α = 2 o α ≤ 1
    """
    if x == 0.0:
        raise DomainError("La cola no está definida en x = 0")
    _require_tail_regime(params.alpha)
    return params.a * tail_constant(params.alpha) / abs(x) ** (params.alpha + 1.0)


def tail_series(x: float, params: StableParams, terms: int = 1) -> float:
    """Suma de los primeros `terms` términos del desarrollo asintótico"""
    if x == 0.0:
        raise DomainError("La cola no está definida en x = 0")
    if terms < 1:
        raise DomainError("Se requiere al menos un término")
    alpha, a = params.alpha, params.a
    _require_tail_regime(alpha)
    distance = abs(x)
    return sum(
        _coefficient(alpha, k) * a ** k / distance ** (alpha * k + 1.0)
        for k in range(1, terms + 1)
    )


def tail_mass(length: float, params: StableParams, terms: int = 3) -> float:
    """
    ∫_L^∞ de la serie de cola: Σ c_k·a^k·L^(−αk)/(αk)

    Usada para corregir la normalización sobre [−L, L].
    """
    if length <= 0.0:
        raise DomainError("L debe ser positivo")
    alpha, a = params.alpha, params.a
    _require_tail_regime(alpha)
    return sum(
        _coefficient(alpha, k) * a ** k * length ** (-alpha * k) / (alpha * k)
        for k in range(1, terms + 1)
    )
