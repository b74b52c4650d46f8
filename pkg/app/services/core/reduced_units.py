"""
Unidades reducidas
Conversión de (ħ, m, t) a la escala única a = c·t y reescalado auto-similar
"""

import logging

from app.schemas.core_schema import PhysicalParams, StableParams
from app.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


def diffusion_constant(hbar: float, mass: float, alpha: float) -> float:
    """c = ħ^(α−1) / (2m)^(α/2)"""
    return hbar ** (alpha - 1.0) / (2.0 * mass) ** (0.5 * alpha)


def reduce_physical(p: PhysicalParams, alpha: float) -> StableParams:
    """
    Convierte parámetros físicos a unidades reducidas

    Args:
        p: ħ, m y t (todos > 0, garantizado por el schema)
        alpha: Exponente característico en (0, 2]

    Returns:
        StableParams con a = t·ħ^(α−1)/(2m)^(α/2)

    Raises:
        DomainError: Si alpha está fuera de (0, 2]
    """
    if not (0.0 < alpha <= 2.0):
        raise DomainError(f"alpha debe estar en (0, 2], llegó {alpha}")

    a = p.time * diffusion_constant(p.hbar, p.mass, alpha)
    logger.debug(f"reduce_physical: ħ={p.hbar:g} m={p.mass:g} t={p.time:g} α={alpha:g} → a={a:.17g}")
    return StableParams(alpha=alpha, a=a)


def self_similar_rescale(x: float, s: StableParams) -> tuple[float, float]:
    """
    P(x; α, a) = a^(−1/α)·P(x·a^(−1/α); α, 1)

    Returns:
        (x_reducido, prefactor)
    """
    prefactor = s.a ** (-1.0 / s.alpha)
    return x * prefactor, prefactor
