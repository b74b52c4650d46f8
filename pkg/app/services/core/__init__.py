"""
Núcleo: unidades reducidas y reescalado auto-similar
"""

from app.services.core.reduced_units import (
    diffusion_constant,
    reduce_physical,
    self_similar_rescale,
)

__all__ = [
    "diffusion_constant",
    "reduce_physical",
    "self_similar_rescale",
]
