"""
Asintótica y ruta lagrangiana: cola potencial, acción clásica, punto de silla, fluctuaciones
"""

from app.services.asymlag.tail import tail_constant, tail_density, tail_series, tail_mass
from app.services.asymlag.saddle import (
    classical_action_constant,
    classical_path,
    classical_action,
    saddle_point,
    saddle_phase,
    saddle_residual,
    saddle_exponent,
    saddle_curvature,
    saddle_density,
)
from app.services.asymlag.fluctuations import (
    second_difference_matrix,
    fluctuation_determinant,
    fluctuation_modes,
    fluctuation_eigenvalues,
)

__all__ = [
    "tail_constant",
    "tail_density",
    "tail_series",
    "tail_mass",
    "classical_action_constant",
    "classical_path",
    "classical_action",
    "saddle_point",
    "saddle_phase",
    "saddle_residual",
    "saddle_exponent",
    "saddle_curvature",
    "saddle_density",
    "second_difference_matrix",
    "fluctuation_determinant",
    "fluctuation_modes",
    "fluctuation_eigenvalues",
]
