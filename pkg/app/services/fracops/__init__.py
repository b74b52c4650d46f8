"""
Operadores fraccionarios: Laplaciano y derivadas de Weyl espectrales, verificación de difusión
"""

from app.services.fracops.spectral_operators import (
    laplacian_symbol,
    weyl_symbol,
    frac_laplacian,
    weyl_derivative,
    frac_laplacian_nd,
    plane_wave,
    quadratic_form,
    fft_roundtrip_error,
)
from app.services.fracops.diffusion_check import (
    ResidualRow,
    dPdt_quadrature,
    dPdt_finite_difference,
    diffusion_residual_table,
    diffusion_residual,
)

__all__ = [
    "laplacian_symbol",
    "weyl_symbol",
    "frac_laplacian",
    "weyl_derivative",
    "frac_laplacian_nd",
    "plane_wave",
    "quadratic_form",
    "fft_roundtrip_error",
    "ResidualRow",
    "dPdt_quadrature",
    "dPdt_finite_difference",
    "diffusion_residual_table",
    "diffusion_residual",
]
