"""
Funciones especiales: Γ real y compleja, J_ν y sus ceros
"""

from app.services.specfun.gamma_functions import (
    gamma_real,
    gamma_complex,
    log_gamma_complex,
    duplication_defect,
)
from app.services.specfun.bessel_functions import (
    bessel_j,
    bessel_j_series,
    bessel_j_generic,
    bessel_zeros,
    bessel_zeros_upto,
    spherical_closed_form,
)

__all__ = [
    "gamma_real",
    "gamma_complex",
    "log_gamma_complex",
    "duplication_defect",
    "bessel_j",
    "bessel_j_series",
    "bessel_j_generic",
    "bessel_zeros",
    "bessel_zeros_upto",
    "spherical_closed_form",
]
