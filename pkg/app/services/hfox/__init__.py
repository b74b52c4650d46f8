"""
Función H de Fox: serie de residuos, integral de contorno y representación del propagador
"""

from app.services.hfox.specs import HFoxSpecFactory
from app.services.hfox.mellin_barnes import (
    convergence_parameter,
    residue_terms,
    hfox_eval,
    hfox_eval_series,
    hfox_eval_contour,
    hfox_scale_identity_check,
)
from app.services.hfox.stable_density import stable_density_hfox, stable_density_contour

__all__ = [
    "HFoxSpecFactory",
    "convergence_parameter",
    "residue_terms",
    "hfox_eval",
    "hfox_eval_series",
    "hfox_eval_contour",
    "hfox_scale_identity_check",
    "stable_density_hfox",
    "stable_density_contour",
]
