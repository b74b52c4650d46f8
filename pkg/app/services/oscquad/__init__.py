"""
Cuadratura oscilatoria semi-infinita (núcleos coseno, seno y Bessel)
"""

from app.services.oscquad.oscillatory_integrator import (
    integrate,
    integrate_sine,
    integrate_plain,
    iterated_aitken,
)
from app.services.oscquad.kernels import (
    OscillatoryKernel,
    CosineKernel,
    SineKernel,
    BesselKernel,
    KernelFactory,
)

__all__ = [
    "integrate",
    "integrate_sine",
    "integrate_plain",
    "iterated_aitken",
    "OscillatoryKernel",
    "CosineKernel",
    "SineKernel",
    "BesselKernel",
    "KernelFactory",
]
