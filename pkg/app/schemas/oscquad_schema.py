"""
Schemas de cuadratura oscilatoria
Integrales ∫₀^∞ p^s·e^(−a·p^α)·K(p·r) dp con K = cos, sin o J_ν
"""

import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.utils.constants import KernelType


class OscIntegrand(BaseModel):
    """
    Descripción del integrando oscilatorio

    weight_power admite valores negativos mientras el integrando sea
    integrable en p = 0 (s > −1 para coseno, s > −2 para seno,
    s + ν > −1 para Bessel).
    """
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(..., gt=0.0, le=2.0)
    a: float = Field(..., gt=0.0)
    weight_power: float = Field(0.0, ge=-1.0)
    kernel: KernelType = KernelType.COSINE
    nu: Optional[float] = Field(None, ge=-0.5, description="Orden de J_ν (solo núcleo bessel)")
    r: float = Field(..., ge=0.0, description="Frecuencia de oscilación")

    @model_validator(mode="after")
    def validate_integrand(self) -> "OscIntegrand":
        for name in ("alpha", "a", "weight_power", "r"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"'{name}' debe ser finito")

        if self.kernel == KernelType.BESSEL:
            if self.nu is None:
                raise ValueError("El núcleo bessel requiere el orden 'nu'")
            if self.weight_power + self.nu <= -1.0:
                raise ValueError("Integrando no integrable en p = 0 (s + ν ≤ −1)")
        elif self.kernel == KernelType.COSINE and self.weight_power <= -1.0:
            raise ValueError("Integrando no integrable en p = 0 (s ≤ −1 con coseno)")

        return self


class QuadResult(BaseModel):
    """Resultado de oscquad"""
    model_config = ConfigDict(frozen=True)

    value: float
    abs_err_estimate: float = Field(..., ge=0.0)
    panels_used: int = Field(..., ge=1)
