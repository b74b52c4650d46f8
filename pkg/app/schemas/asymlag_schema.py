"""
Schemas de la ruta lagrangiana / asintótica
"""

from pydantic import BaseModel, ConfigDict, Field


class SaddleInput(BaseModel):
    """
    Entrada del punto de silla: α y ρ = a/|x|^α

    Se admite α = 2 como límite gaussiano exacto (punto de silla cuadrático).
    """
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(..., gt=1.0, le=2.0)
    rho: float = Field(..., gt=0.0)
