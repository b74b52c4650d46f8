"""
Schemas del propagador
"""

from pydantic import BaseModel, ConfigDict, Field

from app.schemas.core_schema import StableParams
from app.utils.constants import DEFAULT_TOL


class DensityQuery(BaseModel):
    """
    Consulta de densidad: distancia r = |x_N − x_0|, dimensión n y tolerancia
    """
    model_config = ConfigDict(frozen=True)

    r: float = Field(..., ge=0.0, description="Distancia radial (unidades de longitud)")
    n: int = Field(1, ge=1, description="Dimensión del espacio euclídeo")
    params: StableParams
    tol: float = Field(DEFAULT_TOL, gt=0.0)
