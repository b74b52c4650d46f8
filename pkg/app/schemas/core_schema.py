"""
Schemas del núcleo - Validaciones con Pydantic
Parámetros del propagador en unidades reducidas y resultado universal de los evaluadores
"""

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.utils.constants import EvalMethod


class StableParams(BaseModel):
    """
    Exponente característico y escala reducida a = c·t

    Toda la librería trabaja en unidades reducidas (ħ = 1, 2m = 1), de modo
    que K^α, c, β y t quedan absorbidos en el único parámetro `a`.
    """
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(..., gt=0.0, le=2.0, description="Exponente característico α")
    a: float = Field(..., gt=0.0, description="Escala reducida a = c·t (unidades longitud^α)")

    @field_validator("alpha", "a")
    @classmethod
    def validate_finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("Los parámetros deben ser finitos")
        return value

    @property
    def width(self) -> float:
        """Longitud característica a^(1/α)"""
        return self.a ** (1.0 / self.alpha)


class PhysicalParams(BaseModel):
    """Constantes físicas del Hamiltoniano (ħ, m) y tiempo transcurrido"""
    model_config = ConfigDict(frozen=True)

    hbar: float = Field(..., gt=0.0, description="Constante de Planck reducida (unidades de acción)")
    mass: float = Field(..., gt=0.0, description="Masa de la partícula")
    time: float = Field(..., gt=0.0, description="Tiempo transcurrido")


class EvalResult(BaseModel):
    """
    Valor + error absoluto estimado + método

    abs_err_estimate = +inf indica una fórmula asintótica sin estimación de error.
    """
    model_config = ConfigDict(frozen=True)

    value: float
    abs_err_estimate: float = Field(..., ge=0.0)
    method: EvalMethod
    degenerate: bool = False

    @field_validator("value")
    @classmethod
    def validate_value(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("El valor evaluado no es finito")
        return value
