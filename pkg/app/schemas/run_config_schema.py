"""
Schema de configuración de una corrida de la CLI
Valida la coherencia entre subcomando, ruta y parámetros antes de evaluar nada.
"""

import math
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.schemas.core_schema import PhysicalParams, StableParams
from app.services.core import reduce_physical
from app.utils.constants import DEFAULT_TOL, RouteMethod, Subcommand, VerifySuite

MAX_GRID_POINTS = 1_000_000


def parse_points(value) -> list[float]:
    """
    Lista explícita "0,1,5" o rango inclusivo "inicio:fin:paso"

    Raises:
        ValueError: Rango mal formado, paso no positivo o demasiados puntos
    """
    if value is None:
        return []
    if isinstance(value, (int, float)):
        return [float(value)]
    if not isinstance(value, str):
        return [float(item) for item in value]

    text = value.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"Rango inválido '{text}': se espera inicio:fin:paso")
        start, stop, step = (float(part) for part in parts)
        if not (step > 0.0) or stop < start:
            raise ValueError(f"Rango inválido '{text}': paso > 0 y fin ≥ inicio")
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        if count > MAX_GRID_POINTS:
            raise ValueError(f"El rango '{text}' genera demasiados puntos ({count})")
        return [start + index * step for index in range(count)]
    return [float(item) for item in text.split(",") if item.strip()]


class RunConfig(BaseModel):
    """
    Configuración completa de un subcomando

    La escala se da con `a` o con el trío (hbar, mass, time); sin ninguno se usa a = 1.
    """
    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    alpha: float = Field(1.5, gt=0.0, le=2.0)
    a: Optional[float] = Field(None, gt=0.0)
    hbar: Optional[float] = Field(None, gt=0.0)
    mass: Optional[float] = Field(None, gt=0.0)
    time: Optional[float] = Field(None, gt=0.0)
    n: int = Field(1, ge=1, le=64)
    points: list[float] = Field(default_factory=lambda: [0.0])
    method: RouteMethod = RouteMethod.AUTO
    tol: float = Field(DEFAULT_TOL, gt=0.0)
    seed: int = Field(0, ge=0, lt=2 ** 64)
    count: int = Field(1000, ge=1)
    suite: VerifySuite = VerifySuite.ALL
    delta: float = Field(1e-4, gt=0.0)
    alpha_grid: list[float] = Field(default_factory=lambda: list(np.linspace(1.05, 1.95, 20)))
    rho_grid: list[float] = Field(default_factory=lambda: list(np.logspace(-2.0, 2.0, 20)))
    workers: Optional[int] = Field(None, ge=1, le=256)
    output: Optional[str] = None

    @field_validator("points", "alpha_grid", "rho_grid", mode="before")
    @classmethod
    def parse_grid(cls, value):
        return parse_points(value)

    @field_validator("points", "alpha_grid", "rho_grid")
    @classmethod
    def validate_grid(cls, value: list[float]) -> list[float]:
        if not value:
            raise ValueError("La malla de puntos está vacía")
        if not all(math.isfinite(item) for item in value):
            raise ValueError("La malla contiene valores no finitos")
        return value

    @model_validator(mode="after")
    def validate_consistency(self) -> "RunConfig":
        physical = (self.hbar, self.mass, self.time)
        if any(item is not None for item in physical):
            if not all(item is not None for item in physical):
                raise ValueError("--hbar, --mass y --time se dan juntos")
            if self.a is not None:
                raise ValueError("Use --a o bien --hbar/--mass/--time, no ambos")

        if self.method in (RouteMethod.HFOX, RouteMethod.SADDLE) and not (1.0 < self.alpha <= 2.0):
            raise ValueError(f"method={self.method.value} requiere 1 < α ≤ 2")
        if self.method == RouteMethod.TAIL and not (1.0 < self.alpha < 2.0):
            raise ValueError("method=tail requiere 1 < α < 2")
        if self.method in (RouteMethod.HFOX, RouteMethod.TAIL, RouteMethod.SADDLE) and self.n != 1:
            raise ValueError(f"method={self.method.value} solo admite n = 1")

        if self.subcommand == Subcommand.VERIFY and not (1.0 < self.alpha < 2.0):
            raise ValueError(f"{self.subcommand.value} requiere 1 < α < 2")
        if self.subcommand == Subcommand.RESIDUAL and self.n != 1:
            raise ValueError("residual es unidimensional")
        if self.subcommand == Subcommand.SADDLE_REGIME:
            if not all(1.0 < alpha < 2.0 for alpha in self.alpha_grid):
                raise ValueError("alpha_grid debe estar contenida en (1, 2)")
            if not all(rho > 0.0 for rho in self.rho_grid):
                raise ValueError("rho_grid debe ser positiva")
        return self

    @property
    def params(self) -> StableParams:
        if self.hbar is not None:
            return reduce_physical(PhysicalParams(hbar=self.hbar, mass=self.mass, time=self.time), self.alpha)
        return StableParams(alpha=self.alpha, a=self.a if self.a is not None else 1.0)
