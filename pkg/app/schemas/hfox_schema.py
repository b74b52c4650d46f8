"""
Schemas de la función H de Fox
Convención de Mellin–Barnes con z^s:

    χ(s) = Π_{j≤m} Γ(b_j − B_j s) Π_{i≤n} Γ(1 − a_i + A_i s)
           / (Π_{j>m} Γ(1 − b_j + B_j s) Π_{i>n} Γ(a_i − A_i s))

Polos "b": s = (b_j + k)/B_j, j ≤ m. Polos "a": s = (a_i − 1 − k)/A_i, i ≤ n.
"""

import math
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

POLE_CHECK_DEPTH = 64
POLE_COLLISION_TOL = 1e-10

ParamPair = Tuple[float, float]


class HFoxSpec(BaseModel):
    """
    Órdenes (m, n, p, q) y listas de parámetros (a_i, A_i), (b_j, B_j)
    """
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=0)
    n: int = Field(..., ge=0)
    p: int = Field(..., ge=0)
    q: int = Field(..., ge=0)
    upper: Tuple[ParamPair, ...] = ()
    lower: Tuple[ParamPair, ...] = ()

    @model_validator(mode="after")
    def validate_spec(self) -> "HFoxSpec":
        if len(self.upper) != self.p:
            raise ValueError(f"Se esperaban {self.p} pares superiores, llegaron {len(self.upper)}")
        if len(self.lower) != self.q:
            raise ValueError(f"Se esperaban {self.q} pares inferiores, llegaron {len(self.lower)}")
        if self.m > self.q or self.n > self.p:
            raise ValueError("Se requiere m ≤ q y n ≤ p")

        for value, weight in self.upper + self.lower:
            if not (math.isfinite(value) and math.isfinite(weight)):
                raise ValueError("Parámetros no finitos")
            if weight <= 0.0:
                raise ValueError("Todos los A_i, B_j deben ser positivos")

        b_poles = self.b_poles(POLE_CHECK_DEPTH)
        a_poles = self.a_poles(POLE_CHECK_DEPTH)
        for pole in b_poles:
            if any(abs(pole - other) < POLE_COLLISION_TOL for other in a_poles):
                raise ValueError(
                    f"Los conjuntos de polos se cruzan en s = {pole:.6g}; no existe contorno separador"
                )
        return self

    def b_poles(self, depth: int) -> list[float]:
        """Primeros `depth` polos de cada factor Γ(b_j − B_j s), j ≤ m"""
        return [
            (b + k) / weight
            for b, weight in self.lower[:self.m]
            for k in range(depth)
        ]

    def a_poles(self, depth: int) -> list[float]:
        """Primeros `depth` polos de cada factor Γ(1 − a_i + A_i s), i ≤ n"""
        return [
            (a - 1.0 - k) / weight
            for a, weight in self.upper[:self.n]
            for k in range(depth)
        ]

    def separating_gap(self) -> Tuple[float, float]:
        """
        Intervalo (max polo a, min polo b) donde una recta vertical separa ambos conjuntos

        Returns:
            (izquierda, derecha); ±inf cuando un conjunto está vacío
        """
        left = max(((a - 1.0) / weight for a, weight in self.upper[:self.n]), default=-math.inf)
        right = min((b / weight for b, weight in self.lower[:self.m]), default=math.inf)
        return left, right

    def default_sigma(self) -> Optional[float]:
        """Punto medio del hueco separador (o una unidad hacia dentro si un lado es infinito)"""
        left, right = self.separating_gap()
        if left >= right:
            return None
        if math.isinf(left) and math.isinf(right):
            return 0.0
        if math.isinf(left):
            return right - 0.5
        if math.isinf(right):
            return left + 0.5
        return 0.5 * (left + right)
