"""
Modelo SampleBatch
Lote reproducible de variables α-estables simétricas
"""

from dataclasses import dataclass, field

import numpy as np

from app.utils.constants import GENERATOR_ID
from app.utils.exceptions import DomainError


@dataclass(frozen=True)
class SampleBatch:
    """
    (alpha, a, seed, count) determinan las variables bit a bit.
    `generator` identifica el algoritmo para reproducir los archivos CSV.
    """
    alpha: float
    a: float
    seed: int
    draws: np.ndarray = field(repr=False)
    generator: str = GENERATOR_ID

    def __post_init__(self):
        if not (0.0 < self.alpha <= 2.0):
            raise DomainError("alpha debe estar en (0, 2]")
        if self.a <= 0.0:
            raise DomainError("a debe ser positivo")
        if not (0 <= self.seed < 2 ** 64):
            raise DomainError("La semilla debe ser un entero sin signo de 64 bits")

        draws = np.array(self.draws, dtype=np.float64)
        if draws.ndim != 1 or draws.size == 0:
            raise DomainError("El lote debe ser un vector no vacío")
        if not np.all(np.isfinite(draws)):
            raise DomainError("El lote contiene valores no finitos")

        draws.flags.writeable = False
        object.__setattr__(self, "draws", draws)

    @property
    def count(self) -> int:
        return self.draws.shape[0]
