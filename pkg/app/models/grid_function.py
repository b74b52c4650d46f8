"""
Modelo GridFunction
Malla periódica uniforme 1D con valores complejos para los operadores espectrales
"""

from dataclasses import dataclass, field

import numpy as np

from app.utils.exceptions import DomainError


@dataclass(frozen=True)
class GridFunction:
    """
    Muestras f(x_j) en x_j = −L/2 + j·L/M, j = 0..M−1

    Invariantes: M ≥ 4 potencia de dos, L > 0, valores finitos.
    Los valores se guardan como copia de solo lectura.
    """
    domain_length: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not (np.isfinite(self.domain_length) and self.domain_length > 0.0):
            raise DomainError("domain_length debe ser positivo y finito")

        values = np.array(self.values, dtype=np.complex128)
        if values.ndim != 1:
            raise DomainError("GridFunction es unidimensional")

        size = values.shape[0]
        if size < 4 or size & (size - 1):
            raise DomainError(f"El número de muestras debe ser potencia de dos ≥ 4 (llegó {size})")
        if not np.all(np.isfinite(values)):
            raise DomainError("La función contiene valores no finitos")

        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def size(self) -> int:
        return self.values.shape[0]

    @property
    def spacing(self) -> float:
        return self.domain_length / self.size

    @property
    def x(self) -> np.ndarray:
        """Nodos de la malla"""
        return -0.5 * self.domain_length + self.spacing * np.arange(self.size)

    @property
    def wavenumbers(self) -> np.ndarray:
        """Números de onda con signo 2πk/L en el orden de numpy.fft"""
        return 2.0 * np.pi * np.fft.fftfreq(self.size, d=self.spacing)

    def with_values(self, values: np.ndarray) -> "GridFunction":
        """Nueva función sobre la misma malla"""
        return GridFunction(self.domain_length, values)
