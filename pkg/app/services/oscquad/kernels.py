"""
Patrón Strategy - Núcleos oscilatorios K(p·r) de oscquad

Cada núcleo sabe evaluarse, dónde están sus ceros positivos (fronteras de panel)
y cómo se comporta cerca de 0: K(u) ≈ c·u^λ.
"""

import math
from abc import ABC, abstractmethod

import numpy as np
from scipy import special

from app.schemas.oscquad_schema import OscIntegrand
from app.services.specfun import bessel_j, bessel_zeros_upto
from app.utils.constants import KernelType
from app.utils.exceptions import DomainError

# J_ν(u)/u^ν se suma por serie por debajo de este argumento (término 14 < 1e−30 en u = 1)
REGULAR_SERIES_CUTOFF = 1.0
REGULAR_SERIES_TERMS = 14


class OscillatoryKernel(ABC):
    """Interface Strategy para K(u)"""

    #: exponente λ de K(u) ≈ c·u^λ en u → 0
    leading_power: float = 0.0

    @abstractmethod
    def evaluate(self, u: np.ndarray) -> np.ndarray:
        """K(u) vectorizado"""
        pass

    @abstractmethod
    def zeros(self, count: int) -> np.ndarray:
        """Primeros `count` ceros positivos de K, crecientes"""
        pass

    @abstractmethod
    def small_argument_coefficient(self) -> float:
        """Constante c de K(u) ≈ c·u^λ"""
        pass

    def regular_part(self, u: np.ndarray) -> np.ndarray:
        """K(u)/u^λ, suave en u = 0"""
        if self.leading_power == 0.0:
            return self.evaluate(u)
        return self.evaluate(u) / np.power(u, self.leading_power)


class CosineKernel(OscillatoryKernel):
    leading_power = 0.0

    def evaluate(self, u: np.ndarray) -> np.ndarray:
        return np.cos(u)

    def zeros(self, count: int) -> np.ndarray:
        return (np.arange(1, count + 1) - 0.5) * math.pi

    def small_argument_coefficient(self) -> float:
        return 1.0


class SineKernel(OscillatoryKernel):
    leading_power = 1.0

    def evaluate(self, u: np.ndarray) -> np.ndarray:
        return np.sin(u)

    def regular_part(self, u: np.ndarray) -> np.ndarray:
        return np.sinc(u / math.pi)

    def zeros(self, count: int) -> np.ndarray:
        return np.arange(1, count + 1) * math.pi

    def small_argument_coefficient(self) -> float:
        return 1.0


class BesselKernel(OscillatoryKernel):
    """J_ν(u); ceros vía McMahon + brentq (cacheados por orden)"""

    def __init__(self, nu: float):
        self.nu = float(nu)
        self.leading_power = self.nu

    def evaluate(self, u: np.ndarray) -> np.ndarray:
        return bessel_j(self.nu, u)

    def regular_part(self, u: np.ndarray) -> np.ndarray:
        """J_ν(u)/u^ν: serie de potencias para u < 1, cociente directo para u ≥ 1"""
        u = np.asarray(u, dtype=float)
        small = u < REGULAR_SERIES_CUTOFF
        safe = np.where(small, REGULAR_SERIES_CUTOFF, u)
        direct = self.evaluate(safe) / np.power(safe, self.nu)
        return np.where(small, self._regular_series(u), direct)

    def _regular_series(self, u: np.ndarray) -> np.ndarray:
        # Σ_k (−u²/4)^k / (k!·Γ(k+ν+1)) / 2^ν
        step = -(u * u) / 4.0
        term = np.full_like(u, float(special.rgamma(self.nu + 1.0)))
        total = term.copy()
        for k in range(1, REGULAR_SERIES_TERMS):
            term = term * step / (k * (k + self.nu))
            total = total + term
        return total / 2.0 ** self.nu

    def zeros(self, count: int) -> np.ndarray:
        return np.asarray(bessel_zeros_upto(self.nu, count))

    def small_argument_coefficient(self) -> float:
        # J_ν(u) ≈ (u/2)^ν / Γ(ν+1)
        return float(special.rgamma(self.nu + 1.0)) / 2.0 ** self.nu


class KernelFactory:
    """
    Patrón Factory Method: construye el núcleo adecuado para un OscIntegrand
    """

    @staticmethod
    def create(spec: OscIntegrand) -> OscillatoryKernel:
        """
        Args:
            spec: Integrando validado

        Returns:
            Estrategia de núcleo correspondiente a spec.kernel

        Raises:
            DomainError: Si el tipo de núcleo no está soportado
        """
        if spec.kernel == KernelType.COSINE:
            return CosineKernel()
        if spec.kernel == KernelType.SINE:
            return SineKernel()
        if spec.kernel == KernelType.BESSEL:
            return BesselKernel(spec.nu)
        raise DomainError(f"Núcleo no soportado: {spec.kernel}")
