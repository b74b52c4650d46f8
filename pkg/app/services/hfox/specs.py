"""
Patrón Factory Method - Especificaciones de funciones H de Fox usadas por la librería

Convención z^s (ver app.schemas.hfox_schema):
    H^{1,0}_{0,1}[z | ∅; (b,1)]       = z^b·e^(−z)
    H^{1,0}_{0,1}[w | ∅; (0,1/α)]     = α·e^(−w^α)
    transformada coseno:  ∫₀^∞ H(p)·cos(p·x) dp = (π/x)·H_cos(x)
    potencia del argumento: H(z) = k·H_k(z^k) con todos los pesos multiplicados por k
"""

from app.schemas.hfox_schema import HFoxSpec
from app.utils.exceptions import DomainError


class HFoxSpecFactory:
    """
    Centraliza la construcción de HFoxSpec para las identidades y el propagador
    """

    @staticmethod
    def exponential_spec(b: float = 0.0) -> HFoxSpec:
        """z^b·e^(−z)"""
        return HFoxSpec(m=1, n=0, p=0, q=1, upper=(), lower=((b, 1.0),))

    @staticmethod
    def exponential_power_spec(alpha: float) -> HFoxSpec:
        """α·e^(−w^α): la función característica como función H"""
        if alpha <= 0.0:
            raise DomainError("alpha debe ser positivo")
        return HFoxSpec(m=1, n=0, p=0, q=1, upper=(), lower=((0.0, 1.0 / alpha),))

    @staticmethod
    def cosine_transform(spec: HFoxSpec) -> HFoxSpec:
        """
        Parámetros de la transformada coseno de Fourier

        H^{m,n}_{p,q} → H^{n+1,m}_{q+1,p+2}: los pares inferiores pasan arriba como (1−b_j, B_j)
        seguidos de (1, ½); abajo quedan (1, 1), los pares superiores como (1−a_i, A_i) y (1, ½).
        """
        upper = tuple((1.0 - b, weight) for b, weight in spec.lower) + ((1.0, 0.5),)
        lower = (
            ((1.0, 1.0),)
            + tuple((1.0 - a, weight) for a, weight in spec.upper)
            + ((1.0, 0.5),)
        )
        return HFoxSpec(
            m=spec.n + 1,
            n=spec.m,
            p=spec.q + 1,
            q=spec.p + 2,
            upper=upper,
            lower=lower,
        )

    @classmethod
    def stable_density_spec(cls, alpha: float) -> HFoxSpec:
        """H^{1,1}_{2,2}[ · | (1,1/α),(1,½); (1,1),(1,½)] del propagador"""
        return cls.cosine_transform(cls.exponential_power_spec(alpha))

    @staticmethod
    def scale_spec(spec: HFoxSpec, k: float) -> HFoxSpec:
        """Pesos A_i, B_j multiplicados por k > 0"""
        if k <= 0.0:
            raise DomainError("El factor de potencia k debe ser positivo")
        return HFoxSpec(
            m=spec.m,
            n=spec.n,
            p=spec.p,
            q=spec.q,
            upper=tuple((a, weight * k) for a, weight in spec.upper),
            lower=tuple((b, weight * k) for b, weight in spec.lower),
        )
