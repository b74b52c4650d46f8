"""
Funciones de Bessel de primera especie
Órdenes semienteros: polinomios trigonométricos explícitos (expansión finita de Hankel).
Otros órdenes: serie de potencias para argumentos pequeños y scipy.special.jv más allá.
Ceros: estimación de McMahon + pulido con brentq sobre bessel_j.
"""

import logging
import math
from functools import lru_cache
from typing import Union

import numpy as np
from scipy import optimize, special

from app.utils.exceptions import DomainError

logger = logging.getLogger(__name__)

# Orden semientero máximo con forma cerrada
HALF_INTEGER_MAX_ORDER = 20.5
# Por debajo de este argumento se suma la serie de potencias
SERIES_CROSSOVER = 2.0
SERIES_MAX_TERMS = 200
ZERO_SCAN_STEP = 0.5

ArrayLike = Union[float, np.ndarray]


def validate_order(nu: float) -> float:
    """Comprueba ν ≥ −1/2 finito"""
    if not math.isfinite(nu) or nu < -0.5:
        raise DomainError(f"Orden de Bessel inválido: ν = {nu} (se requiere ν ≥ −1/2)")
    return float(nu)


def is_half_integer(nu: float) -> bool:
    twice = 2.0 * nu
    return twice == math.floor(twice) and int(twice) % 2 != 0


def _as_argument(z: ArrayLike) -> np.ndarray:
    z_arr = np.asarray(z, dtype=np.float64)
    if np.any(z_arr < 0.0) or not np.all(np.isfinite(z_arr)):
        raise DomainError("El argumento de J_ν debe ser real, finito y ≥ 0")
    return z_arr


def _hankel_coefficient(n: int, k: int) -> float:
    """a_k(n + ½) = (n + k)! / (2^k k! (n − k)!)"""
    return math.factorial(n + k) / (2 ** k * math.factorial(k) * math.factorial(n - k))


def _shifted_trig(n: int, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(sin(z − nπ/2), cos(z − nπ/2)) sin restar fases en coma flotante"""
    sin_z, cos_z = np.sin(z), np.cos(z)
    quadrant = n % 4
    if quadrant == 0:
        return sin_z, cos_z
    if quadrant == 1:
        return -cos_z, sin_z
    if quadrant == 2:
        return -sin_z, -cos_z
    return cos_z, -sin_z


def spherical_closed_form(n: int, z: ArrayLike) -> ArrayLike:
    """
    J_{n+½}(z) por la expresión trigonométrica explícita

    J_{n+½}(z) = √(2/(πz)) [sin(z − nπ/2)·P_n(1/z) + cos(z − nπ/2)·Q_n(1/z)]

    Args:
        n: Entero ≥ −1 (n = −1 da J_{−½}(z) = √(2/(πz))·cos z)
        z: Argumento(s) > 0

    Returns:
        Valor(es) de J_{n+½}
    """
    if n < -1:
        raise DomainError("spherical_closed_form requiere n ≥ −1")
    z_arr = _as_argument(z)
    if np.any(z_arr == 0.0):
        raise DomainError("La forma cerrada no está definida en z = 0")

    amplitude = np.sqrt(2.0 / (np.pi * z_arr))
    if n == -1:
        result = amplitude * np.cos(z_arr)
    else:
        inverse = 1.0 / z_arr
        even = np.zeros_like(z_arr)
        odd = np.zeros_like(z_arr)
        for k in range(n + 1):
            term = _hankel_coefficient(n, k) * inverse ** k
            sign = -1.0 if (k // 2) % 2 else 1.0
            if k % 2 == 0:
                even += sign * term
            else:
                odd += sign * term
        sin_shift, cos_shift = _shifted_trig(n, z_arr)
        result = amplitude * (sin_shift * even + cos_shift * odd)

    return float(result) if np.ndim(z) == 0 else result


def bessel_j_series(nu: float, z: ArrayLike) -> ArrayLike:
    """
    Serie de potencias J_ν(z) = Σ (−1)^k (z/2)^{2k+ν} / (k! Γ(k+ν+1))

    Exacta hasta redondeo para z pequeño; la cancelación crece como e^z / J_ν(z).
    """
    nu = validate_order(nu)
    z_arr = _as_argument(z)
    half = 0.5 * z_arr
    with np.errstate(divide="ignore"):
        term = np.power(half, nu) * special.rgamma(nu + 1.0)
    total = term + 0.0
    factor = -half * half
    for k in range(1, SERIES_MAX_TERMS):
        term = term * factor / (k * (k + nu))
        total = total + term
        if np.all(np.abs(term) <= 1e-17 * np.abs(total)):
            break

    return float(total) if np.ndim(z) == 0 else total


def bessel_j_generic(nu: float, z: ArrayLike) -> ArrayLike:
    """Ruta para ν arbitrario: serie en z ≤ SERIES_CROSSOVER y scipy.special.jv más allá"""
    nu = validate_order(nu)
    z_arr = _as_argument(z)
    small = z_arr <= SERIES_CROSSOVER
    result = np.empty_like(z_arr)
    if np.any(small):
        result[small] = bessel_j_series(nu, z_arr[small])
    if np.any(~small):
        result[~small] = special.jv(nu, z_arr[~small])

    return float(result) if np.ndim(z) == 0 else result


def bessel_j(nu: float, z: ArrayLike) -> ArrayLike:
    """
    J_ν(z) para ν ≥ −1/2 y z ≥ 0

    Args:
        nu: Orden ν ≥ −1/2
        z: Argumento(s) reales ≥ 0 (escalar o arreglo)

    Returns:
        J_ν(z) con error absoluto ≤ 1e−12 para z ≤ 1e4.
        J_{−½}(0) = +inf.

    Raises:
        DomainError: Orden o argumento fuera de dominio
    """
    nu = validate_order(nu)
    z_arr = _as_argument(z)

    if is_half_integer(nu) and nu <= HALF_INTEGER_MAX_ORDER:
        n = int(round(nu - 0.5))
        result = np.empty_like(z_arr)
        # La forma cerrada cancela para z < 1 salvo en órdenes ±½
        closed = z_arr >= 1.0 if n >= 1 else z_arr > 0.0
        if np.any(closed):
            result[closed] = spherical_closed_form(n, z_arr[closed])
        rest = ~closed
        if np.any(rest):
            if n == -1:
                result[rest] = np.inf
            else:
                result[rest] = bessel_j_series(nu, z_arr[rest])
    else:
        result = np.asarray(bessel_j_generic(nu, z_arr), dtype=np.float64)

    return float(result) if np.ndim(z) == 0 else result


def mcmahon_estimate(nu: float, k: int) -> float:
    """Estimación asintótica de McMahon del k-ésimo cero de J_ν"""
    beta = (k + 0.5 * nu - 0.25) * math.pi
    mu = 4.0 * nu * nu
    eight_beta = 8.0 * beta
    return (
        beta
        - (mu - 1.0) / eight_beta
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * eight_beta ** 3)
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * eight_beta ** 5)
    )


@lru_cache(maxsize=64)
def bessel_zeros_upto(nu: float, count: int) -> tuple[float, ...]:
    """
    Primeros `count` ceros positivos de J_ν

    Se barre J_ν en pasos de ZERO_SCAN_STEP (los ceros distan más de 2.9)
    desde un punto anterior al primer cero hasta pasar la estimación de McMahon
    del último; cada cambio de signo se pule con brentq.
    """
    nu = validate_order(nu)
    if count < 1:
        raise DomainError("Se requiere al menos un cero")

    start = max(nu, 0.5)
    upper = max(mcmahon_estimate(nu, count), start) + math.pi
    brackets: list[tuple[float, float]] = []
    while True:
        grid = np.arange(start, upper + ZERO_SCAN_STEP, ZERO_SCAN_STEP)
        values = bessel_j(nu, grid)
        change = np.nonzero(values[:-1] * values[1:] < 0.0)[0]
        brackets = [(grid[i], grid[i + 1]) for i in change]
        if len(brackets) >= count:
            break
        upper += (count - len(brackets) + 1) * math.pi

    zeros = []
    for low, high in brackets[:count]:
        zeros.append(optimize.brentq(lambda x: bessel_j(nu, x), low, high, xtol=1e-14))

    logger.debug(f"ceros de J_{nu:g}: {count} calculados hasta {zeros[-1]:.6g}")
    return tuple(zeros)


def bessel_zeros(nu: float, k: int) -> float:
    """
    k-ésimo cero positivo de J_ν

    Args:
        nu: Orden ν ≥ −1/2
        k: Índice ≥ 1

    Returns:
        j_{ν,k} con precisión ≤ 1e−10
    """
    if k < 1:
        raise DomainError("El índice del cero debe ser ≥ 1")
    return bessel_zeros_upto(float(nu), int(k))[k - 1]
