"""
Función Gamma de argumento real y complejo
Γ real vía scipy; Γ compleja con el núcleo racional de Lanczos (g ≈ 6.0247, 13 términos)
y reflexión para Re z < 0.5
"""

import cmath
import logging
import math
from typing import Union

import numpy as np
from scipy import special

from app.utils.exceptions import DomainError, NumericOverflowError

logger = logging.getLogger(__name__)

LANCZOS_G = 6.024680040776729583740234375

# Coeficientes del núcleo racional escalado por e^g (grado mayor primero)
LANCZOS_NUM = np.array([
    0.006061842346248906525783753964555936883222,
    0.5098416655656676188125178644804694509993,
    19.51992788247617482847860966235652136208,
    449.9445569063168119446858607650988409623,
    6955.999602515376140356310115515198987526,
    75999.29304014542649875303443598909137092,
    601859.6171681098786670226533699352302507,
    3481712.15498064590882071018964774556468,
    14605578.08768506808414169982791359218571,
    43338889.32467613834773723740590533316085,
    86363131.28813859145546927288977868422342,
    103794043.1163445451906271053616070238554,
    56906521.91347156388090791033559122686859,
])
LANCZOS_DENOM = np.array([
    1.0, 66.0, 1925.0, 32670.0, 357423.0, 2637558.0, 13339535.0,
    45995730.0, 105258076.0, 150917976.0, 120543840.0, 39916800.0, 0.0,
])

LOG_PI = math.log(math.pi)
LOG_MAX = math.log(np.finfo(float).max)

Number = Union[float, complex]


def _is_pole(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def gamma_real(x: float) -> float:
    """
    Γ(x) para x real

    Args:
        x: Argumento (no entero no positivo)

    Returns:
        Γ(x) con precisión relativa ~1e−15 en [−170, 170]

    Raises:
        DomainError: Si x es un polo (entero ≤ 0) o no es finito
        NumericOverflowError: Si Γ(x) excede el rango representable
    """
    if not math.isfinite(x):
        raise DomainError(f"Argumento no finito: {x}")
    if _is_pole(x):
        raise DomainError(f"Γ tiene un polo en x = {x:g}")

    value = float(special.gamma(x))
    if math.isinf(value):
        raise NumericOverflowError(f"Γ({x:g}) desborda el rango de doble precisión")
    return value


def _lanczos_log_gamma(z: np.ndarray) -> np.ndarray:
    """log Γ(z) para Re z ≥ 0.5"""
    rational = np.polyval(LANCZOS_NUM, z) / np.polyval(LANCZOS_DENOM, z)
    zgh = z + (LANCZOS_G - 0.5)
    return np.log(rational) + (z - 0.5) * (np.log(zgh) - 1.0)


def _log_sin_pi(z: np.ndarray) -> np.ndarray:
    """log sin(πz) sin desbordamiento para |Im z| grande"""
    shift = np.round(z.real)
    w = np.pi * (z - shift)
    # sin(π(z − n)) = (−1)^n sin(πz)
    parity = np.where(np.mod(shift, 2.0) == 0.0, 0.0, np.pi)

    upper = w.imag >= 0.0
    w_up = np.where(upper, w, np.conj(w))
    # sin w = e^{−iw}(1 − e^{2iw})/(−2i), con |e^{2iw}| ≤ 1 en el semiplano superior
    log_sin = -1j * w_up + np.log(-np.expm1(2j * w_up)) - (math.log(2.0) - 0.5j * np.pi)
    small = np.abs(w_up.imag) < 1.0
    log_sin = np.where(small, np.log(np.sin(w_up) + 0j), log_sin)
    log_sin = np.where(upper, log_sin, np.conj(log_sin))
    return log_sin + 1j * parity


def log_gamma_complex(z):
    """
    log Γ(z) para z complejo (rama no necesariamente principal)

    Acepta escalares o arreglos; exp(log_gamma_complex(z)) = Γ(z).

    Raises:
        DomainError: Si algún z es un polo de Γ
    """
    z_arr = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(z_arr)):
        raise DomainError("Argumento complejo no finito")
    pole = (z_arr.imag == 0.0) & (z_arr.real <= 0.0) & (z_arr.real == np.floor(z_arr.real))
    if np.any(pole):
        raise DomainError("Γ tiene un polo en un entero no positivo")

    reflect = z_arr.real < 0.5
    direct = np.where(reflect, 1.0 - z_arr, z_arr)
    result = _lanczos_log_gamma(direct)
    if np.any(reflect):
        # Γ(z) = π / (sin(πz) Γ(1 − z))
        reflected = LOG_PI - _log_sin_pi(z_arr) - result
        result = np.where(reflect, reflected, result)

    if np.ndim(z) == 0:
        return complex(result)
    return result


def gamma_complex(z: Number) -> complex:
    """
    Γ(z) para z complejo

    Args:
        z: Argumento (no entero no positivo)

    Returns:
        Γ(z) con precisión relativa ≤ 1e−12 para |Im z| ≤ 200, Re z ∈ [−170, 170]

    Raises:
        DomainError: Polo o argumento no finito
        NumericOverflowError: |Γ(z)| fuera del rango representable
    """
    log_value = log_gamma_complex(complex(z))
    if log_value.real > LOG_MAX:
        raise NumericOverflowError(f"Γ({z}) desborda el rango de doble precisión")
    value = cmath.exp(log_value)
    if complex(z).imag == 0.0:
        return complex(value.real, 0.0)
    return value


def duplication_defect(x: float) -> float:
    """Defecto relativo de 2^(2x−1)Γ(x)Γ(x+½) = √π·Γ(2x) (identidad de duplicación)"""
    lhs = 2.0 ** (2.0 * x - 1.0) * gamma_real(x) * gamma_real(x + 0.5)
    rhs = math.sqrt(math.pi) * gamma_real(2.0 * x)
    return abs(lhs - rhs) / abs(rhs)
