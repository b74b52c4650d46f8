"""
Operadores fraccionarios espectrales sobre malla periódica
Laplaciano fraccionario (−∇²)^(α/2) y derivadas de Weyl por multiplicación en
el espacio de Fourier (numpy.fft).
"""

from typing import Sequence

import numpy as np

from app.models.grid_function import GridFunction
from app.utils.constants import WeylSide
from app.utils.exceptions import DomainError


def _validate_order(alpha: float) -> None:
    if not (0.0 < alpha <= 2.0):
        raise DomainError(f"El orden fraccionario debe estar en (0, 2] (llegó {alpha})")


def _apply_symbol(g: GridFunction, symbol: np.ndarray) -> GridFunction:
    return g.with_values(np.fft.ifft(symbol * np.fft.fft(g.values)))


def laplacian_symbol(wavenumbers: np.ndarray, alpha: float) -> np.ndarray:
    """|p|^α con el modo p = 0 anulado"""
    return np.abs(wavenumbers) ** alpha


def weyl_symbol(wavenumbers: np.ndarray, alpha: float, side: WeylSide) -> np.ndarray:
    """
    Símbolo de Fourier de la derivada de Weyl

    plus: (−ip)^α = |p|^α·e^(−iπα·sgn(p)/2)
    minus: (ip)^α = |p|^α·e^(+iπα·sgn(p)/2)
    """
    phase = -1.0 if WeylSide(side) == WeylSide.PLUS else 1.0
    return np.abs(wavenumbers) ** alpha * np.exp(0.5j * phase * np.pi * alpha * np.sign(wavenumbers))


def frac_laplacian(g: GridFunction, alpha: float) -> GridFunction:
    """
    (−∇²)^(α/2) g: coeficientes de Fourier multiplicados por |2πk/L|^α

    Exacto sobre funciones de banda limitada. Las ondas planas son autofunciones.

    Raises:
        DomainError: α fuera de (0, 2]
    """
    _validate_order(alpha)
    return _apply_symbol(g, laplacian_symbol(g.wavenumbers, alpha))


def weyl_derivative(g: GridFunction, alpha: float, side: WeylSide) -> GridFunction:
    """
    Derivada de Weyl de orden α en el eje infinito, realizada sobre la malla periódica

    minus(α/2) ∘ plus(α/2) reproduce frac_laplacian(α).
    """
    _validate_order(alpha)
    return _apply_symbol(g, weyl_symbol(g.wavenumbers, alpha, side))


def frac_laplacian_nd(values: np.ndarray, lengths: Sequence[float], alpha: float) -> np.ndarray:
    """
    (−∇²)^(α/2) sobre una caja periódica n-dimensional

    Args:
        values: Muestras de forma (M₁, …, M_n), cada M_i potencia de dos ≥ 4
        lengths: Longitudes L_i de la caja
        alpha: Orden en (0, 2]

    Returns:
        Arreglo complejo con los coeficientes multiplicados por (Σ p_i²)^(α/2)
    """
    _validate_order(alpha)
    samples = np.asarray(values, dtype=np.complex128)
    if samples.ndim != len(lengths):
        raise DomainError("Se requiere una longitud por eje")
    for size, length in zip(samples.shape, lengths):
        if size < 4 or size & (size - 1):
            raise DomainError(f"Cada eje debe tener potencia de dos ≥ 4 muestras (llegó {size})")
        if not (length > 0.0 and np.isfinite(length)):
            raise DomainError("Las longitudes deben ser positivas y finitas")
    if not np.all(np.isfinite(samples)):
        raise DomainError("La función contiene valores no finitos")

    axes = [2.0 * np.pi * np.fft.fftfreq(size, d=length / size) for size, length in zip(samples.shape, lengths)]
    grids = np.meshgrid(*axes, indexing="ij")
    squared = sum(component ** 2 for component in grids)
    return np.fft.ifftn(squared ** (0.5 * alpha) * np.fft.fftn(samples))


def plane_wave(domain_length: float, size: int, mode: int) -> GridFunction:
    """e^(i·2πk·x/L) muestreada en la malla"""
    grid = GridFunction(domain_length, np.zeros(size))
    return grid.with_values(np.exp(2j * np.pi * mode * grid.x / domain_length))


def quadratic_form(g: GridFunction, alpha: float) -> complex:
    """
    ⟨g, (−∇²)^(α/2) g⟩ = h·Σ conj(g_j)·(Lg)_j

    Real y no negativa salvo redondeo: el operador es autoadjunto y positivo.
    """
    image = frac_laplacian(g, alpha)
    return complex(g.spacing * np.vdot(g.values, image.values))


def fft_roundtrip_error(g: GridFunction) -> float:
    """max |ifft(fft(g)) − g|"""
    return float(np.max(np.abs(np.fft.ifft(np.fft.fft(g.values)) - g.values)))
