"""
Fluctuaciones cuánticas alrededor del camino clásico
Matriz de segundas diferencias de tamaño N−1 y su base de modos seno.
"""

import numpy as np

from app.utils.exceptions import DomainError


def second_difference_matrix(N: int) -> np.ndarray:
    """tridiag(−1, 2, −1) de tamaño (N−1)×(N−1)"""
    if N < 2:
        raise DomainError("Se requiere N ≥ 2")
    size = N - 1
    return 2.0 * np.eye(size) - np.eye(size, k=1) - np.eye(size, k=-1)


def fluctuation_determinant(N: int) -> float:
    """
    det de la matriz de segundas diferencias; vale N

    El producto de integrales gaussianas sobre q₁…q_{N−1} da el factor 1/√N.
    """
    return float(np.linalg.det(second_difference_matrix(N)))


def fluctuation_modes(N: int) -> np.ndarray:
    """O_k^m = √(2/N)·sin(k·m·π/N), k, m = 1..N−1 (ortogonal)"""
    if N < 2:
        raise DomainError("Se requiere N ≥ 2")
    index = np.arange(1, N)
    return np.sqrt(2.0 / N) * np.sin(np.outer(index, index) * np.pi / N)


def fluctuation_eigenvalues(N: int) -> np.ndarray:
    """Autovalores 2 − 2cos(mπ/N) asociados a cada modo"""
    if N < 2:
        raise DomainError("Se requiere N ≥ 2")
    return 2.0 - 2.0 * np.cos(np.arange(1, N) * np.pi / N)
