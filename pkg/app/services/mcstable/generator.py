"""
Generador de variables α-estables simétricas
Transformación de Chambers–Mallows–Stuck sobre Philox (numpy), en bloques con
contador saltado: el bloque k usa Philox(seed).jumped(k), de modo que la salida
no depende del número de hilos.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from app.models.sample_batch import SampleBatch
from app.settings import get_settings
from app.utils.constants import GENERATOR_ID
from app.utils.exceptions import DomainError

logger = logging.getLogger(__name__)

SEED_LIMIT = 2 ** 64


def block_generator(seed: int, block_index: int) -> np.random.Generator:
    """Generator sobre el subflujo k del contador de Philox"""
    return np.random.Generator(np.random.Philox(seed).jumped(block_index))


def standard_stable(alpha: float, rng: np.random.Generator, size: int) -> np.ndarray:
    """
    Variables con función característica e^(−|p|^α)

    α = 1 y α = 2 usan sus ramas exactas (Cauchy y normal de varianza 2).
    """
    if alpha == 2.0:
        return math.sqrt(2.0) * rng.standard_normal(size)

    angle = rng.uniform(-0.5 * np.pi, 0.5 * np.pi, size)
    if alpha == 1.0:
        return np.tan(angle)

    weight = rng.standard_exponential(size)
    return (
        np.sin(alpha * angle) / np.cos(angle) ** (1.0 / alpha)
        * (np.cos((1.0 - alpha) * angle) / weight) ** ((1.0 - alpha) / alpha)
    )


def sample(
        alpha: float,
        a: float,
        count: int,
        seed: int,
        workers: Optional[int] = None,
        block_size: Optional[int] = None,
) -> SampleBatch:
    """
    Muestra reproducible de la ley con función característica e^(−a|p|^α)

    Args:
        alpha: Exponente en (0, 2]
        a: Escala reducida > 0
        count: Número de variables (≥ 1)
        seed: Semilla de 64 bits sin signo
        workers: Hilos (default: Settings.workers)
        block_size: Variables por bloque (default: Settings.block_size)

    Returns:
        SampleBatch; (alpha, a, seed, count) determina las variables bit a bit
    """
    if count < 1:
        raise DomainError("count debe ser ≥ 1")
    if not (0.0 < alpha <= 2.0) or not (a > 0.0):
        raise DomainError("Se requiere 0 < α ≤ 2 y a > 0")
    if not (0 <= seed < SEED_LIMIT):
        raise DomainError("La semilla debe ser un entero de 64 bits sin signo")

    settings = get_settings()
    workers = workers or settings.workers
    block_size = block_size or settings.block_size
    blocks = -(-count // block_size)
    scale = a ** (1.0 / alpha)

    def draw_block(index: int) -> np.ndarray:
        size = min(block_size, count - index * block_size)
        return standard_stable(alpha, block_generator(seed, index), size)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        pieces = list(pool.map(draw_block, range(blocks)))

    draws = scale * np.concatenate(pieces)
    logger.info(f"✅ {count} variables α={alpha:g} a={a:g} seed={seed} en {blocks} bloques")
    return SampleBatch(alpha=alpha, a=a, seed=seed, draws=draws, generator=GENERATOR_ID)


def flight_positions(alpha: float, a: float, steps: int, walkers: int, seed: int) -> np.ndarray:
    """
    Vuelo de Lévy 1D: posiciones acumuladas de `walkers` caminantes

    Cada salto tiene escala a/steps; por estabilidad la posición final sigue P(·; α, a).

    Returns:
        Arreglo (walkers, steps) de posiciones tras cada salto
    """
    if steps < 1 or walkers < 1:
        raise DomainError("steps y walkers deben ser ≥ 1")
    jumps = sample(alpha, a / steps, steps * walkers, seed).draws.reshape(walkers, steps)
    return np.cumsum(jumps, axis=1)
