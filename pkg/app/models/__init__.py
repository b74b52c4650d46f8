"""
Modelos de dominio (objetos valor inmutables con arreglos numpy)
"""

from app.models.grid_function import GridFunction
from app.models.sample_batch import SampleBatch

__all__ = [
    'GridFunction',
    'SampleBatch',
]
