"""
Selección de ruta de evaluación de la densidad
"""

from app.services.routing.density_router import DensityRouter, HFOX_REDUCED_LIMIT

__all__ = ["DensityRouter", "HFOX_REDUCED_LIMIT"]
