"""
Schemas - Modelos de validación (Pydantic)
Tipos de dominio inmutables con sus invariantes
"""
from app.schemas.core_schema import StableParams, PhysicalParams, EvalResult
from app.schemas.oscquad_schema import OscIntegrand, QuadResult
from app.schemas.propagator_schema import DensityQuery
from app.schemas.hfox_schema import HFoxSpec
from app.schemas.asymlag_schema import SaddleInput

__all__ = [
    'StableParams',
    'PhysicalParams',
    'EvalResult',
    'OscIntegrand',
    'QuadResult',
    'DensityQuery',
    'HFoxSpec',
    'SaddleInput',
]
