"""
Configuración de la aplicación
Lee variables de entorno con prefijo LEVY_ (y un archivo .env cargado por main)

Variables de entorno:
    LEVY_WORKERS: Número de hilos para evaluar puntos en paralelo (default: 4)
    LEVY_LOG_LEVEL: Nivel de logging (default: WARNING)
    LEVY_DEFAULT_TOL: Tolerancia absoluta por defecto (default: 1e-10)
    LEVY_PANEL_BUDGET: Máximo de paneles en oscquad (default: 200)
    LEVY_EXTRAPOLATION_DEPTH: Profundidad de aceleración (default: 20)
    LEVY_SERIES_MAX_TERMS: Tope de términos de la serie de residuos (default: 400)
    LEVY_BLOCK_SIZE: Variables por bloque del generador (default: 65536)
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Parámetros globales; los flags de la CLI tienen prioridad sobre estos valores"""

    model_config = SettingsConfigDict(env_prefix="LEVY_", extra="ignore")

    workers: int = Field(4, ge=1, le=256)
    log_level: str = "WARNING"
    default_tol: float = Field(1e-10, gt=0)
    panel_budget: int = Field(200, ge=1)
    extrapolation_depth: int = Field(20, ge=1)
    series_max_terms: int = Field(400, ge=1)
    block_size: int = Field(65536, ge=1024)


@lru_cache
def get_settings() -> Settings:
    """Instancia única de configuración (se construye en el primer uso)"""
    return Settings()
