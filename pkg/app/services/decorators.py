import logging
import time
from typing import Any

logger = logging.getLogger(__name__)


class TimingDecorator:
    """
    Patron Decorator: agrega una capa de registro al método execute()
    de un servicio que sigue el patrón Template Method.
    Registra el tiempo de ejecución y el tamaño del resultado.
    """

    def __init__(self, service: Any):
        """
        Args:
            service: instancia del servicio que implementa el método execute()
        """
        self._service = service

    def execute(self) -> Any:
        name = self._service.__class__.__name__
        logger.info(f"▶️ {name}: inicio")
        started = time.perf_counter()
        result = self._service.execute()
        elapsed = time.perf_counter() - started
        size = len(result) if hasattr(result, "__len__") else None
        logger.info(f"✅ {name}: {elapsed:.3f}s filas={size}")
        return result
