"""
Patrón Strategy - Context para la exportación de resultados

Mantiene la estrategia activa y escribe el resultado en un archivo o en la
salida estándar.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Union

from app.schemas.export_schema import ResultTable
from app.services.export.csv_export_strategy import CSVExportStrategy
from app.services.export.export_strategy import ExportStrategy

logger = logging.getLogger(__name__)


class ExportContext:
    """Gestiona la estrategia de exportación activa (CSV por defecto)"""

    def __init__(self, strategy: Optional[ExportStrategy] = None):
        self._strategy = strategy or CSVExportStrategy()

    def set_strategy(self, strategy: ExportStrategy) -> None:
        self._strategy = strategy

    def export(self, table: ResultTable) -> str:
        return self._strategy.export(table)

    def write(self, table: ResultTable, path: Optional[Union[str, Path]] = None) -> None:
        """
        Escribe la tabla exportada

        Args:
            table: Resultados
            path: Archivo destino; None escribe en stdout

        Raises:
            OSError: Si el archivo no se puede escribir
        """
        content = self.export(table)
        if path is None:
            sys.stdout.write(content)
            sys.stdout.flush()
            return

        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(content)
        logger.info(f"✅ {len(table.rows)} filas escritas en {path}")
