"""
Patrón Strategy - Interface para estrategias de exportación de resultados

Cada estrategia convierte una ResultTable en el texto de un formato concreto,
de modo que los subcomandos no dependen del formato de salida.
"""

from abc import ABC, abstractmethod

from app.schemas.export_schema import ResultTable


class ExportStrategy(ABC):
    """Contrato común de las estrategias de exportación"""

    @abstractmethod
    def export(self, table: ResultTable) -> str:
        """
        Serializa la tabla

        Raises:
            ValueError: Si la tabla está vacía
        """

    @abstractmethod
    def extension(self) -> str:
        """Extensión de archivo (ej: "csv")"""

    def validate_table(self, table: ResultTable) -> None:
        if not table.header and not table.rows:
            raise ValueError("La tabla no tiene encabezado ni filas")
