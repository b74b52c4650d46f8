"""
Patrón Strategy - Implementación concreta para exportación a CSV

Separador coma, fin de línea LF, UTF-8 sin BOM y números con 17 cifras
significativas: dos corridas con la misma configuración producen archivos
idénticos byte a byte.
"""

import csv
from io import StringIO

from app.schemas.export_schema import ResultTable
from app.services.export.export_strategy import ExportStrategy
from app.utils.formatting import serialize_row


class CSVExportStrategy(ExportStrategy):
    """
    Concrete Strategy - Exportación a CSV

    Las líneas de comentario se escriben antes del encabezado con prefijo '# '.
    """

    def __init__(self, delimiter: str = ","):
        self.delimiter = delimiter
        self.encoding = "utf-8"

    def export(self, table: ResultTable) -> str:
        self.validate_table(table)

        buffer = StringIO()
        for comment in table.comments:
            buffer.write(f"# {comment}\n")

        writer = csv.writer(
            buffer,
            delimiter=self.delimiter,
            quoting=csv.QUOTE_MINIMAL,
            lineterminator="\n",
        )
        if table.header:
            writer.writerow(table.header)
        for row in table.rows:
            writer.writerow(serialize_row(row))

        return buffer.getvalue()

    def extension(self) -> str:
        return "csv"
