"""
Exportación de resultados (patrón Strategy)
"""

from app.services.export.export_strategy import ExportStrategy
from app.services.export.csv_export_strategy import CSVExportStrategy
from app.services.export.export_context import ExportContext
from app.services.export.export_service import samples_table, write_samples_csv

__all__ = [
    "ExportStrategy",
    "CSVExportStrategy",
    "ExportContext",
    "samples_table",
    "write_samples_csv",
]
