"""
Servicio de exportación de muestras
Volcado CSV de un SampleBatch: cabecera con α, a, semilla y generador, una variable por línea.
"""

from pathlib import Path
from typing import Optional, Union

from app.models.sample_batch import SampleBatch
from app.schemas.export_schema import ResultTable
from app.services.export.export_context import ExportContext
from app.utils.formatting import format_number


def samples_table(batch: SampleBatch) -> ResultTable:
    header = (
        f"alpha={format_number(batch.alpha)},a={format_number(batch.a)},"
        f"seed={batch.seed},generator={batch.generator}"
    )
    return ResultTable(comments=[header], header=["draw"], rows=[(float(value),) for value in batch.draws])


def write_samples_csv(batch: SampleBatch, path: Optional[Union[str, Path]] = None) -> None:
    """
    Escribe el lote como CSV

    Raises:
        OSError: Si la ruta no se puede escribir
    """
    ExportContext().write(samples_table(batch), path)
