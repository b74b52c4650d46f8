"""
Tests Unitarios - Exportación de resultados
============================================
Pruebas del patrón Strategy de exportación CSV y del formato de celdas.
Cubre: Formato numérico, Encabezado y comentarios, Archivo y stdout, Volcado de muestras.
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from app.models.sample_batch import SampleBatch
from app.schemas.export_schema import ResultTable
from app.services.export import CSVExportStrategy, ExportContext, samples_table, write_samples_csv
from app.utils.constants import EvalMethod
from app.utils.formatting import format_number, serialize_cell


class TestExportService:
    """Tests esenciales de la exportación"""

    @pytest.mark.parametrize(
        "value, expected",
        [
            (0.5, "0.5"),
            (2.0, "2"),
            (0.1, "0.10000000000000001"),
            (math.inf, "inf"),
            (-math.inf, "-inf"),
            (math.nan, "nan"),
        ],
    )
    def test_format_number(self, value, expected):
        """17 cifras significativas y valores especiales en minúsculas"""

        # Act & Assert
        assert format_number(value) == expected

    @pytest.mark.parametrize(
        "value, expected",
        [
            (None, ""),
            (True, "true"),
            (np.bool_(False), "false"),
            (EvalMethod.PEAK, "peak"),
            (7, "7"),
            (np.float64(1.5), "1.5"),
        ],
    )
    def test_serialize_cell(self, value, expected):
        """Conversión de cada tipo de celda"""

        # Act & Assert
        assert serialize_cell(value) == expected

    def test_csv_export(self):
        """Comentarios, encabezado y filas con LF"""

        # Arrange
        table = ResultTable(
            header=["x", "value", "method"],
            rows=[(0.0, 0.25, EvalMethod.PEAK), (1.0, None, EvalMethod.TAIL)],
            comments=["alpha=1.5"],
        )

        # Act
        content = CSVExportStrategy().export(table)

        # Assert
        assert content == "# alpha=1.5\nx,value,method\n0,0.25,peak\n1,,tail\n"

    def test_table_rejects_ragged_rows(self):
        """Cada fila tiene tantas celdas como columnas"""

        # Act & Assert
        with pytest.raises(ValidationError, match="celdas"):
            ResultTable(header=["x", "value"], rows=[(1.0,)])

    def test_context_writes_file(self, tmp_path):
        """ExportContext escribe el archivo de salida"""

        # Arrange
        path = tmp_path / "out.csv"
        table = ResultTable(header=["x"], rows=[(1.0,), (2.0,)])

        # Act
        ExportContext().write(table, path)

        # Assert
        assert path.read_text(encoding="utf-8") == "x\n1\n2\n"

    def test_context_writes_stdout(self, capsys):
        """Sin ruta se escribe en la salida estándar"""

        # Arrange
        table = ResultTable(header=["pass"], rows=[(True,)])

        # Act
        ExportContext().write(table)

        # Assert
        assert capsys.readouterr().out == "pass\ntrue\n"

    def test_context_unwritable_path(self, tmp_path):
        """Una ruta no escribible propaga OSError"""

        # Arrange
        path = tmp_path / "missing" / "out.csv"

        # Act & Assert
        with pytest.raises(OSError):
            ExportContext().write(ResultTable(header=["x"], rows=[]), path)

    def test_samples_table(self):
        """El volcado lleva α, a, semilla y generador en la cabecera"""

        # Arrange
        batch = SampleBatch(alpha=1.5, a=1.0, seed=7, draws=np.array([0.5, -2.0]))

        # Act
        table = samples_table(batch)

        # Assert
        assert table.comments == ["alpha=1.5,a=1,seed=7,generator=philox4x64-numpy"]
        assert table.header == ["draw"]
        assert table.rows == [(0.5,), (-2.0,)]

    def test_write_samples_csv_is_reproducible(self, tmp_path):
        """Dos volcados del mismo lote son idénticos byte a byte"""

        # Arrange
        batch = SampleBatch(alpha=1.2, a=2.0, seed=3, draws=np.array([0.1, 0.2, 0.3]))
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"

        # Act
        write_samples_csv(batch, first)
        write_samples_csv(batch, second)

        # Assert
        assert first.read_bytes() == second.read_bytes()
        assert first.read_text(encoding="utf-8").splitlines()[1:3] == ["draw", "0.10000000000000001"]
