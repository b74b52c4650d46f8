"""
Schemas de exportación
Tabla de resultados independiente del formato de salida
"""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ResultTable(BaseModel):
    """
    Encabezado + filas + líneas de comentario previas al encabezado

    Cada fila debe tener tantas celdas como columnas el encabezado
    (salvo tablas sin encabezado, como el volcado de muestras).
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    header: list[str] = Field(default_factory=list)
    rows: list[tuple[Any, ...]] = Field(default_factory=list)
    comments: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_shape(self) -> "ResultTable":
        if self.header:
            width = len(self.header)
            for index, row in enumerate(self.rows):
                if len(row) != width:
                    raise ValueError(f"La fila {index} tiene {len(row)} celdas; se esperaban {width}")
        return self
