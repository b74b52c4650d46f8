"""
Formato de celdas para los archivos de resultados
Punto decimal, 17 cifras significativas (ida y vuelta exacta de float64).
"""

import math
from enum import Enum
from typing import Any, Iterable

import numpy as np
from pydantic import BaseModel


def format_number(value: float) -> str:
    """'%.17g'; inf y nan en minúsculas"""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return "%.17g" % value


def serialize_cell(value: Any) -> str:
    """
    Convierte un valor a texto de celda

    - None → celda vacía
    - bool → true / false
    - Enum → su valor
    - enteros → decimal
    - reales (incluidos numpy) → format_number
    """
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_number(float(value))
    if isinstance(value, BaseModel):
        return serialize_cell(value.model_dump())
    return str(value)


def serialize_row(values: Iterable[Any]) -> list[str]:
    return [serialize_cell(value) for value in values]
