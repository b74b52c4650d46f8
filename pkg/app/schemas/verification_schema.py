"""
Schemas de verificación
"""

import math

from pydantic import BaseModel, ConfigDict


class CheckResult(BaseModel):
    """Fila (check_name, observed, threshold, pass) de una suite de verificación"""
    model_config = ConfigDict(frozen=True)

    check_name: str
    observed: float = math.nan
    threshold: float
    passed: bool

    def as_row(self) -> tuple:
        return self.check_name, self.observed, self.threshold, self.passed
