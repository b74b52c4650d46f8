"""
Excepciones del sistema
Jerarquía común para todos los módulos numéricos; el controlador CLI
las traduce a códigos de salida (1 = validación, 2 = no convergencia)
"""

from typing import Optional


class LevyError(Exception):
    """Excepción base de la librería"""
    pass


class DomainError(LevyError, ValueError):
    """Argumento fuera del dominio de la operación (polos, r = 0 en formas singulares, α inválido)"""
    pass


class ConvergenceError(LevyError, ArithmeticError):
    """
    Un proceso iterativo (paneles, serie, contorno) no alcanzó la tolerancia

    Attributes:
        best_estimate: Mejor valor obtenido antes de abandonar
        abs_err_estimate: Error absoluto estimado de ese valor
    """

    def __init__(
            self,
            message: str,
            best_estimate: Optional[float] = None,
            abs_err_estimate: Optional[float] = None
    ):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.abs_err_estimate = abs_err_estimate


class NumericOverflowError(LevyError, OverflowError):
    """Resultado fuera del rango representable en doble precisión"""
    pass


class UnsupportedError(LevyError, NotImplementedError):
    """Caso matemático no soportado por el motor (p. ej. polos de orden superior)"""
    pass
