import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable

from pydantic import ValidationError

from app.schemas.verification_schema import CheckResult
from app.utils.exceptions import LevyError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    """
    Comprobación numérica: `measure` devuelve el valor observado, que se compara
    con `threshold` (observed ≤ threshold salvo que `greater` sea True).
    """
    name: str
    measure: Callable[[], float]
    threshold: float
    greater: bool = False

    def passes(self, observed: float) -> bool:
        if math.isnan(observed):
            return False
        return observed > self.threshold if self.greater else observed <= self.threshold


class VerificationTemplate(ABC):
    """
    Template Method para las suites de verificación.
    Define un flujo estandarizado que las subclases deben seguir:
    1. validate()      -> Validar los parámetros de la suite.
    2. prepare()       -> Construir la lista de comprobaciones.
    3. run()           -> Medir cada comprobación (los fallos numéricos se registran como pass = false).
    4. post_process()  -> (Opcional) Resumen en el log.
    """

    def execute(self) -> list[CheckResult]:
        self.validate()
        checks = self.prepare()
        results = self.run(checks)
        self.post_process(results)
        return results

    @abstractmethod
    def validate(self) -> None:
        """Validaciones previas de los parámetros"""
        ...

    @abstractmethod
    def prepare(self) -> list[Check]:
        """Comprobaciones de la suite"""
        ...

    def run(self, checks: list[Check]) -> list[CheckResult]:
        results = []
        for check in checks:
            try:
                observed = float(check.measure())
            except (LevyError, ValidationError) as error:
                logger.warning(f"⚠️ {check.name}: {type(error).__name__}: {error}")
                observed = math.nan
            results.append(CheckResult(
                check_name=check.name,
                observed=observed,
                threshold=check.threshold,
                passed=check.passes(observed),
            ))
        return results

    def post_process(self, results: list[CheckResult]) -> None:
        failed = [result.check_name for result in results if not result.passed]
        if failed:
            logger.warning(f"⚠️ {self.__class__.__name__}: fallan {', '.join(failed)}")
        else:
            logger.info(f"✅ {self.__class__.__name__}: {len(results)} comprobaciones correctas")
