"""
Patrón Factory Method - Creación de suites de verificación
"""

from app.services.verification.suites import (
    AsymlagSuite,
    CoreSuite,
    FracopsSuite,
    HfoxSuite,
    McstableSuite,
    ModuleSuite,
    OscquadSuite,
    PropagatorSuite,
    SpecfunSuite,
)
from app.utils.constants import DEFAULT_TOL, VerifySuite


class SuiteFactory:
    """Centraliza la correspondencia entre el nombre de la suite y su clase"""

    _SUITES: dict[VerifySuite, type[ModuleSuite]] = {
        VerifySuite.CORE: CoreSuite,
        VerifySuite.SPECFUN: SpecfunSuite,
        VerifySuite.OSCQUAD: OscquadSuite,
        VerifySuite.PROPAGATOR: PropagatorSuite,
        VerifySuite.HFOX: HfoxSuite,
        VerifySuite.ASYMLAG: AsymlagSuite,
        VerifySuite.FRACOPS: FracopsSuite,
        VerifySuite.MCSTABLE: McstableSuite,
    }

    @classmethod
    def create(cls, suite: VerifySuite, alpha: float, seed: int = 0, tol: float = DEFAULT_TOL) -> list[ModuleSuite]:
        """
        Args:
            suite: Nombre de la suite; `all` devuelve todas en orden de dependencia

        Returns:
            Lista de suites listas para execute()
        """
        suite = VerifySuite(suite)
        if suite == VerifySuite.ALL:
            return [suite_class(alpha, seed, tol) for suite_class in cls._SUITES.values()]
        return [cls._SUITES[suite](alpha, seed, tol)]
