"""
Verificación: suites de invariantes numéricos por módulo (patrón Template Method)
"""

from app.services.verification.profiles import density_profile, normalization_defect, semigroup_defect
from app.services.verification.suite_factory import SuiteFactory
from app.services.verification.suites import ModuleSuite

__all__ = [
    "density_profile",
    "normalization_defect",
    "semigroup_defect",
    "SuiteFactory",
    "ModuleSuite",
]
