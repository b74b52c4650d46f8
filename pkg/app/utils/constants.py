"""
Constantes del sistema
"""

from enum import Enum


# Método que produjo un EvalResult
class EvalMethod(str, Enum):
    QUADRATURE = "quadrature"
    HFOX_SERIES = "hfox_series"
    HFOX_CONTOUR = "hfox_contour"
    TAIL = "tail"
    PEAK = "peak"
    SADDLE = "saddle"
    GAUSSIAN_CLOSED_FORM = "gaussian_closed_form"


# Núcleo oscilatorio de oscquad
class KernelType(str, Enum):
    COSINE = "cosine"
    SINE = "sine"
    BESSEL = "bessel"


# Lado de la derivada de Weyl
class WeylSide(str, Enum):
    PLUS = "plus"
    MINUS = "minus"


# Subcomandos de la CLI
class Subcommand(str, Enum):
    DENSITY = "density"
    TABLE = "table"
    VERIFY = "verify"
    SAMPLE = "sample"
    RESIDUAL = "residual"
    SADDLE_REGIME = "saddle-regime"


# Selección de ruta en `density`
class RouteMethod(str, Enum):
    AUTO = "auto"
    QUAD = "quad"
    HFOX = "hfox"
    TAIL = "tail"
    PEAK = "peak"
    SADDLE = "saddle"


# Suites de verificación
class VerifySuite(str, Enum):
    ALL = "all"
    CORE = "core"
    SPECFUN = "specfun"
    OSCQUAD = "oscquad"
    PROPAGATOR = "propagator"
    HFOX = "hfox"
    ASYMLAG = "asymlag"
    FRACOPS = "fracops"
    MCSTABLE = "mcstable"


# Códigos de salida de la CLI
class ExitCode:
    OK = 0
    VALIDATION = 1
    NON_CONVERGENCE = 2


# Identificador del generador aleatorio (se guarda junto a la semilla)
GENERATOR_ID = "philox4x64-numpy"

# Umbrales numéricos compartidos
R_MIN = 1e-8
DEFAULT_TOL = 1e-10
