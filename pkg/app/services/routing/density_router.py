"""
Patrón Strategy - Selección de ruta de evaluación del propagador

Cada RouteMethod es una estrategia (x, params, n, tol) → EvalResult. La ruta
automática usa el pico exacto en x = 0, la serie H para |x|·a^(−1/α) ≤ 10 y la
cuadratura en el resto; la cola solo se usa si se pide explícitamente.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Sequence

from app.schemas.core_schema import EvalResult, StableParams
from app.schemas.propagator_schema import DensityQuery
from app.services.asymlag import saddle_density, tail_density
from app.services.hfox import stable_density_hfox
from app.services.propagator import density_1d, density_nd, peak_value, peak_value_nd
from app.settings import get_settings
from app.utils.constants import DEFAULT_TOL, EvalMethod, RouteMethod
from app.utils.exceptions import DomainError

logger = logging.getLogger(__name__)

EPS = 2.220446049250313e-16
# Frontera serie H / cuadratura en unidades de a^(1/α)
HFOX_REDUCED_LIMIT = 10.0

RouteFunction = Callable[[float, StableParams, int, float], EvalResult]


def _require_1d(n: int, method: RouteMethod) -> None:
    if n != 1:
        raise DomainError(f"La ruta '{method.value}' solo está disponible en 1D")


def _peak_route(x: float, params: StableParams, n: int, tol: float) -> EvalResult:
    if x != 0.0:
        raise DomainError("La ruta 'peak' solo está definida en x = 0")
    value = peak_value(params) if n == 1 else peak_value_nd(n, params)
    return EvalResult(value=value, abs_err_estimate=8.0 * EPS * value, method=EvalMethod.PEAK)


def _quad_route(x: float, params: StableParams, n: int, tol: float) -> EvalResult:
    query = DensityQuery(r=abs(x), n=n, params=params, tol=tol)
    return density_1d(query) if n == 1 else density_nd(query)


def _hfox_route(x: float, params: StableParams, n: int, tol: float) -> EvalResult:
    _require_1d(n, RouteMethod.HFOX)
    return stable_density_hfox(x, params, tol)


def _tail_route(x: float, params: StableParams, n: int, tol: float) -> EvalResult:
    _require_1d(n, RouteMethod.TAIL)
    return EvalResult(value=tail_density(x, params), abs_err_estimate=math.inf, method=EvalMethod.TAIL)


def _saddle_route(x: float, params: StableParams, n: int, tol: float) -> EvalResult:
    _require_1d(n, RouteMethod.SADDLE)
    return saddle_density(x, params)


class DensityRouter:
    """
    Context del patrón Strategy para las rutas de densidad

    La tabla de estrategias se puede ampliar con register().
    """

    def __init__(self):
        self._routes: dict[RouteMethod, RouteFunction] = {
            RouteMethod.PEAK: _peak_route,
            RouteMethod.QUAD: _quad_route,
            RouteMethod.HFOX: _hfox_route,
            RouteMethod.TAIL: _tail_route,
            RouteMethod.SADDLE: _saddle_route,
        }

    def register(self, method: RouteMethod, route: RouteFunction) -> None:
        self._routes[method] = route

    def select(self, x: float, params: StableParams, n: int = 1) -> RouteMethod:
        """Ruta automática para un punto"""
        if x == 0.0:
            return RouteMethod.PEAK
        if n == 1 and params.alpha > 1.0 and abs(x) / params.width <= HFOX_REDUCED_LIMIT:
            return RouteMethod.HFOX
        return RouteMethod.QUAD

    def evaluate(
            self,
            x: float,
            params: StableParams,
            method: RouteMethod = RouteMethod.AUTO,
            n: int = 1,
            tol: float = DEFAULT_TOL,
    ) -> EvalResult:
        """
        Evalúa P(x) por la ruta indicada

        Raises:
            DomainError: Ruta no definida para (x, α, n)
            ConvergenceError: Propagado desde la ruta
        """
        method = RouteMethod(method)
        if method == RouteMethod.AUTO:
            method = self.select(x, params, n)
            logger.debug(f"auto: x={x:g} → {method.value}")
        return self._routes[method](x, params, n, tol)

    def evaluate_many(
            self,
            points: Sequence[float],
            params: StableParams,
            method: RouteMethod = RouteMethod.AUTO,
            n: int = 1,
            tol: float = DEFAULT_TOL,
            workers: Optional[int] = None,
    ) -> list[EvalResult]:
        """Evalúa en paralelo; el orden de salida es el de entrada"""
        workers = workers or get_settings().workers
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda x: self.evaluate(x, params, method, n, tol), points))
