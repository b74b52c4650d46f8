"""
Controller - Interfaz de línea de comandos
Subcomandos density, table, verify, sample, residual y saddle-regime; cada uno
escribe un CSV con encabezado en --output o en stdout.

Códigos de salida: 0 éxito, 1 validación (flags, rangos, ruta de salida), 2 no convergencia.
"""

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from app.schemas.core_schema import StableParams
from app.schemas.export_schema import ResultTable
from app.schemas.propagator_schema import DensityQuery
from app.schemas.run_config_schema import RunConfig
from app.services.asymlag import saddle_density
from app.services.decorators import TimingDecorator
from app.services.export import ExportContext, samples_table
from app.services.fracops import diffusion_residual_table
from app.services.mcstable import sample
from app.services.propagator import density_1d
from app.services.routing import DensityRouter
from app.services.verification import SuiteFactory
from app.settings import get_settings
from app.utils.constants import ExitCode, RouteMethod, Subcommand, VerifySuite
from app.utils.exceptions import ConvergenceError, LevyError, NumericOverflowError

logger = logging.getLogger(__name__)

# Flags cuyo nombre difiere del campo de RunConfig
FLAG_TO_FIELD = {"x": "points"}
TABLE_ROUTES = (RouteMethod.QUAD, RouteMethod.HFOX, RouteMethod.TAIL, RouteMethod.SADDLE)


class UsageError(LevyError):
    """Flags desconocidos o mal formados"""


class CliArgumentParser(argparse.ArgumentParser):
    """argparse que reporta los errores con excepción (exit 1) en lugar de exit 2"""

    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> CliArgumentParser:
    common = CliArgumentParser(add_help=False)
    common.add_argument("--config", help="Archivo key=value con valores por defecto")
    common.add_argument("--alpha", type=float)
    common.add_argument("--a", type=float, help="Escala reducida a = c·t")
    common.add_argument("--hbar", type=float)
    common.add_argument("--mass", type=float)
    common.add_argument("--time", type=float)
    common.add_argument("--n", type=int, help="Dimensión")
    common.add_argument("--x", help="Puntos: lista '0,1,5' o rango 'inicio:fin:paso'")
    common.add_argument("--method", choices=[method.value for method in RouteMethod])
    common.add_argument("--tol", type=float)
    common.add_argument("--seed", type=int)
    common.add_argument("--count", type=int)
    common.add_argument("--suite", choices=[suite.value for suite in VerifySuite])
    common.add_argument("--delta", type=float)
    common.add_argument("--alpha-grid", dest="alpha_grid")
    common.add_argument("--rho-grid", dest="rho_grid")
    common.add_argument("--workers", type=int)
    common.add_argument("--output", help="Archivo CSV de salida (stdout si se omite)")

    parser = CliArgumentParser(prog="levyprop", description="Propagadores de vuelos de Lévy")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for subcommand in Subcommand:
        subparsers.add_parser(subcommand.value, parents=[common])
    return parser


def load_config_file(path: str) -> dict[str, str]:
    """
    Lee líneas key=value (las vacías y las que empiezan por '#' se ignoran)

    Raises:
        UsageError: Línea sin '='
        OSError: Archivo ilegible
    """
    values = {}
    for number, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{number}: se esperaba key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        values[FLAG_TO_FIELD.get(key, key)] = value
    return values


def build_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """Combina archivo de configuración y flags; los flags tienen prioridad"""
    arguments = vars(build_parser().parse_args(argv))
    config_path = arguments.pop("config")
    merged = load_config_file(config_path) if config_path else {}
    merged.pop("subcommand", None)
    for key, value in arguments.items():
        if value is not None:
            merged[FLAG_TO_FIELD.get(key, key)] = value
    if "tol" not in merged:
        merged["tol"] = get_settings().default_tol
    return RunConfig(**merged)


def _density_table(config: RunConfig) -> ResultTable:
    results = DensityRouter().evaluate_many(
        config.points, config.params, config.method, config.n, config.tol, config.workers
    )
    rows = [(x, result.value, result.abs_err_estimate, result.method) for x, result in zip(config.points, results)]
    return ResultTable(header=["x", "value", "abs_err", "method"], rows=rows)


def _table_row(router: DensityRouter, x: float, config: RunConfig) -> tuple:
    params = config.params
    row = [x]
    for method in TABLE_ROUTES:
        try:
            result = router.evaluate(x, params, method, config.n, config.tol)
            row.append(None if result.degenerate else result.value)
        except LevyError as error:
            if method == RouteMethod.QUAD:
                raise
            logger.debug(f"table: {method.value} no definida en x={x:g} ({error})")
            row.append(None)
    return tuple(row)


def _comparison_table(config: RunConfig) -> ResultTable:
    router = DensityRouter()
    with ThreadPoolExecutor(max_workers=config.workers or get_settings().workers) as pool:
        rows = list(pool.map(lambda x: _table_row(router, x, config), config.points))
    return ResultTable(header=["x", "quadrature", "hfox", "tail", "saddle"], rows=rows)


def _verify_table(config: RunConfig) -> ResultTable:
    rows = []
    for suite in SuiteFactory.create(config.suite, config.alpha, config.seed, config.tol):
        rows.extend(result.as_row() for result in TimingDecorator(suite).execute())
    return ResultTable(header=["check_name", "observed", "threshold", "pass"], rows=rows)


def _sample_table(config: RunConfig) -> ResultTable:
    params = config.params
    batch = sample(params.alpha, params.a, config.count, config.seed, config.workers)
    return samples_table(batch)


def _residual_table(config: RunConfig) -> ResultTable:
    rows = diffusion_residual_table(config.params, config.points, config.delta)
    return ResultTable(header=["x", "fd_dt", "quad_dt", "abs_diff"], rows=[tuple(row) for row in rows])


def _saddle_cell(alpha: float, rho: float, a: float, tol: float) -> tuple:
    params = StableParams(alpha=alpha, a=a)
    x = (a / rho) ** (1.0 / alpha)
    exact = density_1d(DensityQuery(r=x, n=1, params=params, tol=tol)).value
    approximation = saddle_density(x, params).value
    return alpha, rho, abs(approximation - exact) / exact


def _saddle_regime_table(config: RunConfig) -> ResultTable:
    a = config.params.a
    cells = [(alpha, rho) for alpha in config.alpha_grid for rho in config.rho_grid]
    with ThreadPoolExecutor(max_workers=config.workers or get_settings().workers) as pool:
        rows = list(pool.map(lambda cell: _saddle_cell(cell[0], cell[1], a, config.tol), cells))
    return ResultTable(header=["alpha", "rho", "rel_error"], rows=rows)


HANDLERS = {
    Subcommand.DENSITY: _density_table,
    Subcommand.TABLE: _comparison_table,
    Subcommand.VERIFY: _verify_table,
    Subcommand.SAMPLE: _sample_table,
    Subcommand.RESIDUAL: _residual_table,
    Subcommand.SADDLE_REGIME: _saddle_regime_table,
}


def run(config: RunConfig) -> int:
    """
    Ejecuta un subcomando ya validado

    Returns:
        Código de salida (ExitCode)
    """
    try:
        table = HANDLERS[config.subcommand](config)
        ExportContext().write(table, config.output)
        return ExitCode.OK

    except (ConvergenceError, NumericOverflowError) as error:
        logger.error(f"❌ {config.subcommand.value}: {error}")
        print(f"error: {error}", file=sys.stderr)
        return ExitCode.NON_CONVERGENCE

    except (LevyError, ValidationError, ValueError, OSError) as error:
        message = str(error).splitlines()[0]
        logger.error(f"❌ {config.subcommand.value}: {message}")
        print(f"error: {message}", file=sys.stderr)
        return ExitCode.VALIDATION


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Punto de entrada: parsea, valida y ejecuta"""
    try:
        config = build_config(argv)
    except (LevyError, ValidationError, ValueError, OSError) as error:
        message = str(error).splitlines()[0]
        print(f"error: {message}", file=sys.stderr)
        return ExitCode.VALIDATION
    return run(config)
