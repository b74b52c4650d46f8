"""
Suites de verificación por módulo
Cada suite recorre los invariantes numéricos de su módulo con el α elegido y
produce filas (check_name, observed, threshold, pass).
"""

import cmath
import math

import numpy as np

from app.models.grid_function import GridFunction
from app.schemas.asymlag_schema import SaddleInput
from app.schemas.core_schema import PhysicalParams, StableParams
from app.schemas.oscquad_schema import OscIntegrand
from app.schemas.propagator_schema import DensityQuery
from app.services.asymlag import (
    classical_action,
    fluctuation_determinant,
    fluctuation_modes,
    saddle_density,
    saddle_exponent,
    saddle_residual,
    tail_density,
    tail_series,
)
from app.services.base_template import Check, VerificationTemplate
from app.services.core import reduce_physical, self_similar_rescale
from app.services.fracops import (
    diffusion_residual,
    fft_roundtrip_error,
    frac_laplacian,
    plane_wave,
    quadratic_form,
    weyl_derivative,
)
from app.services.hfox import (
    HFoxSpecFactory,
    hfox_eval,
    hfox_eval_contour,
    hfox_eval_series,
    hfox_scale_identity_check,
    stable_density_hfox,
)
from app.services.mcstable import (
    hill_tail_index,
    ks_against_numeric,
    median_variance_growth,
    sample,
    sign_balance,
    stability_check,
)
from app.services.oscquad import integrate, integrate_sine
from app.services.propagator import (
    density_1d,
    density_1d_ibp,
    density_3d_derivative,
    density_nd,
    gaussian_density,
    peak_value,
)
from app.services.routing import DensityRouter
from app.services.specfun import (
    bessel_j,
    bessel_j_generic,
    bessel_zeros,
    duplication_defect,
    gamma_complex,
    gamma_real,
)
from app.services.verification.profiles import normalization_defect, semigroup_defect
from app.utils.constants import DEFAULT_TOL, KernelType, WeylSide
from app.utils.exceptions import DomainError

GAMMA_ONE_PLUS_I = complex(0.49801566811835604, -0.15494982830181069)
FIRST_ZERO_J0 = 2.404825557695773


class ModuleSuite(VerificationTemplate):
    """Suite parametrizada por α (en (1, 2)) y semilla"""

    def __init__(self, alpha: float = 1.5, seed: int = 0, tol: float = DEFAULT_TOL):
        self.alpha = alpha
        self.seed = seed
        self.tol = tol

    def validate(self) -> None:
        if not (1.0 < self.alpha < 2.0):
            raise DomainError(f"verify requiere 1 < α < 2 (llegó {self.alpha})")

    @property
    def params(self) -> StableParams:
        return StableParams(alpha=self.alpha, a=1.0)

    def density(self, r: float, a: float = 1.0, n: int = 1) -> float:
        query = DensityQuery(r=r, n=n, params=StableParams(alpha=self.alpha, a=a), tol=self.tol)
        return (density_1d(query) if n == 1 else density_nd(query)).value


class CoreSuite(ModuleSuite):

    def prepare(self) -> list[Check]:
        def gaussian_reduction() -> float:
            reduced = reduce_physical(PhysicalParams(hbar=2.0, mass=2.0, time=1.0), 2.0)
            return abs(reduced.a - 0.5)

        def self_similarity() -> float:
            params = StableParams(alpha=self.alpha, a=2.5)
            x_reduced, prefactor = self_similar_rescale(1.7, params)
            return abs(self.density(1.7, a=2.5) - prefactor * self.density(x_reduced))

        return [
            Check("core.reduce_physical_gaussian", gaussian_reduction, 1e-15),
            Check("core.self_similarity", self_similarity, 1e-9),
        ]


class SpecfunSuite(ModuleSuite):

    def prepare(self) -> list[Check]:
        def gamma_half() -> float:
            return abs(gamma_real(0.5) - math.sqrt(math.pi)) / math.sqrt(math.pi)

        def gamma_complex_reference() -> float:
            return abs(gamma_complex(1.0 + 1.0j) - GAMMA_ONE_PLUS_I) / abs(GAMMA_ONE_PLUS_I)

        def duplication() -> float:
            return max(duplication_defect(x) for x in np.linspace(0.3, 19.7, 25))

        def recurrence() -> float:
            worst = 0.0
            for nu in np.linspace(0.5, 10.0, 9):
                for z in np.linspace(0.1, 50.0, 23):
                    lhs = bessel_j(nu - 1.0, z) + bessel_j(nu + 1.0, z)
                    worst = max(worst, abs(lhs - 2.0 * nu / z * bessel_j(nu, z)))
            return worst

        def half_integer() -> float:
            return max(
                abs(bessel_j(n + 0.5, z) - bessel_j_generic(n + 0.5, z))
                for n in range(6)
                for z in np.linspace(0.5, 20.0, 40)
            )

        return [
            Check("specfun.gamma_half", gamma_half, 1e-13),
            Check("specfun.gamma_complex_1p1i", gamma_complex_reference, 1e-12),
            Check("specfun.duplication", duplication, 1e-12),
            Check("specfun.bessel_recurrence", recurrence, 1e-10),
            Check("specfun.half_integer_consistency", half_integer, 1e-10),
            Check("specfun.first_zero_j0", lambda: abs(bessel_zeros(0.0, 1) - FIRST_ZERO_J0), 1e-10),
        ]


class OscquadSuite(ModuleSuite):

    def prepare(self) -> list[Check]:
        def laplace_cosine() -> float:
            spec = OscIntegrand(alpha=1.0, a=1.0, weight_power=0.0, kernel=KernelType.COSINE, r=1.0)
            return abs(integrate(spec, self.tol).value - 0.5)

        def gaussian_hankel() -> float:
            spec = OscIntegrand(alpha=2.0, a=1.0, weight_power=1.0, kernel=KernelType.BESSEL, nu=0.0, r=2.0)
            return abs(integrate(spec, self.tol).value - 0.5 * math.exp(-1.0))

        def gaussian_sine() -> float:
            spec = OscIntegrand(alpha=2.0, a=1.0, weight_power=1.0, kernel=KernelType.SINE, r=1.0)
            return abs(integrate_sine(spec, self.tol).value - 0.25 * math.sqrt(math.pi) * math.exp(-0.25))

        def bessel_cosine() -> float:
            r = 1.3
            bessel = OscIntegrand(alpha=self.alpha, a=1.0, weight_power=0.5, kernel=KernelType.BESSEL, nu=-0.5, r=r)
            cosine = OscIntegrand(alpha=self.alpha, a=1.0, weight_power=0.0, kernel=KernelType.COSINE, r=r)
            scaled = math.sqrt(0.5 * math.pi * r) * integrate(bessel, self.tol).value
            return abs(scaled - integrate(cosine, self.tol).value)

        return [
            Check("oscquad.laplace_cosine", laplace_cosine, 1e-10),
            Check("oscquad.gaussian_hankel", gaussian_hankel, 1e-10),
            Check("oscquad.gaussian_sine", gaussian_sine, 1e-10),
            Check("oscquad.bessel_cosine_consistency", bessel_cosine, 1e-10),
        ]


class PropagatorSuite(ModuleSuite):

    def prepare(self) -> list[Check]:
        params = self.params

        def peak() -> float:
            return abs(self.density(0.0) - peak_value(params))

        def ibp() -> float:
            query = DensityQuery(r=5.0, n=1, params=params, tol=self.tol)
            return abs(density_1d_ibp(query).value - self.density(5.0))

        def nd_reduction() -> float:
            return abs(self.density(2.0, n=1) - density_nd(DensityQuery(r=2.0, n=1, params=params, tol=self.tol)).value)

        def derivative_form() -> float:
            query = DensityQuery(r=1.0, n=3, params=params, tol=self.tol)
            return abs(density_3d_derivative(query).value - density_nd(query).value)

        def gaussian_limit() -> float:
            worst = 0.0
            for n in (1, 2, 3, 5):
                for r in (0.0, 0.5, 1.0, 2.0):
                    query = DensityQuery(r=r, n=n, params=StableParams(alpha=2.0, a=1.0), tol=self.tol)
                    exact = gaussian_density(r, 1.0, n)
                    worst = max(worst, abs(density_nd(query).value - exact) / exact)
            return worst

        def unimodality() -> float:
            values = [result.value for result in DensityRouter().evaluate_many(np.arange(0.0, 10.05, 0.1), params)]
            return float(np.count_nonzero(np.diff(values) >= 0.0))

        return [
            Check("propagator.peak_exact", peak, 1e-10),
            Check("propagator.ibp_cross_route", ibp, 1e-9),
            Check("propagator.nd_reduction", nd_reduction, 1e-9),
            Check("propagator.derivative_form_3d", derivative_form, 1e-8),
            Check("propagator.gaussian_limit", gaussian_limit, 1e-8),
            Check("propagator.normalization", lambda: normalization_defect(params), 1e-6),
            Check("propagator.unimodality_violations", unimodality, 0.0),
            Check("propagator.semigroup", lambda: semigroup_defect(self.alpha, 0.4, 0.6), 1e-4),
        ]


class HfoxSuite(ModuleSuite):

    def prepare(self) -> list[Check]:
        exponential = HFoxSpecFactory.exponential_spec(0.0)
        stable = HFoxSpecFactory.stable_density_spec(self.alpha)
        power = HFoxSpecFactory.exponential_power_spec(self.alpha)

        def routes() -> float:
            return abs(hfox_eval_series(stable, 1.0).value - hfox_eval_contour(stable, 1.0).value)

        def against_quadrature() -> float:
            return max(
                abs(stable_density_hfox(x, self.params).value - self.density(x))
                for x in (0.0, 0.5, 1.0, 2.0, 5.0, 10.0)
            )

        def cosine_transform() -> float:
            worst = 0.0
            for x in (0.5, 1.0, 2.0, 3.0, 5.0):
                spec = OscIntegrand(alpha=self.alpha, a=1.0, weight_power=0.0, kernel=KernelType.COSINE, r=x)
                transformed = self.alpha * integrate(spec, self.tol).value
                worst = max(worst, abs(transformed - math.pi / x * hfox_eval(stable, x).value))
            return worst

        def power_series() -> float:
            return abs(hfox_eval_series(power, 0.7).value - self.alpha * math.exp(-0.7 ** self.alpha))

        return [
            Check("hfox.exponential_series", lambda: abs(hfox_eval_series(exponential, 1.0).value - math.exp(-1.0)), 1e-9),
            Check(
                "hfox.exponential_contour",
                lambda: abs(hfox_eval_contour(exponential, 1.0, contour_sigma=-0.5).value - math.exp(-1.0)),
                1e-9,
            ),
            Check("hfox.exponential_power_series", power_series, 1e-9),
            Check("hfox.series_vs_contour", routes, 1e-8),
            Check("hfox.against_quadrature", against_quadrature, 1e-8),
            Check("hfox.scale_identity_exponential", lambda: hfox_scale_identity_check(exponential, 1.0, 2.0), 1e-9),
            Check("hfox.scale_identity_stable", lambda: hfox_scale_identity_check(stable, 0.8, self.alpha), 1e-8),
            Check("hfox.cosine_transform", cosine_transform, 1e-7),
        ]


class AsymlagSuite(ModuleSuite):

    def prepare(self) -> list[Check]:
        params = self.params

        def tail_leading() -> float:
            exact = self.density(50.0)
            return abs(tail_density(50.0, params) - exact) / exact

        def tail_two_terms() -> float:
            exact = self.density(50.0)
            return abs(tail_series(50.0, params, 2) - exact) / exact

        def residual() -> float:
            rng = np.random.default_rng(self.seed)
            return max(
                saddle_residual(SaddleInput(alpha=alpha, rho=rho))
                for alpha, rho in zip(rng.uniform(1.01, 1.99, 50), 10.0 ** rng.uniform(-2.0, 2.0, 50))
            )

        def gaussian_reduction() -> float:
            gaussian = StableParams(alpha=2.0, a=1.0)
            return max(
                abs(saddle_density(x, gaussian).value - gaussian_density(x, 1.0)) / gaussian_density(x, 1.0)
                for x in (0.5, 1.0, 2.0, 5.0)
            )

        def exponent_identity() -> float:
            target = StableParams(alpha=self.alpha, a=2.0)
            rho = 2.0 / 3.0 ** self.alpha
            hamiltonian = abs(saddle_exponent(SaddleInput(alpha=self.alpha, rho=rho)))
            return abs(classical_action(3.0, target) - hamiltonian) / hamiltonian

        def determinant() -> float:
            return max(abs(fluctuation_determinant(N) - N) for N in range(2, 65))

        def orthogonality() -> float:
            modes = fluctuation_modes(16)
            return float(np.max(np.abs(modes.T @ modes - np.eye(15))))

        return [
            Check("asymlag.tail_leading_x50", tail_leading, 1e-2),
            Check("asymlag.tail_two_terms_x50", tail_two_terms, 2e-3),
            Check("asymlag.saddle_residual", residual, 1e-12),
            Check("asymlag.saddle_gaussian", gaussian_reduction, 1e-12),
            Check("asymlag.exponent_identity", exponent_identity, 1e-12),
            Check("asymlag.fluctuation_determinant", determinant, 1e-9),
            Check("asymlag.mode_orthogonality", orthogonality, 1e-12),
        ]


class FracopsSuite(ModuleSuite):
    GRID_SIZE = 64
    BANDWIDTH = 16

    def _random_band_limited(self, rng: np.random.Generator) -> GridFunction:
        coefficients = np.zeros(self.GRID_SIZE, dtype=np.complex128)
        modes = np.r_[0:self.BANDWIDTH + 1, -self.BANDWIDTH:0]
        coefficients[modes] = rng.standard_normal(modes.size) + 1j * rng.standard_normal(modes.size)
        return GridFunction(2.0 * math.pi, np.fft.ifft(coefficients) * self.GRID_SIZE)

    def prepare(self) -> list[Check]:
        rng = np.random.default_rng(self.seed)
        samples = [self._random_band_limited(rng) for _ in range(20)]

        def eigenvalues() -> float:
            worst = 0.0
            for k in range(-8, 9):
                wave = plane_wave(2.0 * math.pi, self.GRID_SIZE, k)
                image = frac_laplacian(wave, self.alpha)
                worst = max(worst, float(np.max(np.abs(image.values - abs(k) ** self.alpha * wave.values))))
            return worst

        def composition() -> float:
            worst = 0.0
            for g in samples:
                half = 0.5 * self.alpha
                composed = weyl_derivative(weyl_derivative(g, half, WeylSide.PLUS), half, WeylSide.MINUS)
                worst = max(worst, float(np.max(np.abs(composed.values - frac_laplacian(g, self.alpha).values))))
            return worst

        def quadratic() -> float:
            worst = 0.0
            for g in samples:
                form = quadratic_form(g, self.alpha)
                worst = max(worst, abs(form.imag) / max(abs(form), 1.0), -form.real)
            return worst

        def diffusion() -> float:
            return diffusion_residual(self.params, (0.0, 0.5, 1.0, 2.0), 1e-4)

        return [
            Check("fracops.plane_wave_eigenvalue", eigenvalues, 1e-12),
            Check("fracops.weyl_composition", composition, 1e-10),
            Check("fracops.quadratic_form_real_nonnegative", quadratic, 1e-10),
            Check("fracops.fft_roundtrip", lambda: max(fft_roundtrip_error(g) for g in samples), 1e-13),
            Check("fracops.diffusion_residual", diffusion, 1e-6),
        ]


class McstableSuite(ModuleSuite):
    COUNT = 1_000_000
    VARIANCE_PREFIXES = (10_000, 100_000, 1_000_000)
    VARIANCE_SEEDS = 5

    def prepare(self) -> list[Check]:
        def ks_numeric() -> float:
            return ks_against_numeric(sample(self.alpha, 1.0, self.COUNT, self.seed), 1e-8)

        def hill() -> float:
            # Sesgo de segundo orden del estimador de Hill crece con α
            fraction, count = (0.001, 4 * self.COUNT) if self.alpha > 1.6 else (0.01, self.COUNT)
            return abs(hill_tail_index(sample(self.alpha, 1.0, count, self.seed + 1).draws, fraction) - self.alpha)

        def symmetry() -> float:
            draws = sample(self.alpha, 1.0, self.COUNT, self.seed + 2).draws
            return abs(sign_balance(draws)) * math.sqrt(draws.size) / 3.0

        def gaussian_variance() -> float:
            return abs(np.var(sample(2.0, 1.0, self.COUNT, self.seed + 3).draws) / 2.0 - 1.0)

        def variance_growth() -> float:
            medians = median_variance_growth(
                self.alpha, 1.0, self.VARIANCE_PREFIXES, range(self.seed + 6, self.seed + 6 + self.VARIANCE_SEEDS)
            )
            return float(np.min(medians[1:] / medians[:-1]))

        return [
            Check("mcstable.ks_against_numeric", ks_numeric, 2e-3),
            Check("mcstable.stability", lambda: stability_check(self.alpha, 2, self.COUNT, self.seed + 4), 3e-3),
            Check(
                "mcstable.stability_wrong_norming",
                lambda: stability_check(self.alpha, 3, self.COUNT, self.seed + 5, norming_exponent=0.5),
                1e-2,
                greater=True,
            ),
            Check("mcstable.hill_tail_index", hill, 0.1),
            Check("mcstable.sign_balance_over_3sigma", symmetry, 1.0),
            Check("mcstable.gaussian_variance", gaussian_variance, 1e-2),
            Check("mcstable.variance_grows_with_prefix", variance_growth, 1.0, greater=True),
        ]
