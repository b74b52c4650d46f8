"""
Tests Unitarios - Función H de Fox
===================================
Pruebas de la serie de residuos, la integral de contorno y el propagador como función H.
Cubre: Casos exponenciales, Rutas cruzadas, Identidad de escala, Límite gaussiano, Validaciones.
"""

import math

import pytest
from pydantic import ValidationError

from app.schemas.core_schema import StableParams
from app.schemas.hfox_schema import HFoxSpec
from app.schemas.propagator_schema import DensityQuery
from app.services.hfox import (
    HFoxSpecFactory,
    convergence_parameter,
    hfox_eval,
    hfox_eval_contour,
    hfox_eval_series,
    hfox_scale_identity_check,
    residue_terms,
    stable_density_contour,
    stable_density_hfox,
)
from app.services.propagator import density_1d, gaussian_density, peak_value
from app.utils.constants import EvalMethod
from app.utils.exceptions import DomainError

LEVY = StableParams(alpha=1.5, a=1.0)


def quadrature(x: float, params: StableParams = LEVY) -> float:
    return density_1d(DensityQuery(r=abs(x), n=1, params=params, tol=1e-11)).value


class TestHfoxService:
    """Tests esenciales de hfox"""

    @pytest.mark.parametrize("b, z, expected", [(0.0, 1.0, math.exp(-1.0)), (2.0, 2.0, 4.0 * math.exp(-2.0))])
    def test_series_exponential(self, b, z, expected):
        """H^{1,0}_{0,1}[z | —; (b,1)] = z^b·e^(−z)"""

        # Arrange
        spec = HFoxSpecFactory.exponential_spec(b)

        # Act
        result = hfox_eval_series(spec, z)

        # Assert
        assert result.value == pytest.approx(expected, abs=1e-10)
        assert result.method == EvalMethod.HFOX_SERIES

    def test_contour_exponential(self):
        """Segunda ruta para e^(−z) con σ = −½"""

        # Arrange
        spec = HFoxSpecFactory.exponential_spec(0.0)

        # Act
        result = hfox_eval_contour(spec, 1.0, contour_sigma=-0.5)

        # Assert
        assert result.value == pytest.approx(math.exp(-1.0), abs=1e-8)
        assert result.method == EvalMethod.HFOX_CONTOUR

    def test_contour_rejects_non_separating_sigma(self):
        """σ a la derecha del primer polo b no separa"""

        # Arrange
        spec = HFoxSpecFactory.exponential_spec(0.0)

        # Act & Assert
        with pytest.raises(DomainError, match="no separa"):
            hfox_eval_contour(spec, 1.0, contour_sigma=0.5)

    def test_series_rejects_non_positive_argument(self):
        """z ≤ 0 fuera del dominio"""

        # Act & Assert
        with pytest.raises(DomainError):
            hfox_eval_series(HFoxSpecFactory.exponential_spec(), 0.0)

    def test_exponential_power_series(self):
        """H[w | —; (0,1/α)] = α·e^(−w^α)"""

        # Arrange
        spec = HFoxSpecFactory.exponential_power_spec(1.5)

        # Act
        result = hfox_eval_series(spec, 0.7)

        # Assert
        assert result.value == pytest.approx(1.5 * math.exp(-0.7 ** 1.5), abs=1e-10)

    def test_stable_spec_parameters(self):
        """Parámetros del propagador: (1,1/α),(1,½); (1,1),(1,½)"""

        # Act
        spec = HFoxSpecFactory.stable_density_spec(1.5)

        # Assert
        assert (spec.m, spec.n, spec.p, spec.q) == (1, 1, 2, 2)
        assert spec.upper == ((1.0, pytest.approx(2.0 / 3.0)), (1.0, 0.5))
        assert spec.lower == ((1.0, 1.0), (1.0, 0.5))
        assert convergence_parameter(spec) == pytest.approx(1.0 / 3.0)

    def test_spec_rejects_colliding_poles(self):
        """Sin contorno separador la especificación es inválida"""

        # Act & Assert
        with pytest.raises(ValidationError, match="polos"):
            HFoxSpec(m=1, n=1, p=1, q=1, upper=((1.0, 1.0),), lower=((0.0, 1.0),))

    def test_spec_rejects_wrong_parameter_count(self):
        """p debe coincidir con el número de pares superiores"""

        # Act & Assert
        with pytest.raises(ValidationError, match="pares superiores"):
            HFoxSpec(m=1, n=0, p=1, q=1, upper=(), lower=((0.0, 1.0),))

    def test_residue_terms_shape(self):
        """Una columna por factor Γ(b_j − B_j s)"""

        # Act
        terms = residue_terms(HFoxSpecFactory.exponential_spec(), 0.5, 5)

        # Assert
        assert terms.shape == (5, 1)
        assert terms[:, 0] == pytest.approx([(-0.5) ** k / math.factorial(k) for k in range(5)])

    def test_series_matches_contour_for_stable_spec(self):
        """Serie y contorno coinciden para α = 1.5"""

        # Arrange
        spec = HFoxSpecFactory.stable_density_spec(1.5)

        # Act
        series = hfox_eval_series(spec, 1.0)
        contour = hfox_eval_contour(spec, 1.0)

        # Assert
        assert series.value == pytest.approx(contour.value, abs=1e-8)

    @pytest.mark.parametrize("alpha", [1.3, 1.5, 1.7])
    @pytest.mark.parametrize("x", [0.0, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0])
    def test_stable_density_matches_quadrature(self, alpha, x):
        """Representación H contra la cuadratura"""

        # Arrange
        params = StableParams(alpha=alpha, a=1.0)

        # Act
        result = stable_density_hfox(x, params)

        # Assert
        assert result.value == pytest.approx(quadrature(x, params), abs=1e-8)

    def test_stable_density_at_origin(self):
        """En x = 0 se usa el término k = 0"""

        # Act
        result = stable_density_hfox(0.0, LEVY)

        # Assert
        assert result.value == pytest.approx(peak_value(LEVY), rel=1e-14)
        assert result.value == pytest.approx(0.2873, abs=1e-4)

    def test_stable_density_gaussian(self):
        """α = 2 reproduce el gaussiano"""

        # Act
        result = stable_density_hfox(1.0, StableParams(alpha=2.0, a=1.0))

        # Assert
        assert result.value == pytest.approx(0.28209479177387814 * math.exp(-0.25), abs=1e-10)

    def test_stable_density_contour_route(self):
        """La ruta de contorno forzada coincide con la serie"""

        # Act
        contour = stable_density_contour(-1.0, LEVY)
        series = stable_density_hfox(1.0, LEVY)

        # Assert
        assert contour.method == EvalMethod.HFOX_CONTOUR
        assert contour.value == pytest.approx(series.value, abs=1e-8)

    @pytest.mark.parametrize("x", [0.0, 1.0, 2.0])
    def test_continuity_towards_gaussian(self, x):
        """α → 2⁻ tiende al gaussiano"""

        # Act
        value = stable_density_hfox(x, StableParams(alpha=1.9999, a=1.0)).value

        # Assert
        assert value == pytest.approx(gaussian_density(x, 1.0), rel=1e-3)

    def test_stable_density_requires_alpha_above_one(self):
        """La representación H del propagador se usa con 1 < α ≤ 2"""

        # Act & Assert
        with pytest.raises(DomainError, match="1 < α"):
            stable_density_hfox(1.0, StableParams(alpha=1.0, a=1.0))

    def test_scale_identity_exponential(self):
        """H(z) = k·H_k(z^k) para e^(−z)"""

        # Act
        discrepancy = hfox_scale_identity_check(HFoxSpecFactory.exponential_spec(), 1.0, 2.0)

        # Assert
        assert discrepancy <= 1e-9

    def test_scale_identity_stable(self):
        """Identidad de escala con k = α sobre la especificación del propagador"""

        # Act
        discrepancy = hfox_scale_identity_check(HFoxSpecFactory.stable_density_spec(1.5), 0.8, 1.5)

        # Assert
        assert discrepancy <= 1e-8

    def test_scale_spec_rejects_non_positive_factor(self):
        """k debe ser positivo"""

        # Act & Assert
        with pytest.raises(DomainError):
            HFoxSpecFactory.scale_spec(HFoxSpecFactory.exponential_spec(), 0.0)

    def test_cosine_transform_identity(self):
        """α·∫cos(px)e^(−p^α)dp = (π/x)·H_cos(x)"""

        # Arrange
        x = 2.0
        spec = HFoxSpecFactory.stable_density_spec(1.5)

        # Act
        transformed = 1.5 * math.pi * quadrature(x)
        h_value = math.pi / x * hfox_eval(spec, x).value

        # Assert
        assert transformed == pytest.approx(h_value, abs=1e-8)
