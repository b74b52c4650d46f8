"""
Tests Unitarios - Cuadratura oscilatoria
=========================================
Pruebas de ∫₀^∞ p^s·e^(−a p^α)·K(p·r) dp con núcleos coseno, seno y Bessel.
Cubre: Formas cerradas, Frecuencia pequeña, Aceleración, Validaciones, Presupuesto.
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import special

from app.schemas.oscquad_schema import OscIntegrand
from app.services.oscquad import (
    BesselKernel,
    CosineKernel,
    KernelFactory,
    SineKernel,
    integrate,
    integrate_plain,
    integrate_sine,
    iterated_aitken,
)
from app.utils.constants import KernelType
from app.utils.exceptions import ConvergenceError, DomainError


class TestOscquadService:
    """Tests esenciales de oscquad"""

    def test_laplace_cosine(self):
        """∫ e^(−p)·cos(p) dp = 1/2"""

        # Arrange
        spec = OscIntegrand(alpha=1.0, a=1.0, weight_power=0.0, kernel=KernelType.COSINE, r=1.0)

        # Act
        result = integrate(spec, 1e-10)

        # Assert
        assert result.value == pytest.approx(0.5, abs=1e-10)
        assert result.abs_err_estimate <= 1e-10

    def test_gaussian_hankel(self):
        """∫ p·e^(−p²)·J₀(2p) dp = e^(−1)/2"""

        # Arrange
        spec = OscIntegrand(alpha=2.0, a=1.0, weight_power=1.0, kernel=KernelType.BESSEL, nu=0.0, r=2.0)

        # Act
        result = integrate(spec, 1e-10)

        # Assert
        assert result.value == pytest.approx(0.5 * math.exp(-1.0), abs=1e-10)

    def test_gaussian_cosine(self):
        """∫ e^(−p²)·cos(p) dp = (√π/2)·e^(−1/4)"""

        # Arrange
        spec = OscIntegrand(alpha=2.0, a=1.0, r=1.0)

        # Act
        result = integrate(spec, 1e-10)

        # Assert
        assert result.value == pytest.approx(0.5 * math.sqrt(math.pi) * math.exp(-0.25), abs=1e-10)

    def test_gaussian_sine(self):
        """∫ p·e^(−p²)·sin(p) dp = (√π/4)·e^(−1/4)"""

        # Arrange
        spec = OscIntegrand(alpha=2.0, a=1.0, weight_power=1.0, kernel=KernelType.SINE, r=1.0)

        # Act
        result = integrate_sine(spec, 1e-10)

        # Assert
        assert result.value == pytest.approx(0.25 * math.sqrt(math.pi) * math.exp(-0.25), abs=1e-10)

    def test_cauchy_cosine_many_panels(self):
        """α = 1 a frecuencia alta: ∫ e^(−p)·cos(p·r) dp = 1/(1+r²)"""

        # Arrange
        r = 40.0
        spec = OscIntegrand(alpha=1.0, a=1.0, r=r)

        # Act
        result = integrate(spec, 1e-10)

        # Assert
        assert result.value == pytest.approx(1.0 / (1.0 + r * r), abs=1e-10)
        assert result.panels_used > 1

    def test_sine_with_negative_weight(self):
        """∫ sin(p)·e^(−p)/p dp = arctan(1) = π/4"""

        # Arrange
        spec = OscIntegrand(alpha=1.0, a=1.0, weight_power=-1.0, kernel=KernelType.SINE, r=1.0)

        # Act
        result = integrate_sine(spec, 1e-10)

        # Assert
        assert result.value == pytest.approx(0.25 * math.pi, abs=1e-10)

    def test_sine_vanishes_at_small_frequency(self):
        """Con s = 0 el seno anula la integral en r → 0⁺"""

        # Arrange
        spec = OscIntegrand(alpha=1.5, a=1.0, weight_power=0.0, kernel=KernelType.SINE, r=1e-12)

        # Act
        result = integrate(spec, 1e-10)

        # Assert
        assert abs(result.value) <= 1e-11

    def test_integrate_sine_requires_positive_frequency(self):
        """integrate_sine no admite r = 0"""

        # Arrange
        spec = OscIntegrand(alpha=1.5, a=1.0, kernel=KernelType.SINE, r=0.0)

        # Act & Assert
        with pytest.raises(DomainError, match="r > 0"):
            integrate_sine(spec)

    def test_plain_route_is_gamma_function(self):
        """∫ p^s·e^(−a p^α) dp = Γ((s+1)/α)/(α·a^((s+1)/α))"""

        # Arrange
        alpha, a, s = 1.5, 2.0, 0.5
        exponent = (s + 1.0) / alpha

        # Act
        result = integrate_plain(alpha, a, s, 1e-12)

        # Assert
        assert result.value == pytest.approx(math.gamma(exponent) / (alpha * a ** exponent), rel=1e-11)

    def test_bessel_minus_half_matches_cosine(self):
        """√(πr/2)·∫ p^(1/2)·e^(−p^α)·J_{−½}(pr) dp = ∫ e^(−p^α)·cos(pr) dp"""

        # Arrange
        r = 1.3
        bessel = OscIntegrand(alpha=1.5, a=1.0, weight_power=0.5, kernel=KernelType.BESSEL, nu=-0.5, r=r)
        cosine = OscIntegrand(alpha=1.5, a=1.0, r=r)

        # Act
        scaled = math.sqrt(0.5 * math.pi * r) * integrate(bessel, 1e-11).value
        direct = integrate(cosine, 1e-11).value

        # Assert
        assert scaled == pytest.approx(direct, abs=1e-10)

    def test_schema_rejects_non_integrable_cosine(self):
        """s ≤ −1 con coseno no es integrable en p = 0"""

        # Act & Assert
        with pytest.raises(ValidationError, match="integrable"):
            OscIntegrand(alpha=1.5, a=1.0, weight_power=-1.0, kernel=KernelType.COSINE, r=1.0)

    def test_schema_requires_bessel_order(self):
        """El núcleo bessel necesita ν"""

        # Act & Assert
        with pytest.raises(ValidationError, match="nu"):
            OscIntegrand(alpha=1.5, a=1.0, kernel=KernelType.BESSEL, r=1.0)

    def test_invalid_tolerance(self):
        """tol debe ser positiva"""

        # Arrange
        spec = OscIntegrand(alpha=1.5, a=1.0, r=1.0)

        # Act & Assert
        with pytest.raises(DomainError, match="tol"):
            integrate(spec, 0.0)

    def test_budget_exhausted_carries_best_estimate(self):
        """Con un presupuesto mínimo se informa la mejor estimación"""

        # Arrange
        spec = OscIntegrand(alpha=0.5, a=0.01, r=3.0)

        # Act
        with pytest.raises(ConvergenceError) as error:
            integrate(spec, 1e-14, panel_budget=3, extrapolation_depth=1)

        # Assert
        assert error.value.best_estimate is not None

    def test_iterated_aitken_alternating_series(self):
        """Δ² iterado acelera Σ (−1)^(k+1)/k hacia ln 2"""

        # Arrange
        k = np.arange(1, 22)
        partial_sums = np.cumsum((-1.0) ** (k + 1) / k)

        # Act
        estimate, error = iterated_aitken(partial_sums, depth=10)

        # Assert
        assert estimate == pytest.approx(math.log(2.0), abs=1e-8)
        assert abs(partial_sums[-1] - math.log(2.0)) > 1e-2
        assert error < 1e-6

    @pytest.mark.parametrize(
        "kernel, nu, expected",
        [
            (KernelType.COSINE, None, CosineKernel),
            (KernelType.SINE, None, SineKernel),
            (KernelType.BESSEL, 1.0, BesselKernel),
        ],
    )
    def test_kernel_factory(self, kernel, nu, expected):
        """La fábrica construye el núcleo pedido"""

        # Arrange
        spec = OscIntegrand(alpha=1.5, a=1.0, kernel=kernel, nu=nu, r=1.0)

        # Act
        created = KernelFactory.create(spec)

        # Assert
        assert isinstance(created, expected)

    def test_bessel_kernel_zeros(self):
        """Los ceros del núcleo de orden ½ son kπ"""

        # Act
        zeros = BesselKernel(0.5).zeros(4)

        # Assert
        assert zeros == pytest.approx(np.pi * np.arange(1, 5), abs=1e-10)

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 0.5, 1.0, 1.5])
    def test_bessel_kernel_regular_part_at_origin(self, nu):
        """J_ν(u)/u^ν es finita en u = 0 e igual a 1/(2^ν·Γ(ν+1))"""

        # Arrange
        kernel = BesselKernel(nu)

        # Act
        at_origin = float(kernel.regular_part(np.asarray(0.0)))

        # Assert
        assert math.isfinite(at_origin)
        assert at_origin == pytest.approx(kernel.small_argument_coefficient(), rel=1e-14)

    @pytest.mark.parametrize("nu", [0.5, 1.0, 2.5])
    def test_bessel_kernel_regular_part_continuous(self, nu):
        """Serie y cociente directo coinciden a ambos lados de u = 1"""

        # Arrange
        kernel = BesselKernel(nu)
        u = np.array([0.3, 0.999, 1.0, 1.001, 4.0])

        # Act
        regular = kernel.regular_part(u)

        # Assert
        assert regular == pytest.approx(special.jv(nu, u) / u ** nu, rel=1e-10)

    def test_halving_tolerance_never_worsens(self):
        """Reducir tol a la mitad no aleja el valor de la referencia con tol = 1e−13"""

        # Arrange
        spec = OscIntegrand(alpha=1.5, a=1.0, weight_power=0.0, kernel=KernelType.COSINE, r=2.0)
        reference = integrate(spec, 1e-13).value
        tolerances = [1e-4 / 2 ** k for k in range(8)]

        # Act
        errors = [abs(integrate(spec, tol).value - reference) for tol in tolerances]

        # Assert
        for tol, error in zip(tolerances, errors):
            assert error <= tol
        for coarse, fine in zip(errors, errors[1:]):
            assert fine <= max(coarse, 1e-12)
