"""
Tests Unitarios - Funciones especiales
=======================================
Pruebas de Γ real y compleja, J_ν y sus ceros.
Cubre: Valores de referencia, Polos, Reflexión, Recurrencia, Ceros.
"""

import math

import numpy as np
import pytest
from scipy import special

from app.services.specfun import (
    bessel_j,
    bessel_j_generic,
    bessel_j_series,
    bessel_zeros,
    bessel_zeros_upto,
    duplication_defect,
    gamma_complex,
    gamma_real,
    spherical_closed_form,
)
from app.utils.exceptions import DomainError, NumericOverflowError


class TestSpecfunService:
    """Tests esenciales de specfun"""

    @pytest.mark.parametrize(
        "x, expected",
        [
            (0.5, math.sqrt(math.pi)),
            (5.0, 24.0),
            (2.0 / 3.0, 1.3541179394264),
        ],
    )
    def test_gamma_real_reference_values(self, x, expected):
        """Γ real en valores conocidos"""

        # Act
        value = gamma_real(x)

        # Assert
        assert value == pytest.approx(expected, rel=1e-12)

    def test_gamma_real_pole(self):
        """Los enteros no positivos son polos"""

        # Act & Assert
        with pytest.raises(DomainError, match="polo"):
            gamma_real(-3.0)

    def test_gamma_real_overflow(self):
        """Γ(200) no cabe en doble precisión"""

        # Act & Assert
        with pytest.raises(NumericOverflowError):
            gamma_real(200.0)

    def test_gamma_complex_reference(self):
        """Γ(1 + i) contra el valor de alta precisión"""

        # Arrange
        expected = complex(0.49801566811835604, -0.15494982830181069)

        # Act
        value = gamma_complex(1.0 + 1.0j)

        # Assert
        assert abs(value - expected) / abs(expected) <= 1e-12

    def test_gamma_complex_real_axis(self):
        """Γ(1 + 0i) = 1 y coincide con la Γ real en el semieje negativo"""

        # Act
        one = gamma_complex(1.0)
        negative = gamma_complex(-2.5)

        # Assert
        assert one == pytest.approx(1.0, rel=1e-14)
        assert negative.real == pytest.approx(gamma_real(-2.5), rel=1e-12)
        assert negative.imag == 0.0

    @pytest.mark.parametrize("z", [2.0 + 3.0j, -1.5 + 0.5j, 0.3 - 40.0j])
    def test_gamma_complex_schwarz_reflection(self, z):
        """Γ(conj z) = conj Γ(z)"""

        # Act
        direct = gamma_complex(z.conjugate())
        reflected = gamma_complex(z).conjugate()

        # Assert
        assert abs(direct - reflected) <= 1e-13 * abs(reflected)

    def test_gamma_complex_large_imaginary_part(self):
        """La reflexión no desborda para |Im z| grande"""

        # Arrange
        z = -0.3 + 150.0j

        # Act
        value = gamma_complex(z)

        # Assert
        expected = complex(special.gamma(z))
        assert abs(value - expected) <= 1e-10 * abs(expected)

    def test_gamma_complex_pole(self):
        """Polo en z = 0"""

        # Act & Assert
        with pytest.raises(DomainError):
            gamma_complex(0.0)

    def test_duplication_identity(self):
        """Identidad de duplicación en una malla de (0, 20)"""

        # Act
        worst = max(duplication_defect(x) for x in np.linspace(0.3, 19.7, 25))

        # Assert
        assert worst <= 1e-12

    @pytest.mark.parametrize(
        "nu, z, expected",
        [
            (0.0, 0.0, 1.0),
            (0.5, math.pi / 2.0, 2.0 / math.pi),
            (0.0, 2.4048255577, 0.0),
        ],
    )
    def test_bessel_j_examples(self, nu, z, expected):
        """J_ν en valores de referencia"""

        # Act
        value = bessel_j(nu, z)

        # Assert
        assert value == pytest.approx(expected, abs=1e-10)

    def test_bessel_j_minus_half_at_origin(self):
        """J_{−½}(0) diverge"""

        # Act & Assert
        assert math.isinf(bessel_j(-0.5, 0.0))

    def test_bessel_j_invalid_order(self):
        """Orden menor que −½ fuera del dominio"""

        # Act & Assert
        with pytest.raises(DomainError, match="Orden"):
            bessel_j(-1.0, 1.0)

    def test_bessel_j_negative_argument(self):
        """Argumento negativo fuera del dominio"""

        # Act & Assert
        with pytest.raises(DomainError):
            bessel_j(0.0, -1.0)

    def test_bessel_recurrence(self):
        """J_{ν−1} + J_{ν+1} = (2ν/z)·J_ν"""

        # Arrange
        orders = np.linspace(0.5, 10.0, 9)
        arguments = np.linspace(0.1, 50.0, 23)

        # Act
        worst = max(
            abs(bessel_j(nu - 1.0, z) + bessel_j(nu + 1.0, z) - 2.0 * nu / z * bessel_j(nu, z))
            for nu in orders
            for z in arguments
        )

        # Assert
        assert worst <= 1e-10

    def test_half_integer_closed_form_matches_scipy(self):
        """Forma cerrada de orden semientero contra la ruta genérica"""

        # Arrange
        z = np.linspace(1.0, 30.0, 59)

        # Act
        closed = np.array([spherical_closed_form(n, z) for n in range(6)])
        generic = np.array([bessel_j_generic(n + 0.5, z) for n in range(6)])

        # Assert
        assert np.max(np.abs(closed - generic)) <= 1e-12

    def test_series_at_small_argument(self):
        """La serie de potencias coincide con scipy para z pequeño"""

        # Arrange
        z = np.linspace(0.0, 2.0, 21)

        # Act
        series = bessel_j_series(1.3, z)

        # Assert
        assert np.max(np.abs(series - special.jv(1.3, z))) <= 1e-14

    @pytest.mark.parametrize(
        "nu, k, expected",
        [
            (0.5, 1, math.pi),
            (0.5, 3, 3.0 * math.pi),
            (0.0, 1, 2.404825557695773),
        ],
    )
    def test_bessel_zeros_examples(self, nu, k, expected):
        """k-ésimo cero positivo de J_ν"""

        # Act
        zero = bessel_zeros(nu, k)

        # Assert
        assert zero == pytest.approx(expected, abs=1e-10)

    def test_bessel_zeros_increasing_and_interlaced(self):
        """Los ceros crecen y los de J_ν y J_{ν+1} se entrelazan"""

        # Act
        zeros = np.array(bessel_zeros_upto(1.0, 30))
        next_zeros = np.array(bessel_zeros_upto(2.0, 30))

        # Assert
        assert np.all(np.diff(zeros) > 0.0)
        assert np.all(zeros[:-1] < next_zeros[:-1])
        assert np.all(next_zeros[:-1] < zeros[1:])

    def test_bessel_zeros_invalid_index(self):
        """El índice empieza en 1"""

        # Act & Assert
        with pytest.raises(DomainError, match="índice"):
            bessel_zeros(0.0, 0)
