"""
Tests Unitarios - Oráculo Monte Carlo
======================================
Pruebas del muestreador α-estable reproducible y de sus comparaciones estadísticas.
Cubre: Determinismo, Escala, Estabilidad, KS contra la CDF, Índice de cola, Validaciones.
Las pruebas con 10⁶ variables llevan la marca `slow`.
"""

import math

import numpy as np
import pytest

from app.models.sample_batch import SampleBatch
from app.schemas.core_schema import StableParams
from app.services.mcstable import (
    flight_positions,
    hill_tail_index,
    ks_against_numeric,
    median_variance_growth,
    numeric_cdf,
    running_variance,
    sample,
    sign_balance,
    stability_check,
)
from app.services.propagator import cdf_1d
from app.utils.constants import GENERATOR_ID
from app.utils.exceptions import DomainError

MILLION = 1_000_000


class TestMcstableService:
    """Tests esenciales de mcstable"""

    def test_sample_is_deterministic(self):
        """Misma (α, a, semilla, count) → mismas variables bit a bit"""

        # Act
        first = sample(1.5, 1.0, 5000, seed=42)
        second = sample(1.5, 1.0, 5000, seed=42)

        # Assert
        assert np.array_equal(first.draws, second.draws)
        assert first.generator == GENERATOR_ID
        assert first.count == 5000

    def test_sample_independent_of_workers(self):
        """El número de hilos no cambia la salida"""

        # Act
        serial = sample(1.2, 1.0, 5000, seed=1, workers=1, block_size=1024)
        parallel = sample(1.2, 1.0, 5000, seed=1, workers=4, block_size=1024)

        # Assert
        assert np.array_equal(serial.draws, parallel.draws)

    def test_sample_different_seeds(self):
        """Semillas distintas dan flujos distintos"""

        # Act
        first = sample(1.5, 1.0, 100, seed=1)
        second = sample(1.5, 1.0, 100, seed=2)

        # Assert
        assert not np.array_equal(first.draws, second.draws)

    def test_sample_scale(self):
        """Las variables escalan como a^(1/α)"""

        # Act
        unit = sample(2.0, 1.0, 1000, seed=5)
        scaled = sample(2.0, 4.0, 1000, seed=5)

        # Assert
        assert np.allclose(scaled.draws, 2.0 * unit.draws, rtol=1e-15, atol=0.0)

    @pytest.mark.parametrize(
        "alpha, a, count, seed",
        [(1.5, 1.0, 0, 0), (2.5, 1.0, 10, 0), (1.5, 0.0, 10, 0), (1.5, 1.0, 10, -1)],
    )
    def test_sample_validation(self, alpha, a, count, seed):
        """Parámetros fuera de rango"""

        # Act & Assert
        with pytest.raises(DomainError):
            sample(alpha, a, count, seed)

    def test_sample_batch_rejects_non_finite(self):
        """Un lote no admite valores no finitos"""

        # Act & Assert
        with pytest.raises(DomainError, match="no finitos"):
            SampleBatch(alpha=1.5, a=1.0, seed=0, draws=np.array([0.0, np.inf]))

    def test_flight_positions_shape(self):
        """Posiciones acumuladas (caminantes × pasos)"""

        # Act
        positions = flight_positions(1.5, 1.0, steps=10, walkers=20, seed=3)

        # Assert
        assert positions.shape == (20, 10)
        assert np.all(np.isfinite(positions))

    def test_hill_estimator_on_pareto(self):
        """Hill recupera el índice de una ley de Pareto"""

        # Arrange
        draws = 1.0 + np.random.default_rng(9).pareto(1.5, 100_000)

        # Act
        index = hill_tail_index(draws, fraction=0.01)

        # Assert
        assert index == pytest.approx(1.5, abs=0.2)

    def test_hill_estimator_needs_enough_draws(self):
        """La fracción debe dejar al menos dos variables"""

        # Act & Assert
        with pytest.raises(DomainError, match="pocas"):
            hill_tail_index(np.arange(1.0, 11.0), fraction=0.1)

    def test_running_variance(self):
        """Varianza muestral de cada prefijo"""

        # Act
        variances = running_variance(np.array([1.0, 2.0, 3.0, 4.0]), [2, 4])

        # Assert
        assert variances == pytest.approx([0.5, 5.0 / 3.0])

    def test_sign_balance(self):
        """Media de los signos"""

        # Act & Assert
        assert sign_balance(np.array([1.0, -1.0, 2.0, -3.0, 5.0])) == pytest.approx(0.2)

    def test_stability_check_requires_large_sample(self):
        """La comparación de estabilidad necesita ≥ 10⁴ variables"""

        # Act & Assert
        with pytest.raises(DomainError, match="count"):
            stability_check(1.5, 2, 100, seed=0)

    def test_numeric_cdf_closed_forms(self):
        """α = 2 y α = 1 usan las CDF cerradas"""

        # Act
        gaussian = numeric_cdf(StableParams(alpha=2.0, a=1.0), 1e-8)
        cauchy = numeric_cdf(StableParams(alpha=1.0, a=1.0), 1e-8)

        # Assert
        assert gaussian(2.0) == pytest.approx(0.5 + 0.5 * math.erf(1.0), abs=1e-14)
        assert cauchy(1.0) == pytest.approx(0.75, abs=1e-14)

    @pytest.mark.slow
    def test_numeric_cdf_interpolation(self):
        """La CDF interpolada sigue a cdf_1d y es simétrica"""

        # Arrange
        params = StableParams(alpha=1.5, a=1.0)

        # Act
        cdf = numeric_cdf(params, 1e-8)
        values = cdf(np.array([-1.3, 1.3, 40.0]))

        # Assert
        assert values[1] == pytest.approx(cdf_1d(1.3, params), abs=1e-4)
        assert values[0] + values[1] == pytest.approx(1.0, abs=1e-12)
        assert values[2] == pytest.approx(cdf_1d(40.0, params), abs=1e-4)

    @pytest.mark.slow
    def test_gaussian_variance(self):
        """α = 2: varianza 2 ± 1%"""

        # Act
        draws = sample(2.0, 1.0, MILLION, seed=0).draws

        # Assert
        assert np.var(draws) == pytest.approx(2.0, rel=1e-2)

    @pytest.mark.slow
    def test_cauchy_quartiles(self):
        """α = 1: mediana 0 ± 0.005, rango intercuartílico 2 ± 1%"""

        # Act
        draws = sample(1.0, 1.0, MILLION, seed=0).draws
        lower, median, upper = np.percentile(draws, [25.0, 50.0, 75.0])

        # Assert
        assert abs(median) <= 5e-3
        assert upper - lower == pytest.approx(2.0, rel=1e-2)

    @pytest.mark.slow
    @pytest.mark.parametrize("alpha, m", [(2.0, 4), (1.5, 2)])
    def test_stability(self, alpha, m):
        """m^(−1/α)(X₁+…+X_m) tiene la misma ley que X"""

        # Act
        statistic = stability_check(alpha, m, MILLION, seed=0)

        # Assert
        assert statistic <= 3e-3

    @pytest.mark.slow
    def test_stability_detects_wrong_norming(self):
        """Control negativo: normalizar con m^(−1/2) para α = 1.5"""

        # Act
        statistic = stability_check(1.5, 3, MILLION, seed=0, norming_exponent=0.5)

        # Assert
        assert statistic > 1e-2

    @pytest.mark.slow
    @pytest.mark.parametrize("alpha", [1.5, 2.0, 1.0])
    def test_ks_against_numeric(self, alpha):
        """KS contra la CDF de la ley ≤ 0.002"""

        # Arrange
        batch = sample(alpha, 1.0, MILLION, seed=0)

        # Act
        statistic = ks_against_numeric(batch)

        # Assert
        assert statistic <= 2e-3

    def test_median_variance_growth_needs_three_seeds(self):
        """La mediana requiere al menos tres semillas"""

        # Act & Assert
        with pytest.raises(DomainError, match="3 semillas"):
            median_variance_growth(1.5, 1.0, [100, 1000], seeds=[0, 1])

    @pytest.mark.slow
    def test_variance_grows_with_prefix(self):
        """Con α = 1.5 la varianza mediana crece estrictamente en 10⁴, 10⁵, 10⁶"""

        # Act
        medians = median_variance_growth(1.5, 1.0, [10_000, 100_000, MILLION], seeds=range(5))

        # Assert
        assert medians.shape == (3,)
        assert np.all(np.diff(medians) > 0.0)

    @pytest.mark.slow
    @pytest.mark.parametrize("alpha", [1.3, 1.5, 1.7])
    def test_hill_tail_index_on_stable_draws(self, alpha):
        """Índice de cola de Hill dentro de α ± 0.1"""

        # Arrange
        fraction, count = (0.001, 4 * MILLION) if alpha > 1.6 else (0.01, MILLION)
        draws = sample(alpha, 1.0, count, seed=1).draws

        # Act
        index = hill_tail_index(draws, fraction)

        # Assert
        assert index == pytest.approx(alpha, abs=0.1)
