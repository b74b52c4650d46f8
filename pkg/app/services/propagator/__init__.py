"""
Propagador por inversión de la función característica (1D, n-D, CDF)
"""

from app.services.propagator.characteristic_inversion import (
    density_1d,
    density_1d_ibp,
    density_nd,
    density_3d_derivative,
    cdf_1d,
)
from app.services.propagator.closed_forms import (
    peak_value,
    peak_value_nd,
    gaussian_density,
    gaussian_cdf,
    cauchy_density,
    cauchy_cdf,
)
from app.services.propagator.series import density_series, reduced_series, series_terms
from app.services.propagator.angular import angular_factor, angular_factor_closed

__all__ = [
    "density_1d",
    "density_1d_ibp",
    "density_nd",
    "density_3d_derivative",
    "cdf_1d",
    "peak_value",
    "peak_value_nd",
    "gaussian_density",
    "gaussian_cdf",
    "cauchy_density",
    "cauchy_cdf",
    "density_series",
    "reduced_series",
    "series_terms",
    "angular_factor",
    "angular_factor_closed",
]
