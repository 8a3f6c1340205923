from .benchmarks import (
    csg0_cdf,
    csg0_moments,
    csg0_quantile,
    csg0_sample,
    gev0_cdf,
    gev0_moments,
    gev0_quantile,
    gev0_sample,
    gev_standard_moments,
)
from .chi0 import (
    chi0_cdf,
    chi0_cdf_array,
    chi0_moments,
    chi0_quantile,
    chi0_sample,
)
from .predictive import DistributionBatch, PredictiveDistribution, point_mass_at_zero

__all__ = [
    "DistributionBatch",
    "PredictiveDistribution",
    "chi0_cdf",
    "chi0_cdf_array",
    "chi0_moments",
    "chi0_quantile",
    "chi0_sample",
    "csg0_cdf",
    "csg0_moments",
    "csg0_quantile",
    "csg0_sample",
    "gev0_cdf",
    "gev0_moments",
    "gev0_quantile",
    "gev0_sample",
    "gev_standard_moments",
    "point_mass_at_zero",
]
