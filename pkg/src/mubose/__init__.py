"""Intercepts of momentum correlation functions in the mu-deformed Bose gas."""

__version__ = "0.1.0"

from .asymptotics import (
    AsymptoteResult,
    asymptote_from_polynomials,
    asymptotes,
    lambda2_asymptote_exact,
    lambda2_asymptote_truncated,
    lambda3_asymptote_exact,
    lambda3_asymptote_truncated,
    r3_asymptote_exact,
    r3_asymptote_truncated,
)
from .intercepts import (
    InterceptCurve,
    lambda2_series,
    lambda3_series,
    lambda_direct,
    r3,
    r3_series,
    scan_curve,
)
from .oscillator import MuParameter, energy_level, structure_value
from .series import MuSeries, NPolynomial, bracket_product, mu_bracket, npoly_eval_at_integer, series_ratio_eval
from .thermal import ThermalPoint, TriangleTable, build_triangle, direct_sum_mean, mean_npoly, mean_power
