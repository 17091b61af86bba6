"""Two- and three-particle correlation intercepts of the mu-Bose gas.

Two evaluation routes are provided:

* ``series``: every bracket ``[N-a]_mu`` is expanded to a fixed order in mu,
  numerator and denominator are averaged separately with the closed-form
  moments, and then divided. The n-th power of the one-particle average is
  itself cut at the same order, so the large-momentum limit is exactly the
  truncated asymptote;
* ``direct``: the exact bracket values ``n/(1+mu n)`` are summed against the
  Boltzmann weights with no truncation in mu.

At mu = 0 both reduce to the Bose values lambda2 = 1, lambda3 = 5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .oscillator import as_mu
from .series import bracket_product
from .thermal import (
    ThermalPoint,
    TriangleTable,
    build_triangle,
    direct_sum_mean,
    mean_npoly_exact,
    mean_npoly_series,
)

__all__ = [
    "DEFAULT_ORDER",
    "PION_MASS",
    "TableTooSmallError",
    "CurveEvaluationError",
    "InterceptCurve",
    "required_table_size",
    "lambda_series",
    "lambda2_series",
    "lambda3_series",
    "r3_series",
    "lambda_direct",
    "r3",
    "scan_curve",
]

DEFAULT_ORDER = 5
PION_MASS = 139.57
METHODS = ("series", "direct")


class TableTooSmallError(ValueError):
    def __init__(self, required: int, available: int):
        super().__init__(f"triangle has max_m={available}, need max_m >= {required}")
        self.required = required
        self.available = available


class CurveEvaluationError(RuntimeError):
    def __init__(self, k_momentum: float, cause: Exception):
        super().__init__(f"evaluation failed at k={k_momentum!r} MeV: {cause}")
        self.k_momentum = k_momentum
        self.cause = cause


def required_table_size(n: int, order: int) -> int:
    """Highest power of N in the n-particle numerator at the given order."""
    return n + order


def _table(n: int, order: int, table: TriangleTable | None) -> TriangleTable:
    need = required_table_size(n, order)
    if table is None:
        return build_triangle(need)
    if table.max_m < need:
        raise TableTooSmallError(need, table.max_m)
    return table


def _ratio_series(n, mu, point, order, table) -> Fraction:
    # <prod_a [N-a]> / <[N]>^n. Both sides are mu-series truncated at mu^order,
    # the power of the one-particle average included; each is summed, then divided.
    mu = as_mu(mu)
    _table(n, order, table)
    num = mean_npoly_exact(bracket_product(n, order), mu, point.x)
    one = mean_npoly_series(bracket_product(1, order), point.x)
    den = (one ** n).evaluate_exact(Fraction(mu))
    if den == 0:
        raise ZeroDivisionError(f"one-particle average vanishes at mu={mu}")
    return num / den


def lambda_series(n: int, mu, point: ThermalPoint, order: int = DEFAULT_ORDER,
                  table: TriangleTable | None = None) -> float:
    """n-particle intercept from the order-``order`` mu expansion."""
    return float(_ratio_series(n, mu, point, order, table) - 1)


def lambda2_series(mu, point: ThermalPoint, order: int = DEFAULT_ORDER,
                   table: TriangleTable | None = None) -> float:
    return lambda_series(2, mu, point, order, table)


def lambda3_series(mu, point: ThermalPoint, order: int = DEFAULT_ORDER,
                   table: TriangleTable | None = None) -> float:
    return lambda_series(3, mu, point, order, table)


def r3_series(mu, point: ThermalPoint, order: int = DEFAULT_ORDER,
              table: TriangleTable | None = None) -> float:
    """r3 built from the truncated two- and three-particle averages.

    ``(A - 3B + 2) / (2 (B - 1)^(3/2))`` with A, B the averaged ratios; the
    numerator equals lambda3 - 3 lambda2, so this goes through :func:`r3`.
    """
    table = _table(3, order, table)
    return r3(lambda2_series(mu, point, order, table), lambda3_series(mu, point, order, table))


def _bracket(m: int, mu: float) -> float:
    return m / (1.0 + mu * m)


def lambda_direct(n: int, mu, point: ThermalPoint, rel_tol: float = 1e-15) -> float:
    """Intercept from untruncated bracket values summed over occupation numbers."""
    if n < 1:
        raise ValueError("particle count must be at least 1")
    mu = as_mu(mu)

    def numerator(k: int) -> float:
        if k < n:
            return 0.0
        prod = 1.0
        for a in range(n):
            prod *= _bracket(k - a, mu)
        return prod

    num = direct_sum_mean(numerator, point, rel_tol)
    den = direct_sum_mean(lambda k: _bracket(k, mu), point, rel_tol)
    return num / den ** n - 1.0


def r3(lambda2: float, lambda3: float) -> float:
    """0.5 (lambda3 - 3 lambda2) / lambda2^(3/2)."""
    if not lambda2 > 0:
        raise ValueError(f"r3 undefined for lambda2={lambda2!r} <= 0")
    return 0.5 * (lambda3 - 3.0 * lambda2) / lambda2 ** 1.5


@dataclass(frozen=True)
class InterceptCurve:
    mu: float
    temperature: float
    mass: float
    order: int
    grid: tuple[float, ...]
    values2: tuple[float, ...]
    values3: tuple[float, ...]
    valuesR: tuple[float, ...]
    method: str

    def __post_init__(self):
        n = len(self.grid)
        if not (len(self.values2) == len(self.values3) == len(self.valuesR) == n):
            raise ValueError("value arrays must match the grid length")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ValueError("grid must be strictly increasing")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    def rows(self):
        return zip(self.grid, self.values2, self.values3, self.valuesR)


def _point_values(method, mu, point, order, table):
    if method == "series":
        l2 = lambda2_series(mu, point, order, table)
        l3 = lambda3_series(mu, point, order, table)
    else:
        l2 = lambda_direct(2, mu, point)
        l3 = lambda_direct(3, mu, point)
    return l2, l3, r3(l2, l3)


def scan_curve(mu, mass: float, temperature: float, order: int, grid: Sequence[float],
               method: str = "series") -> InterceptCurve:
    """Evaluate lambda2, lambda3 and r3 at every momentum of ``grid``."""
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    grid = tuple(float(k) for k in grid)
    if not grid:
        raise ValueError("grid is empty")
    if any(k < 0 for k in grid) or any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be non-negative and strictly increasing")
    mu = as_mu(mu)
    table = _table(3, order, None) if method == "series" else None
    v2, v3, vr = [], [], []
    for k in grid:
        try:
            point = ThermalPoint(mass, k, temperature)
            l2, l3, rr = _point_values(method, mu, point, order, table)
            if not all(math.isfinite(v) for v in (l2, l3, rr)):
                raise ArithmeticError("non-finite intercept")
        except (ValueError, ArithmeticError, RuntimeError) as exc:
            raise CurveEvaluationError(k, exc) from exc
        v2.append(l2)
        v3.append(l3)
        vr.append(rr)
    return InterceptCurve(mu, temperature, mass, order, grid, tuple(v2), tuple(v3),
                          tuple(vr), method)
