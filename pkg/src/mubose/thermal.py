"""Thermal averages of powers of the occupation number.

With Boltzmann weights ``exp(-beta*omega*n)`` the moments are

    <N^m> = sum_{r=1}^{m} B_r^(m) x^(-r),    x = exp(beta*omega) - 1,

where the integer triangle obeys ``B_r^(m) = r (B_{r-1}^(m-1) + B_r^(m-1))``.
A brute-force summation over n is provided as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .series import MuSeries, NPolynomial

__all__ = [
    "TriangleTable",
    "ThermalPoint",
    "NonConvergenceError",
    "build_triangle",
    "mean_power",
    "mean_npoly",
    "mean_npoly_series",
    "mean_npoly_exact",
    "direct_sum_mean",
    "PRINTED_TABLE_TYPOS",
]

# (m, r) -> value printed in the published table that disagrees with the recurrence.
PRINTED_TABLE_TYPOS = {(12, 2): 40946}


class NonConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class TriangleTable:
    max_m: int
    rows: tuple[tuple[int, ...], ...]

    def row(self, m: int) -> tuple[int, ...]:
        """Row m as (B_1^(m), ..., B_m^(m))."""
        if not 1 <= m <= self.max_m:
            raise IndexError(f"row {m} outside 1..{self.max_m}")
        return self.rows[m - 1]

    def __getitem__(self, key: tuple[int, int]) -> int:
        m, r = key
        row = self.row(m)
        if not 1 <= r <= m:
            raise IndexError(f"entry r={r} outside 1..{m}")
        return row[r - 1]

    def to_tsv(self) -> str:
        return "".join("\t".join(str(b) for b in row) + "\n" for row in self.rows)


@lru_cache(maxsize=None)
def build_triangle(max_m: int) -> TriangleTable:
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    rows = [(1,)]
    for m in range(2, max_m + 1):
        prev = rows[-1]
        # prev has m-1 entries; B_0 = 0 and B_m^(m-1) = 0 pad the ends
        padded = (0,) + prev + (0,)
        rows.append(tuple(r * (padded[r - 1] + padded[r]) for r in range(1, m + 1)))
    return TriangleTable(max_m, tuple(rows))


@dataclass(frozen=True)
class ThermalPoint:
    """Particle of given mass and mean momentum in a bath of temperature T (all MeV)."""

    mass: float
    k_momentum: float
    temperature: float
    omega: float = field(init=False, repr=False)
    beta_omega: float = field(init=False, repr=False)
    x: float = field(init=False, repr=False)

    def __post_init__(self):
        if not self.temperature > 0:
            raise ValueError(f"temperature must be positive, got {self.temperature}")
        if self.mass < 0 or self.k_momentum < 0:
            raise ValueError("mass and momentum must be non-negative")
        if self.mass == 0 and self.k_momentum == 0:
            raise ValueError("mass and momentum cannot both vanish")
        omega = math.hypot(self.mass, self.k_momentum)
        bw = omega / self.temperature
        x = math.expm1(bw)
        if not x > 0:
            raise ValueError(f"degenerate thermal point (x={x})")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "beta_omega", bw)
        object.__setattr__(self, "x", x)

    @classmethod
    def from_beta_omega(cls, beta_omega: float, temperature: float = 1.0) -> ThermalPoint:
        """A zero-momentum point whose mass gives the requested beta*omega."""
        return cls(beta_omega * temperature, 0.0, temperature)

    @classmethod
    def from_x(cls, x: float) -> ThermalPoint:
        return cls.from_beta_omega(math.log1p(x))

    @property
    def t(self) -> float:
        """Boltzmann ratio exp(-beta*omega) = 1/(1+x)."""
        return 1.0 / (1.0 + self.x)

    @property
    def mean_n(self) -> float:
        return 1.0 / self.x


def _table_for(m: int, table: TriangleTable | None) -> TriangleTable:
    if table is None:
        return build_triangle(max(m, 1))
    if m > table.max_m:
        raise IndexError(f"moment order {m} exceeds triangle size {table.max_m}")
    return table


def mean_power(m: int, point: ThermalPoint, table: TriangleTable | None = None) -> float:
    """Closed-form <N^m>, evaluated by Horner in 1/x."""
    if m == 0:
        return 1.0
    if m < 0:
        raise ValueError("moment order must be non-negative")
    row = _table_for(m, table).row(m)
    y = 1.0 / point.x
    acc = 0.0
    for b in reversed(row):
        acc = (acc + b) * y
    return acc


@lru_cache(maxsize=256)
def _averaged_table(p: NPolynomial) -> tuple[tuple[int, ...], ...]:
    # <p(N)> = sum_j y^j sum_s mu^s M[j][s], y = 1/x; row j = 0 is the constant term
    table = build_triangle(max(p.degree, 1))
    K = p.order
    rows = [[0] * (K + 1) for _ in range(p.degree + 1)]
    for r, c in enumerate(p.coeffs):
        for s, cs in enumerate(c):
            if not cs:
                continue
            if r == 0:
                rows[0][s] += cs
                continue
            for j, b in enumerate(table.row(r), start=1):
                rows[j][s] += cs * b
    return tuple(tuple(row) for row in rows)


def mean_npoly_exact(p: NPolynomial, mu, x) -> Fraction:
    """Exact <p(N)> for exactly representable mu and x (floats are taken at face value)."""
    mu = Fraction(mu)
    y = 1 / Fraction(x)
    acc = Fraction(0)
    for row in reversed(_averaged_table(p)):
        coeff = Fraction(0)
        for c in reversed(row):
            coeff = coeff * mu + c
        acc = acc * y + coeff
    return acc


def mean_npoly_series(p: NPolynomial, x) -> MuSeries:
    """<p(N)> kept as a mu-series; the mu^s coefficient is exact in 1/x."""
    y = 1 / Fraction(x)
    rows = _averaged_table(p)
    coeffs = []
    for s in range(p.order + 1):
        acc = Fraction(0)
        for row in reversed(rows):
            acc = acc * y + row[s]
        coeffs.append(acc)
    return MuSeries(coeffs, p.order)


def mean_npoly(p: NPolynomial, mu: float, point: ThermalPoint,
               table: TriangleTable | None = None) -> float:
    """<p(N)> with every N^r coefficient series evaluated at mu.

    The sum is carried out in exact rationals and rounded once: the N^r
    coefficients of the bracket products cancel at leading order in 1/x,
    so a floating sum loses most digits when x is large.
    """
    _table_for(p.degree, table)
    return float(mean_npoly_exact(p, mu, point.x))


def direct_sum_mean(f: Callable[[int], float], point: ThermalPoint,
                    rel_tol: float = 1e-15, max_terms: int = 10**6) -> float:
    """``(1 - t) * sum_n f(n) t^n`` summed until the tail is negligible.

    Stops once five consecutive terms fall below ``rel_tol * |partial sum|``
    and ``n > 20 / beta*omega``; raises NonConvergenceError past ``max_terms``.
    """
    if not rel_tol > 0:
        raise ValueError("rel_tol must be positive")
    log_t = -point.beta_omega
    n_min = 20.0 / point.beta_omega
    terms = []
    partial = 0.0
    quiet = 0
    for n in range(max_terms):
        weight = math.exp(n * log_t)
        term = f(n) * weight if weight else 0.0
        terms.append(term)
        partial += term
        if abs(term) <= rel_tol * abs(partial):
            quiet += 1
            if quiet >= 5 and n > n_min:
                break
        else:
            quiet = 0
    else:
        raise NonConvergenceError(
            f"direct sum not converged after {max_terms} terms (x={point.x:g})")
    one_minus_t = point.x / (1.0 + point.x)
    return one_minus_t * math.fsum(terms)
