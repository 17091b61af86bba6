"""Large-momentum (beta*omega -> infinity) limits of the intercepts.

In the limit only mu survives. Closed forms:

    lambda2 -> 1 / (1 + 2 mu)
    lambda3 -> (5 + 7 mu) / ((1 + 2 mu)(1 + 3 mu))
    r3      -> (1 - mu) sqrt(1 + 2 mu) / (1 + 3 mu)

Truncating every bracket at mu^k gives instead ratios of two degree-k
polynomials in mu; those are what the order-k intercept curves approach.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .intercepts import r3
from .oscillator import as_mu
from .series import MuSeries, bracket_product, npoly_eval_at_integer, series_ratio_eval

__all__ = [
    "AsymptoteResult",
    "lambda2_asymptote_exact",
    "lambda3_asymptote_exact",
    "r3_asymptote_exact",
    "lambda2_asymptote_series",
    "lambda3_asymptote_series",
    "lambda2_asymptote_truncated",
    "lambda3_asymptote_truncated",
    "r3_asymptote_truncated",
    "asymptote_from_polynomials",
    "asymptotes",
]


@dataclass(frozen=True)
class AsymptoteResult:
    mu: float
    order: Union[int, str]
    lambda2: float
    lambda3: float
    r3: float


def _exact_arg(mu):
    # Fractions stay exact so closed-form identities can be checked without rounding
    if isinstance(mu, Fraction):
        if mu < 0:
            raise ValueError("deformation parameter must be >= 0")
        return mu
    return as_mu(mu)


def lambda2_asymptote_exact(mu):
    mu = _exact_arg(mu)
    return 1 / (1 + 2 * mu)


def lambda3_asymptote_exact(mu):
    mu = _exact_arg(mu)
    return (5 + 7 * mu) / ((1 + 2 * mu) * (1 + 3 * mu))


def r3_asymptote_exact(mu) -> float:
    mu = float(_exact_arg(mu))
    return (1 - mu) * math.sqrt(1 + 2 * mu) / (1 + 3 * mu)


def lambda2_asymptote_series(k: int) -> tuple[MuSeries, MuSeries]:
    """Numerator and denominator of the order-k lambda2 asymptote.

    Coefficients ``(-1)^s (2^(s+2) - s - 3)`` over ``(-1)^r (r + 1)``.
    """
    if k < 0:
        raise ValueError("order must be non-negative")
    num = [(-1) ** s * (2 ** (s + 2) - s - 3) for s in range(k + 1)]
    den = [(-1) ** r * (r + 1) for r in range(k + 1)]
    return MuSeries(num, k), MuSeries(den, k)


def lambda3_asymptote_series(k: int) -> tuple[MuSeries, MuSeries]:
    """Numerator and denominator of lambda3 + 1 at order k.

    ``6 (-1)^s ((3^(s+2) + 1)/2 - 2^(s+2))`` over ``(-1)^r (r+1)(r+2)/2``.
    """
    if k < 0:
        raise ValueError("order must be non-negative")
    num = [6 * (-1) ** s * ((3 ** (s + 2) + 1) // 2 - 2 ** (s + 2)) for s in range(k + 1)]
    den = [(-1) ** r * (r + 1) * (r + 2) // 2 for r in range(k + 1)]
    return MuSeries(num, k), MuSeries(den, k)


def lambda2_asymptote_truncated(mu, order: int) -> float:
    num, den = lambda2_asymptote_series(order)
    return series_ratio_eval(num, den, as_mu(mu))


def lambda3_asymptote_truncated(mu, order: int) -> float:
    num, den = lambda3_asymptote_series(order)
    return series_ratio_eval(num, den, as_mu(mu)) - 1.0


def r3_asymptote_truncated(mu, order: int) -> float:
    """r3 composed from the two truncated lambda asymptotes."""
    return r3(lambda2_asymptote_truncated(mu, order), lambda3_asymptote_truncated(mu, order))


def asymptote_from_polynomials(n: int, order: int) -> tuple[MuSeries, MuSeries]:
    """Derive the asymptote of lambda_n + 1 straight from the bracket products.

    For large x, ``<N^m> = 1/x + (2^m - 2)/x^2 + (3^m - 3 2^m + 3)/x^3 + ...``,
    so for a polynomial P vanishing at N = 0..n-1 the leading term of <P(N)>
    is ``P(n) x^-n``, while ``<Q(N)>^n ~ Q(1)^n x^-n``. Returns
    ``(P(n), Q(1)^n)`` with P the n-bracket product and Q the single bracket.
    """
    if n not in (2, 3):
        raise ValueError("only n = 2 and n = 3 are supported")
    if order < 0:
        raise ValueError("order must be non-negative")
    num = npoly_eval_at_integer(bracket_product(n, order), n)
    den = npoly_eval_at_integer(bracket_product(1, order), 1) ** n
    return num, den


def asymptotes(mu, order: int | None = None) -> AsymptoteResult:
    """All three asymptotes, exact when ``order`` is None, else truncated at mu^order."""
    mu = as_mu(mu)
    if order is None:
        return AsymptoteResult(mu, "exact", float(lambda2_asymptote_exact(mu)),
                               float(lambda3_asymptote_exact(mu)), r3_asymptote_exact(mu))
    return AsymptoteResult(mu, order, lambda2_asymptote_truncated(mu, order),
                           lambda3_asymptote_truncated(mu, order),
                           r3_asymptote_truncated(mu, order))
