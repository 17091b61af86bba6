"""Exact truncated power series in mu and polynomials in N over them.

A :class:`MuSeries` is a polynomial in the deformation parameter mu cut off
at a fixed order K. An :class:`NPolynomial` is a polynomial in the number
variable N whose coefficients are MuSeries sharing one order, which is the
layout needed to read off the N^r coefficients of deformed bracket products.

All coefficients are :class:`fractions.Fraction`; nothing here rounds.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "MuSeries",
    "NPolynomial",
    "mu_bracket",
    "bracket_product",
    "npoly_eval_at_integer",
    "series_ratio_eval",
]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"exact rational coefficient required, got {type(value).__name__}")


def _convolve(a, b, order: int) -> list:
    # truncated Cauchy product; integer coefficients take a fast int-only path
    if all(c.denominator == 1 for c in a) and all(c.denominator == 1 for c in b):
        a = [c.numerator for c in a]
        b = [c.numerator for c in b]
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(order + 1 - i):
            out[i + j] += ai * b[j]
    return out


class MuSeries:
    """Truncated power series ``c_0 + c_1 mu + ... + c_K mu^K``.

    Instances are immutable. Arithmetic between two series requires equal
    orders; use :meth:`truncate` to bring a series down to a lower order.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("order is required for an empty coefficient list")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(cs) > order + 1:
            if any(cs[order + 1:]):
                raise ValueError("coefficients beyond the truncation order; call truncate()")
            cs = cs[: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def zero(cls, order: int) -> MuSeries:
        return cls((), order)

    @classmethod
    def constant(cls, value, order: int) -> MuSeries:
        return cls((value,), order)

    @classmethod
    def truncated(cls, coeffs: Iterable, order: int) -> MuSeries:
        """Build a series from any number of coefficients, dropping mu^s for s > order."""
        return cls(list(coeffs)[: order + 1], order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, s: int) -> Fraction:
        return self._coeffs[s]

    def __len__(self) -> int:
        return self._order + 1

    def __iter__(self):
        return iter(self._coeffs)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def truncate(self, order: int) -> MuSeries:
        if order > self._order:
            raise ValueError(f"cannot raise truncation order {self._order} -> {order}")
        return MuSeries(self._coeffs[: order + 1], order)

    def _check(self, other: MuSeries) -> None:
        if other._order != self._order:
            raise ValueError(f"order mismatch: {self._order} vs {other._order}")

    def __eq__(self, other):
        if not isinstance(other, MuSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._order, self._coeffs))

    def __neg__(self) -> MuSeries:
        return MuSeries([-c for c in self._coeffs], self._order)

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            other = MuSeries.constant(other, self._order)
        if not isinstance(other, MuSeries):
            return NotImplemented
        self._check(other)
        return MuSeries([a + b for a, b in zip(self._coeffs, other._coeffs)], self._order)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Rational)):
            other = MuSeries.constant(other, self._order)
        if not isinstance(other, MuSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            f = _frac(other)
            return MuSeries([c * f for c in self._coeffs], self._order)
        if not isinstance(other, MuSeries):
            return NotImplemented
        self._check(other)
        return MuSeries(_convolve(self._coeffs, other._coeffs, self._order), self._order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MuSeries:
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = MuSeries.constant(1, self._order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, mu: float) -> float:
        """Horner evaluation at a floating mu."""
        acc = 0.0
        for c in reversed(self._coeffs):
            acc = acc * mu + float(c)
        return acc

    def evaluate_exact(self, mu) -> Fraction:
        mu = _frac(mu)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * mu + c
        return acc

    def __repr__(self):
        return f"MuSeries({[str(c) for c in self._coeffs]}, order={self._order})"

    def __str__(self):
        terms = []
        for s, c in enumerate(self._coeffs):
            if not c:
                continue
            mono = "" if s == 0 else ("mu" if s == 1 else f"mu^{s}")
            if s and c == 1:
                terms.append(mono)
            elif s and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


class NPolynomial:
    """Polynomial ``sum_r c_r(mu) N^r`` with MuSeries coefficients of one shared order."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, coeffs: Sequence[MuSeries], order: int | None = None):
        cs = list(coeffs)
        if order is None:
            if not cs:
                raise ValueError("order is required for an empty polynomial")
            order = cs[0].order
        for c in cs:
            if not isinstance(c, MuSeries):
                raise TypeError("NPolynomial coefficients must be MuSeries")
            if c.order != order:
                raise ValueError("all coefficient series must share one truncation order")
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        if not cs:
            cs = [MuSeries.zero(order)]
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def from_table(cls, table: Sequence[Sequence], order: int) -> NPolynomial:
        """``table[r][s]`` is the coefficient of mu^s N^r."""
        return cls([MuSeries.truncated(row, order) for row in table], order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[MuSeries, ...]:
        return self._coeffs

    def coeff(self, r: int) -> MuSeries:
        if 0 <= r < len(self._coeffs):
            return self._coeffs[r]
        return MuSeries.zero(self._order)

    def truncate(self, order: int) -> NPolynomial:
        return NPolynomial([c.truncate(order) for c in self._coeffs], order)

    def __eq__(self, other):
        if not isinstance(other, NPolynomial):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._order, self._coeffs))

    def __add__(self, other):
        if not isinstance(other, NPolynomial):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return NPolynomial([self.coeff(r) + other.coeff(r) for r in range(n)], self._order)

    def __neg__(self):
        return NPolynomial([-c for c in self._coeffs], self._order)

    def __sub__(self, other):
        if not isinstance(other, NPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MuSeries):
            return NPolynomial([c * other for c in self._coeffs], self._order)
        if isinstance(other, (int, Rational)):
            return NPolynomial([c * other for c in self._coeffs], self._order)
        if not isinstance(other, NPolynomial):
            return NotImplemented
        if other._order != self._order:
            raise ValueError(f"order mismatch: {self._order} vs {other._order}")
        K = self._order
        out = [[0] * (K + 1) for _ in range(len(self._coeffs) + len(other._coeffs) - 1)]
        for i, a in enumerate(self._coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other._coeffs):
                acc = out[i + j]
                for s, c in enumerate(_convolve(a.coeffs, b.coeffs, K)):
                    acc[s] += c
        return NPolynomial([MuSeries(row, K) for row in out], K)

    __rmul__ = __mul__

    def evaluate_coeffs(self, mu: float) -> list[float]:
        """Floating values of every N^r coefficient at the given mu."""
        return [c(mu) for c in self._coeffs]

    def at(self, n) -> MuSeries:
        """Substitute an exact value for N (Horner in N over series)."""
        n = _frac(n)
        acc = MuSeries.zero(self._order)
        for c in reversed(self._coeffs):
            acc = acc * n + c
        return acc

    def __repr__(self):
        return f"NPolynomial(degree={self.degree}, order={self._order})"

    def __str__(self):
        parts = []
        for r, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            mono = "" if r == 0 else ("N" if r == 1 else f"N^{r}")
            parts.append(f"({c}){'*' + mono if mono else ''}")
        return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def mu_bracket(shift: int, order: int) -> NPolynomial:
    """Truncation of ``[N - shift]_mu = (N - shift) * sum_s (-mu (N - shift))^s`` at mu^order.

    The mu^s term is ``(-1)^s (N - a)^(s+1)``; expanding the binomial gives
    ``(-1)^s C(s+1, r) (-a)^(s+1-r)`` as the coefficient of mu^s N^r.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if shift < 0:
        raise ValueError("shift must be non-negative")
    table = [[0] * (order + 1) for _ in range(order + 2)]
    for s in range(order + 1):
        sign = -1 if s % 2 else 1
        for r in range(s + 2):
            table[r][s] = sign * comb(s + 1, r) * (-shift) ** (s + 1 - r)
    return NPolynomial.from_table(table, order)


@lru_cache(maxsize=None)
def bracket_product(n: int, order: int) -> NPolynomial:
    """``prod_{a=0}^{n-1} [N - a]_mu`` expanded in N, truncated at mu^order.

    A mu^s term carries at most N^(n+s), so the degree in N is n + order.
    """
    if n < 1:
        raise ValueError("particle count must be at least 1")
    result = mu_bracket(0, order)
    for a in range(1, n):
        result = result * mu_bracket(a, order)
    return result


def npoly_eval_at_integer(p: NPolynomial, n: int) -> MuSeries:
    return p.at(n)


def series_ratio_eval(num: MuSeries, den: MuSeries, mu: float) -> float:
    """Floating ``num(mu) / den(mu)``; raises ZeroDivisionError if the denominator is 0."""
    d = den(mu)
    if d == 0.0:
        raise ZeroDivisionError(f"denominator series vanishes at mu={mu!r}")
    return num(mu) / d
