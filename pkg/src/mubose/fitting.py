"""Comparison of lambda2 curves with measured intercepts and (mu, T) grid search."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .intercepts import (DEFAULT_ORDER, PION_MASS, CurveEvaluationError, lambda2_series,
                         lambda_direct)
from .thermal import ThermalPoint

__all__ = [
    "DataFormatError",
    "ExperimentalPoint",
    "ComparisonRow",
    "FitResult",
    "read_experimental_csv",
    "parse_experimental_csv",
    "model_lambda2",
    "compare",
    "weighted_sse",
    "linear_grid",
    "fit_grid",
]


class DataFormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class ExperimentalPoint:
    k_momentum: float
    lambda2_measured: float
    sigma: float = 1.0


@dataclass(frozen=True)
class ComparisonRow:
    k_momentum: float
    measured: float
    model: float
    residual: float
    pull: float


@dataclass(frozen=True)
class FitResult:
    mu_best: float
    t_best: float
    sse: float
    grid_spec: dict
    evaluated: int = 0


def _parse_float(text: str, line: int, column: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise DataFormatError(line, f"column {column!r}: not a number: {text!r}") from None
    if not math.isfinite(value):
        raise DataFormatError(line, f"column {column!r}: non-finite value {text!r}")
    return value


def parse_experimental_csv(stream: TextIO) -> list[ExperimentalPoint]:
    """Read ``k_mev,lambda2[,sigma]`` rows; ``#`` lines are comments.

    Extra columns are ignored, so the output of the ``scan`` command can be
    read back directly (sigma then defaults to 1).
    """
    header = None
    points = []
    for lineno, raw in enumerate(stream, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        fields = [f.strip() for f in next(csv.reader([text]))]
        if header is None:
            header = fields
            missing = {"k_mev", "lambda2"} - set(header)
            if missing:
                raise DataFormatError(lineno, f"header lacks column(s) {sorted(missing)}")
            continue
        if len(fields) != len(header):
            raise DataFormatError(lineno, f"expected {len(header)} fields, got {len(fields)}")
        row = dict(zip(header, fields))
        k = _parse_float(row["k_mev"], lineno, "k_mev")
        lam = _parse_float(row["lambda2"], lineno, "lambda2")
        sigma = _parse_float(row["sigma"], lineno, "sigma") if "sigma" in row else 1.0
        if k < 0:
            raise DataFormatError(lineno, "momentum must be non-negative")
        if not lam > 0:
            raise DataFormatError(lineno, "measured lambda2 must be positive")
        if not sigma > 0:
            raise DataFormatError(lineno, "sigma must be positive")
        points.append(ExperimentalPoint(k, lam, sigma))
    if header is None:
        raise DataFormatError(1, "no header line")
    if not points:
        raise DataFormatError(lineno + 1 if header else 1, "no data rows")
    return points


def read_experimental_csv(path) -> list[ExperimentalPoint]:
    if isinstance(path, io.TextIOBase):
        return parse_experimental_csv(path)
    with open(Path(path), encoding="utf-8", newline="") as fh:
        return parse_experimental_csv(fh)


def model_lambda2(k: float, mu: float, temperature: float, mass: float = PION_MASS,
                  order: int = DEFAULT_ORDER, method: str = "series") -> float:
    point = ThermalPoint(mass, k, temperature)
    if method == "series":
        return lambda2_series(mu, point, order)
    if method == "direct":
        return lambda_direct(2, mu, point)
    raise ValueError(f"unknown method {method!r}")


def compare(data: Sequence[ExperimentalPoint], mu: float, temperature: float,
            mass: float = PION_MASS, order: int = DEFAULT_ORDER,
            method: str = "series") -> list[ComparisonRow]:
    rows = []
    for p in data:
        try:
            model = model_lambda2(p.k_momentum, mu, temperature, mass, order, method)
        except (ValueError, ArithmeticError, RuntimeError) as exc:
            raise CurveEvaluationError(p.k_momentum, exc) from exc
        residual = p.lambda2_measured - model
        rows.append(ComparisonRow(p.k_momentum, p.lambda2_measured, model, residual,
                                  residual / p.sigma))
    return rows


def weighted_sse(rows: Iterable[ComparisonRow]) -> float:
    return math.fsum(r.pull ** 2 for r in rows)


def linear_grid(lo: float, hi: float, step: float) -> list[float]:
    """``lo, lo+step, ...`` up to ``hi`` inclusive (tolerant of float drift)."""
    if not step > 0:
        raise ValueError("grid step must be positive")
    if hi < lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    n = int(math.floor((hi - lo) / step + 1e-9))
    return [round(lo + i * step, 12) for i in range(n + 1)]


def fit_grid(data: Sequence[ExperimentalPoint], mu_range: tuple[float, float, float],
             t_range: tuple[float, float, float], mass: float = PION_MASS,
             order: int = DEFAULT_ORDER, method: str = "series") -> FitResult:
    """Exhaustive search over (mu, T); ties go to the lexicographically smallest pair."""
    mus = linear_grid(*mu_range)
    ts = linear_grid(*t_range)
    best = None
    for mu in mus:
        for t in ts:
            sse = weighted_sse(compare(data, mu, t, mass, order, method))
            if best is None or sse < best[0]:
                best = (sse, mu, t)
    spec = {"mu": tuple(mu_range), "t": tuple(t_range), "mass": mass, "order": order,
            "method": method}
    return FitResult(best[1], best[2], best[0], spec, len(mus) * len(ts))
