"""Command-line interface.

Exit codes: 0 success, 2 bad flags, 3 model evaluation failure, 4 bad input data.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import __version__
from .asymptotics import asymptotes
from .fitting import DataFormatError, compare, fit_grid, linear_grid, read_experimental_csv, weighted_sse
from .intercepts import DEFAULT_ORDER, PION_MASS, CurveEvaluationError, scan_curve
from .oscillator import CONVERGENCE_MARGIN, spectrum
from .thermal import build_triangle

EXIT_USAGE = 2
EXIT_EVAL = 3
EXIT_DATA = 4

# relative series/direct gap above which a scan row is flagged
DEVIATION_THRESHOLD = 0.05


def fmt(value: float) -> str:
    text = f"{value:.9f}"
    if text.startswith("-") and not text.strip("-0."):
        text = text[1:]
    return text


def _non_negative(text: str) -> float:
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def _order(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("order must be >= 0")
    return value


def _warn_mu(mu: float) -> None:
    if mu >= CONVERGENCE_MARGIN:
        print(f"warning: mu={mu} >= 1/3, truncated mu-series are unreliable", file=sys.stderr)


def _add_model_args(p: argparse.ArgumentParser, with_mu_t: bool = True) -> None:
    if with_mu_t:
        p.add_argument("--mu", type=_non_negative, required=True, help="deformation parameter")
        p.add_argument("--t", type=_positive, required=True, help="temperature in MeV")
    p.add_argument("--mass", type=_non_negative, default=PION_MASS,
                   help="particle mass in MeV (default: %(default)s)")
    p.add_argument("--order", type=_order, default=DEFAULT_ORDER,
                   help="truncation order in mu (default: %(default)s)")
    p.add_argument("--method", choices=("series", "direct"), default="series")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mubose", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", help="intercept curves on a momentum grid (CSV)")
    _add_model_args(p)
    p.add_argument("--kmin", type=_non_negative, default=0.0)
    p.add_argument("--kmax", type=_non_negative, default=600.0)
    p.add_argument("--steps", type=int, default=61, help="number of grid points")
    p.add_argument("--log", action="store_true", help="logarithmic momentum grid")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("compare", help="residuals of a lambda2 curve against data")
    p.add_argument("data_csv")
    _add_model_args(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("fit", help="exhaustive (mu, T) grid search against data")
    p.add_argument("data_csv")
    p.add_argument("--mu-min", type=_non_negative, required=True)
    p.add_argument("--mu-max", type=_non_negative, required=True)
    p.add_argument("--mu-step", type=_positive, required=True)
    p.add_argument("--t-min", type=_positive, required=True)
    p.add_argument("--t-max", type=_positive, required=True)
    p.add_argument("--t-step", type=_positive, required=True)
    _add_model_args(p, with_mu_t=False)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("asymptote", help="large-momentum limits, truncated and exact")
    p.add_argument("--mu", type=_non_negative, required=True)
    p.add_argument("--order", type=_order, default=DEFAULT_ORDER)
    p.set_defaults(func=cmd_asymptote)

    p = sub.add_parser("triangle", help="dump the moment coefficient triangle (TSV)")
    p.add_argument("--max-m", type=int, default=14)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("spectrum", help="structure function and energy levels")
    p.add_argument("--mu", type=_non_negative, required=True)
    p.add_argument("--n-max", type=int, default=10)
    p.set_defaults(func=cmd_spectrum)
    return parser


def momentum_grid(kmin: float, kmax: float, steps: int, log: bool = False) -> list[float]:
    if steps == 1:
        return [kmin]
    if log:
        a, b = math.log(kmin), math.log(kmax)
        return [math.exp(a + (b - a) * i / (steps - 1)) for i in range(steps)]
    return [kmin + (kmax - kmin) * i / (steps - 1) for i in range(steps)]


def cmd_scan(args, parser, out) -> int:
    if args.steps < 1:
        parser.error("--steps must be >= 1")
    if args.kmax < args.kmin or (args.steps > 1 and args.kmax == args.kmin):
        parser.error("--kmax must exceed --kmin")
    if args.log and args.kmin <= 0:
        parser.error("--log needs --kmin > 0")
    _warn_mu(args.mu)
    grid = momentum_grid(args.kmin, args.kmax, args.steps, args.log)
    curve = scan_curve(args.mu, args.mass, args.t, args.order, grid, args.method)
    flags = [args.method] * len(grid)
    if args.method == "series":
        ref = scan_curve(args.mu, args.mass, args.t, args.order, grid, "direct")
        for i, (s2, s3, d2, d3) in enumerate(zip(curve.values2, curve.values3,
                                                  ref.values2, ref.values3)):
            if any(abs(s - d) > DEVIATION_THRESHOLD * abs(d) for s, d in ((s2, d2), (s3, d3))):
                flags[i] = "series-deviates"
    out.write("k_mev,lambda2,lambda3,r3,method_flag\n")
    for (k, l2, l3, rr), flag in zip(curve.rows(), flags):
        out.write(f"{fmt(k)},{fmt(l2)},{fmt(l3)},{fmt(rr)},{flag}\n")
    return 0


def cmd_compare(args, parser, out) -> int:
    data = read_experimental_csv(args.data_csv)
    rows = compare(data, args.mu, args.t, args.mass, args.order, args.method)
    out.write("k_mev,measured,model,residual,pull\n")
    for r in rows:
        out.write(f"{fmt(r.k_momentum)},{fmt(r.measured)},{fmt(r.model)},"
                  f"{fmt(r.residual)},{fmt(r.pull)}\n")
    out.write(f"# sse={fmt(weighted_sse(rows))} points={len(rows)}\n")
    return 0


def cmd_fit(args, parser, out) -> int:
    mu_range = (args.mu_min, args.mu_max, args.mu_step)
    t_range = (args.t_min, args.t_max, args.t_step)
    for name, (lo, hi, _) in (("mu", mu_range), ("t", t_range)):
        if hi < lo:
            parser.error(f"--{name}-max must be >= --{name}-min")
    data = read_experimental_csv(args.data_csv)
    _warn_mu(args.mu_max)
    res = fit_grid(data, mu_range, t_range, args.mass, args.order, args.method)
    out.write(f"mu_best {fmt(res.mu_best)}\n")
    out.write(f"t_best {fmt(res.t_best)}\n")
    out.write(f"sse {fmt(res.sse)}\n")
    out.write(f"grid_mu {fmt(args.mu_min)}:{fmt(args.mu_max)}:{fmt(args.mu_step)} "
              f"({len(linear_grid(*mu_range))} values)\n")
    out.write(f"grid_t {fmt(args.t_min)}:{fmt(args.t_max)}:{fmt(args.t_step)} "
              f"({len(linear_grid(*t_range))} values)\n")
    out.write(f"mass {fmt(args.mass)}\norder {args.order}\nmethod {args.method}\n")
    return 0


def cmd_asymptote(args, parser, out) -> int:
    _warn_mu(args.mu)
    trunc = asymptotes(args.mu, args.order)
    exact = asymptotes(args.mu)
    out.write(f"mu {fmt(args.mu)}\n")
    out.write(f"{'':<16}{'lambda2':>14}{'lambda3':>14}{'r3':>14}\n")
    for label, res in ((f"truncated(k={args.order})", trunc), ("exact", exact)):
        out.write(f"{label:<16}{fmt(res.lambda2):>14}{fmt(res.lambda3):>14}{fmt(res.r3):>14}\n")
    gap = (trunc.lambda2 - exact.lambda2, trunc.lambda3 - exact.lambda3, trunc.r3 - exact.r3)
    out.write(f"{'gap':<16}" + "".join(f"{fmt(g):>14}" for g in gap) + "\n")
    return 0


def cmd_triangle(args, parser, out) -> int:
    if args.max_m < 1:
        parser.error("--max-m must be >= 1")
    out.write(build_triangle(args.max_m).to_tsv())
    return 0


def cmd_spectrum(args, parser, out) -> int:
    if args.n_max < 0:
        parser.error("--n-max must be >= 0")
    out.write("n,phi,energy\n")
    for n, phi, e in spectrum(args.mu, args.n_max):
        out.write(f"{n},{fmt(phi)},{fmt(e)}\n")
    return 0


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser, out)
    except DataFormatError as exc:
        print(f"error: {args.data_csv}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except CurveEvaluationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: evaluation failed: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
