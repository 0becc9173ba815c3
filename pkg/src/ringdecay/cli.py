"""Command-line front end emitting deterministic CSV.

Subcommands
-----------
coeffs    ring coefficient tables c_n(a) (and d_n(a))
spectrum  decay spectrum of a finite ring, analytic and/or brute force
sweep     single-winding mode rates over a lambda/d grid (figure data)
validate  run the invariant grid and report pass/fail per check

All numeric output uses 17 significant digits and LF line endings, so
identical command lines produce byte-identical files.  Exit codes:
0 success, 1 validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
import warnings

import numpy as np

from .ring_model import ModelKind, RingConfig, lattice_conversion
from .spectrum import analytic_spectrum, continuous_limit_rate, oracle_spectrum
from .specfun import coeff_table
from .validation import all_passed, format_report, run_checks

USAGE_ERROR = 2
VALIDATION_ERROR = 1


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _write_lines(lines, path: str) -> None:
    text = "\n".join(lines) + "\n"
    if path == "stdout":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def _model_from_args(args) -> ModelKind:
    if args.model == "vector":
        return ModelKind.vectorial(args.delta)
    return ModelKind.scalar()


def _add_output(parser) -> None:
    parser.add_argument("--output", default="stdout", metavar="PATH|stdout",
                        help="write CSV here (default: stdout)")


def _add_model(parser) -> None:
    parser.add_argument("--model", choices=("scalar", "vector"), default="scalar",
                        help="light model (default: scalar)")
    parser.add_argument("--delta", type=float, default=0.0, metavar="RAD",
                        help="dipole tilt angle for --model vector (default: 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringdecay",
        description="Cooperative decay spectrum of emitters equally spaced on a ring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="emit c_n(a) (and d_n(a)) as CSV")
    p.add_argument("--a", type=float, required=True, help="size parameter a >= 0")
    p.add_argument("--n-max", type=int, required=True, help="largest |n| to emit")
    p.add_argument("--with-d", action="store_true", help="include the d_n column")
    p.add_argument("--method", choices=("quadrature", "series"), default="quadrature")
    _add_output(p)

    p = sub.add_parser("spectrum", help="emit the decay spectrum as CSV")
    p.add_argument("--n-atoms", type=int, required=True)
    geom = p.add_mutually_exclusive_group(required=True)
    geom.add_argument("--a", type=float, help="size parameter a >= 0")
    geom.add_argument("--d-over-lambda", type=float,
                      help="nearest-neighbour spacing in wavelengths")
    geom.add_argument("--lambda-over-d", type=float,
                      help="inverse spacing (figure abscissa)")
    _add_model(p)
    p.add_argument("--path", choices=("analytic", "oracle", "both"), default="analytic",
                   help="which computation to emit (default: analytic)")
    _add_output(p)

    p = sub.add_parser(
        "sweep",
        help="single-winding mode rates over a log-spaced lambda/d grid",
        description="Emits the single-winding (continuum-limit) rate per mode, "
                    "the quantity whose small-spacing plateau is (lambda/d)/2 for "
                    "the scalar model and (3/4)(lambda/d) for aligned dipoles.",
    )
    p.add_argument("--n-atoms", type=int, default=10)
    p.add_argument("--k", default="0,1,2,4", metavar="LIST",
                   help="comma list of signed mode indices (default: 0,1,2,4)")
    p.add_argument("--grid-min", type=float, default=0.05, help="smallest lambda/d")
    p.add_argument("--grid-max", type=float, default=100.0, help="largest lambda/d")
    p.add_argument("--grid-points", type=int, default=200)
    _add_model(p)
    _add_output(p)

    p = sub.add_parser("validate", help="run the invariant grid; exit 0 iff all pass")
    _add_output(p)

    return parser


def cmd_coeffs(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        table = coeff_table(args.a, args.n_max, with_d=args.with_d, method=args.method)
    for w in caught:
        print(f"note: {w.message}", file=sys.stderr)
    header = "n,c,d" if args.with_d else "n,c"
    lines = [header]
    for n in range(-args.n_max, args.n_max + 1):
        row = [str(n), _fmt(table.c_at(n))]
        if args.with_d:
            row.append(_fmt(table.d_at(n)))
        lines.append(",".join(row))
    _write_lines(lines, args.output)
    return 0


def cmd_spectrum(args) -> int:
    if args.a is not None:
        a = args.a
    elif args.d_over_lambda is not None:
        a = lattice_conversion(args.n_atoms, args.d_over_lambda)
    else:
        a = lattice_conversion(args.n_atoms, 1.0 / args.lambda_over_d)
    config = RingConfig(args.n_atoms, a)
    model = _model_from_args(args)

    ana = analytic_spectrum(config, model) if args.path in ("analytic", "both") else None
    orc = oracle_spectrum(config, model) if args.path in ("oracle", "both") else None

    if args.path == "both":
        lines = ["k,rate,rate_oracle,abs_diff"]
    else:
        lines = ["k,rate"]
    primary = ana if ana is not None else orc
    max_diff = 0.0
    for k in primary.signed_indices():
        if args.path == "both":
            diff = abs(ana.rate(k) - orc.rate(k))
            max_diff = max(max_diff, diff)
            lines.append(f"{k},{_fmt(ana.rate(k))},{_fmt(orc.rate(k))},{_fmt(diff)}")
        else:
            lines.append(f"{k},{_fmt(primary.rate(k))}")
    _write_lines(lines, args.output)
    if args.path == "both":
        print(f"max_abs_diff = {_fmt(max_diff)}", file=sys.stderr)
    return 0


def _parse_k_list(text: str, n_atoms: int) -> list[int]:
    try:
        ks = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"invalid mode list {text!r}") from exc
    if not ks:
        raise ValueError("mode list is empty")
    for k in ks:
        if abs(k) > n_atoms / 2:
            raise ValueError(f"|k| = {abs(k)} exceeds N/2 = {n_atoms / 2}")
    return sorted(ks)


def cmd_sweep(args) -> int:
    if not (0.0 < args.grid_min < args.grid_max):
        raise ValueError("grid must satisfy 0 < grid-min < grid-max")
    if args.grid_points < 2:
        raise ValueError("grid-points must be at least 2")
    ks = _parse_k_list(args.k, args.n_atoms)
    model = _model_from_args(args)
    grid = np.logspace(math.log10(args.grid_min), math.log10(args.grid_max),
                       args.grid_points)
    lines = ["lambda_over_d,k,rate"]
    for lam_over_d in grid:
        a = lattice_conversion(args.n_atoms, 1.0 / lam_over_d)
        for k in ks:
            rate = continuous_limit_rate(args.n_atoms, a, k, model=model)
            lines.append(f"{_fmt(lam_over_d)},{k},{_fmt(rate)}")
    _write_lines(lines, args.output)
    return 0


def cmd_validate(args) -> int:
    results = run_checks()
    _write_lines(format_report(results).split("\n"), args.output)
    return 0 if all_passed(results) else VALIDATION_ERROR


_COMMANDS = {
    "coeffs": cmd_coeffs,
    "spectrum": cmd_spectrum,
    "sweep": cmd_sweep,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
