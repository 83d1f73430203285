"""Command-line front end.

Exit codes: 0 all checks passed, 1 at least one in-domain mismatch (or a
numeric difference above tolerance), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

import mpmath

from . import harmonic, stirling_bell
from .identities import (
    REGISTRY,
    SpecError,
    UnknownIdentity,
    expand_grid,
    load_document,
    render_reports,
    sample_reports,
    summarize,
    sweep,
)
from .identities.params import INT_FIELDS, RATIONAL_FIELDS, TEXT_FIELDS, VECTOR_FIELDS
from .numeric_core import Composition, DomainError, format_rational, parse_rational
from . import mzv_numeric

DEFAULT_SEED = 42
PARAM_FLAGS = ("n", "x", "y", "z", "p", "m", "r", "l", "j", "a", "alpha", "k", "pvec", "mvec", "selector")


class UsageError(Exception):
    pass


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("identity parameters (single values or integer ranges lo..hi)")
    for name in PARAM_FLAGS:
        group.add_argument(f"--{name}", dest=f"param_{name}", metavar="VALUE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mhsums", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a single exact quantity")
    ev.add_argument("quantity", choices=["mhs", "mhss", "mhts", "H", "Hbar", "stirling1", "bellY"])
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--k", help="composition like 2,1 (integer for stirling1/bellY)")
    ev.add_argument("--z", help="rational weight for mhts")
    ev.add_argument("--p", type=int, default=1, help="order for H and Hbar")

    ver = sub.add_parser("verify", help="check an identity at points, over a grid, or at random samples")
    ver.add_argument("identity", nargs="?", help="identity id (see `mhsums list`)")
    _add_param_flags(ver)
    ver.add_argument("--config", help="YAML/JSON document with identity, grid or sampler, seed, budget")
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--budget", type=int, default=None, help="number of random samples")
    ver.add_argument("--override", action="store_true", help="evaluate outside the stated parameter ranges")
    ver.add_argument("--format", choices=["json", "csv", "plain"], default="plain")
    ver.add_argument("--output", help="write reports here instead of stdout")
    ver.add_argument("--timings", action="store_true", help="record elapsed seconds (breaks byte-reproducibility)")
    ver.add_argument("--workers", type=int, default=None)

    num = sub.add_parser("numeric", help="compare the truncated star value with the combined polylog series")
    num.add_argument("--m", type=int, default=0)
    num.add_argument("--r", type=int, default=1)
    num.add_argument("--y", default="1/2")
    num.add_argument("--N", type=int, default=None, help="truncation bound (default from the cost model)")
    num.add_argument("--digits", type=int, default=mzv_numeric.DEFAULT_DIGITS)
    num.add_argument("--tol", type=float, default=1e-3)
    num.add_argument("--trace", help="comma list of n for the binomial partial-sum trace")

    sub.add_parser("list", help="list registered identities")
    return parser


def cmd_eval(args) -> int:
    n = args.n
    q = args.quantity
    if q in ("mhs", "mhss", "mhts"):
        if args.k is None:
            raise UsageError(f"{q} needs --k")
        k = Composition.of(args.k)
        if q == "mhs":
            value = harmonic.mhs(n, k)
        elif q == "mhss":
            value = harmonic.mhss(n, k)
        else:
            if args.z is None:
                raise UsageError("mhts needs --z")
            value = harmonic.mhts(n, k, parse_rational(args.z))
    elif q == "H":
        value = harmonic.harmonic_number(n, args.p)
    elif q == "Hbar":
        value = harmonic.alt_harmonic_number(n, args.p)
    else:
        if args.k is None:
            raise UsageError(f"{q} needs --k")
        kk = int(args.k)
        value = stirling_bell.stirling1(n, kk) if q == "stirling1" else stirling_bell.bell_number_Y(kk, n)
    print(format_rational(value))
    return 0


def _grid_from_flags(args) -> dict:
    grid = {}
    for name in PARAM_FLAGS:
        value = getattr(args, f"param_{name}")
        if value is not None:
            grid[name] = value
    return grid


def cmd_verify(args) -> int:
    doc = load_document(args.config) if args.config else {}
    identity_id = args.identity or doc.get("identity")
    if identity_id is None:
        raise UsageError("no identity given")
    if identity_id not in REGISTRY:
        raise UnknownIdentity(identity_id)
    override = args.override or bool(doc.get("override", False))
    seed = args.seed if args.seed is not None else int(doc.get("seed", DEFAULT_SEED))
    budget = args.budget if args.budget is not None else doc.get("budget")

    flag_grid = _grid_from_flags(args)
    if budget is not None:
        sampler = dict(doc.get("sampler") or REGISTRY[identity_id].sampler)
        sampler.update(flag_grid)
        reports = sample_reports(identity_id, sampler, seed, int(budget), override)
    else:
        grid = dict(doc.get("grid") or {})
        grid.update(flag_grid)
        if not grid:
            raise UsageError("give parameters, a --config grid, or --budget for random sampling")
        reports = sweep(identity_id, expand_grid(grid), override, args.workers)

    text = render_reports(reports, args.format, args.timings)
    summary = summarize(reports)
    line = f"{identity_id}: {summary}"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(line)
    else:
        sys.stdout.write(text)
        print(line, file=sys.stdout if args.format == "plain" else sys.stderr)
    return 0 if summary.ok else 1


def cmd_numeric(args) -> int:
    y = parse_rational(args.y)
    ref = mzv_numeric.mzsv_star_numeric(args.m, args.r, args.N, args.digits)
    combined = mzv_numeric.thm4_rhs_numeric(args.m, args.r, y, args.N, args.digits)
    shown = min(args.digits, 20)
    with mpmath.workdps(args.digits):
        diff = abs(ref.value - combined.value)
    print(f"zeta_star(m+2,{{1}}_(r-1))  m={args.m} r={args.r} N={ref.truncation}: {ref.to_string(shown)}"
          f"  err~{mpmath.nstr(ref.err_estimate, 3)}")
    print(f"combined polylog series      y={format_rational(y)} N={combined.truncation}: {combined.to_string(shown)}"
          f"  err~{mpmath.nstr(combined.err_estimate, 3)}")
    print(f"abs difference: {mpmath.nstr(diff, 5)}  tol: {args.tol:g}")
    if args.trace:
        ns = [int(t) for t in args.trace.split(",") if t.strip()]
        trace = mzv_numeric.toeplitz_trace(args.m, args.r, y, ns, args.digits, limit=ref.value)
        for n, v, d, w in zip(trace.ns, trace.values, trace.deltas, trace.weight_sums):
            print(f"  n={n:<6d} partial={mpmath.nstr(v, shown)}  delta={mpmath.nstr(d, 5)}  weights={format_rational(w)}")
    return 0 if diff < args.tol else 1


def cmd_list(args) -> int:
    for ident in REGISTRY.values():
        tag = " (conjectural/reference)" if ident.conjectural else ""
        print(f"{ident.id:15s} {', '.join(ident.params):28s} {ident.title}{tag}")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"eval": cmd_eval, "verify": cmd_verify, "numeric": cmd_numeric, "list": cmd_list}
    try:
        return handlers[args.command](args)
    except UnknownIdentity as exc:
        parser.print_usage(sys.stderr)
        print(f"mhsums: unknown identity {exc.args[0]!r}; try `mhsums list`", file=sys.stderr)
        return 2
    except (UsageError, SpecError, DomainError, ValueError, OSError) as exc:
        parser.print_usage(sys.stderr)
        print(f"mhsums: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
