"""Command-line front end.

Exit codes: 0 success, 1 a verified claim is false, 2 invalid input.  Invalid
input also prints a one-line JSON object ``{"error": ..., "reason": ...}`` on
stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import (
    claim_ub2_bound,
    container_size_formula,
    easy_container_bound,
    exact_log2,
    sapozhenko_bound,
    ub1_bound,
    verify_bounds,
)
from .certificate import ConstructionError
from .counting import independence_polynomial
from .graph import GraphError, edgelist_encode, graph6_decode, graph6_encode
from .sweeps import REGIMES, SweepSpec, build, rows_to_csv, run_sweep
from .zykov import convergence_rate, k_high, k_low

EXIT_OK, EXIT_FALSE, EXIT_INVALID = 0, 1, 2


class InvalidInput(Exception):
    def __init__(self, error: str, reason: str):
        self.error = error
        self.reason = reason
        super().__init__(f"{error}: {reason}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc


def _read_graph(arg: str | None):
    text = sys.stdin.read() if arg in (None, "-") else arg
    text = text.strip()
    try:
        return graph6_decode(text)
    except (GraphError, ValueError) as exc:
        raise InvalidInput("parse", str(exc)) from exc


# --- subcommands -------------------------------------------------------------


def cmd_construct(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "low-even" and args.n % 2:
        kind = "low-odd"
    if kind != "claim" and args.alpha is None:
        raise InvalidInput("usage", "-a/--alpha is required for this construction")
    try:
        cert = build(args.n, args.d, args.n - args.d if kind == "claim" else args.alpha, kind)
    except ConstructionError as exc:
        raise InvalidInput("construction", exc.reason) from exc
    if args.cert:
        Path(args.cert).write_text(cert.to_json() + "\n")
    if args.format == "json":
        print(cert.to_json())
    elif args.format == "edgelist":
        sys.stdout.write(edgelist_encode(cert.graph))
    else:
        print(graph6_encode(cert.graph))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    if args.alpha < 0:
        raise InvalidInput("usage", "alpha must be nonnegative")
    report = verify_bounds(g, args.alpha, c=float(args.c), natural_log=args.natural_log)
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        print(report.to_json())
    return EXIT_OK if report.certified_ok else EXIT_FALSE


def cmd_count(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    poly = independence_polynomial(g)
    total = sum(poly)
    print(json.dumps({
        "n": g.n, "edges": g.num_edges(), "count": str(total), "log2_count": exact_log2(total),
        "alpha": len(poly) - 1, "polynomial": [str(x) for x in poly],
    }, sort_keys=True))
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    n, d, a, c = args.n, args.d, args.alpha, float(args.c)
    out: dict[str, object] = {"n": n, "d": d, "alpha": a, "c": c, "natural_log": args.natural_log}
    try:
        if 2 * d <= n:
            out["sapozhenko_log2"] = sapozhenko_bound(n, d, a, c, args.natural_log)
            out["ub1_log2"] = ub1_bound(n, d, a, c, args.natural_log)
        if 2 * d >= n and d < n:
            v = easy_container_bound(n, d, a)
            out["easy_container"] = str(v)
            out["easy_container_log2"] = exact_log2(v)
        if n < 2 * d < 2 * n:
            v = claim_ub2_bound(n, d)
            out["claim_ub2"] = str(v)
            out["claim_ub2_log2"] = exact_log2(v)
        if d >= 3:
            size, fam = container_size_formula(n, d, args.phi, args.natural_log)
            out["container_size"] = size
            out["container_family_log2"] = fam
    except ValueError as exc:
        raise InvalidInput("domain", str(exc)) from exc
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def _range(lo: int | None, hi: int | None) -> tuple[int, int] | None:
    if lo is None and hi is None:
        return None
    return (-1 if lo is None else lo, 1 << 30 if hi is None else hi)


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        spec = SweepSpec(
            regime=args.regime, n_min=args.n_min, n_max=args.n_max,
            d_range=_range(args.d_min, args.d_max), alpha_range=_range(args.alpha_min, args.alpha_max),
            oracle_cap=args.oracle_cap, threads=args.threads, per_case=args.per_case, corrupt=args.corrupt,
        )
    except ValueError as exc:
        raise InvalidInput("usage", str(exc)) from exc
    rows = run_sweep(spec)
    text = rows_to_csv(rows)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    failed = sum(not r.passed for r in rows)
    print(f"{len(rows)} rows, {failed} failed", file=sys.stderr)
    return EXIT_FALSE if failed else EXIT_OK


def converge_schedule(n_max: int, n_min: int = 10) -> list[int]:
    """Powers of ten from ``n_min`` up to ``n_max``, plus ``n_max`` itself."""
    out = []
    n = n_min
    while n < n_max:
        out.append(n)
        n *= 10
    out.append(n_max)
    return out


def converge_rows(c_ind: Fraction, c_deg: Fraction | None, n_max: int) -> list[tuple[int, float, float, float]]:
    """(n, (1/n) log2 i(Z), log2 k, gap) over ``converge_schedule(n_max)``."""
    if c_deg is None:
        if not 0 < c_ind <= Fraction(1, 2):
            raise InvalidInput("domain", "need 0 < c_ind <= 1/2")
        target = k_low(float(c_ind)).log2_value
    else:
        if not (Fraction(1, 2) <= c_deg < 1 and 0 < c_ind <= 1 - c_deg):
            raise InvalidInput("domain", "need 1/2 <= c_deg < 1 and 0 < c_ind <= 1 - c_deg")
        target = k_high(float(c_ind), float(c_deg)).log2_value
    rows = []
    for n in converge_schedule(n_max):
        alpha = math.floor(c_ind * n)
        N = n // 2 if c_deg is None else n - math.floor(c_deg * n)
        if alpha < 1 or alpha > N:
            continue
        rate = convergence_rate(N, alpha) / n
        rows.append((n, rate, target, abs(rate - target)))
    if not rows:
        raise InvalidInput("domain", "no n in the schedule gives 1 <= alpha <= N")
    return rows


def cmd_converge(args: argparse.Namespace) -> int:
    rows = converge_rows(args.c_ind, args.c_deg, args.n_max)
    if args.format == "csv":
        print("# schema: indsets-converge/1")
        print("n,rate,log2_k,gap")
        for n, r, t, g in rows:
            print(f"{n},{r:.12f},{t:.12f},{g:.3e}")
    else:
        print(f"{'n':>10} {'rate':>14} {'log2 k':>14} {'gap':>10}")
        for n, r, t, g in rows:
            print(f"{n:>10} {r:>14.10f} {t:>14.10f} {g:>10.3e}")
    if args.tol is not None and rows[-1][3] > args.tol:
        return EXIT_FALSE
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="indsets", description="Independent-set counting in regular graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an extremal construction and print it")
    kind = c.add_mutually_exclusive_group(required=True)
    kind.add_argument("--low", dest="kind", action="store_const", const="low-even",
                      help="low regime, d <= n/2 (odd n dispatches to --odd)")
    kind.add_argument("--odd", dest="kind", action="store_const", const="low-odd")
    kind.add_argument("--high-dense", dest="kind", action="store_const", const="high-dense")
    kind.add_argument("--high-general", dest="kind", action="store_const", const="high-general")
    kind.add_argument("--claim", dest="kind", action="store_const", const="claim",
                      help="E_{n-d} joined to a circulant; alpha is n-d")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("-d", type=int, required=True)
    c.add_argument("-a", "--alpha", type=int)
    c.add_argument("--cert", help="write the JSON certificate to this path")
    c.add_argument("--format", choices=("graph6", "json", "edgelist"), default="graph6")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="exact count plus every applicable bound for a graph6 input")
    v.add_argument("graph", nargs="?", help="graph6 string, or '-' / omitted for stdin")
    v.add_argument("--alpha", type=int, required=True, help="claimed upper bound on alpha(G)")
    v.add_argument("--c", type=_fraction, default=Fraction(1), help="constant for parametric bounds")
    v.add_argument("--natural-log", action="store_true", help="natural log inside sqrt(log d / d)")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("count", help="exact i(G), alpha(G) and the independence polynomial")
    k.add_argument("graph", nargs="?")
    k.set_defaults(func=cmd_count)

    b = sub.add_parser("bounds", help="evaluate the bound formulas at (n, d, alpha)")
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-d", type=int, required=True)
    b.add_argument("-a", "--alpha", type=int, required=True)
    b.add_argument("--c", type=_fraction, default=Fraction(1))
    b.add_argument("--phi", type=int)
    b.add_argument("--natural-log", action="store_true")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("sweep", help="construct and verify every valid triple in a regime")
    s.add_argument("--regime", choices=REGIMES, required=True)
    s.add_argument("--n-min", type=int, default=4)
    s.add_argument("--n-max", type=int, default=12)
    s.add_argument("--d-min", type=int)
    s.add_argument("--d-max", type=int)
    s.add_argument("--alpha-min", type=int)
    s.add_argument("--alpha-max", type=int)
    s.add_argument("--oracle-cap", type=int, help="largest n for exact alpha and counts")
    s.add_argument("--threads", type=int, default=0, help="worker processes (0 = all cores)")
    s.add_argument("--per-case", action="store_true", help="use each case's own d range")
    s.add_argument("--output", help="CSV path (default stdout)")
    s.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_sweep)

    v2 = sub.add_parser("converge", help="convergence of (1/n) log2 i(Z) to log2 k")
    v2.add_argument("--c-ind", type=_fraction, required=True)
    v2.add_argument("--c-deg", type=_fraction)
    v2.add_argument("--n-max", type=int, default=10**6)
    v2.add_argument("--tol", type=float, help="exit 1 if the final gap exceeds this")
    v2.add_argument("--format", choices=("table", "csv"), default="table")
    v2.set_defaults(func=cmd_converge)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(json.dumps({"error": exc.error, "reason": exc.reason}, sort_keys=True), file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
