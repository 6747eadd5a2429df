"""Command-line front end: ``sqfzeta <command> [options]``."""

from __future__ import annotations

import argparse
import contextlib
import json
import math
import os
import sys
import time
from decimal import Decimal, InvalidOperation
from pathlib import Path

import mpmath
from mpmath import mp, mpf

from . import reference
from .alternating import (
    alternating_partial,
    alternating_prefactor,
    alternating_zeta_oracle,
    euler_product_truncated,
    signed_squarefree,
)
from .continuation import (
    format_float,
    ratio_reference,
    scan_grid,
    continuation_partial,
    sqrt_density,
    zeta_half_trace,
)
from .precision import DEFAULT_PRECISION, MIN_DIGITS, zeta_em
from .sieve import SieveConfig, SquarefreeTable, load_table, mobius_bruteforce, save_table, sieve_squarefree
from .stieltjes import (
    MAX_ORDER,
    gamma_bar_m_closed_form,
    gamma_bar_m_limit,
    gamma_m_closed_form,
    gamma_m_derivative,
    gamma_m_limit,
)
from .svg import Series, line_chart

COMMANDS = ("sieve", "gamma", "table1", "scan", "zeta-half", "sqrt-density", "alt", "verify")


def parse_int(text: str) -> int:
    """Integer argument that also accepts ``1e6`` style input."""
    try:
        d = Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if d != d.to_integral_value():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(d)


def working_precision(args, digits: int) -> int:
    p = args.precision if args.precision is not None else max(DEFAULT_PRECISION, 2 * digits + 20)
    if p < MIN_DIGITS:
        raise ValueError(f"--precision must be >= {MIN_DIGITS}")
    return p


def get_table(x: int, args) -> SquarefreeTable:
    """Sieve ``[1, x]``, reusing ``--cache`` when it holds exactly that range."""
    cache = getattr(args, "cache", None)
    if cache and Path(cache).exists():
        table = load_table(cache)
        if (table.lo, table.hi) == (1, x):
            return table
    cfg = SieveConfig.from_env(**({"thread_count": args.threads} if args.threads else {}))
    table = sieve_squarefree(1, x, cfg)
    if cache:
        save_table(table, cache)
    return table


@contextlib.contextmanager
def open_output(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def emit_json(obj, args) -> None:
    with open_output(args.output) as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def write_svg(svg: str, path: str) -> None:
    try:
        Path(path).write_text(svg)
    except OSError as exc:
        print(f"warning: could not write SVG {path}: {exc}", file=sys.stderr)


def cmd_sieve(args) -> int:
    table = get_table(args.x, args)
    if args.dump:
        save_table(table, args.dump)
    count = table.count()
    emit_json({"lo": table.lo, "hi": table.hi, "squarefree_count": count, "density": count / len(table)}, args)
    return 0


def cmd_gamma(args) -> int:
    method = args.method
    if method == "limit":
        if args.x is None:
            raise ValueError("--x is required for --method limit")
        est = gamma_m_limit(args.n, args.x, get_table(args.x, args))
        emit_json(est.to_dict(), args)
        return 0
    if method == "closed":
        if args.n != 0:
            raise ValueError("the closed form exists only for --n 0")
        est = gamma_m_closed_form(working_precision(args, args.digits))
    else:
        est = gamma_m_derivative(args.n, working_precision(args, args.digits))
    emit_json(est.to_dict(decimals=args.digits), args)
    return 0


def cmd_table1(args) -> int:
    if not 0 <= args.max_n <= MAX_ORDER:
        raise ValueError(f"--max-n must be in [0, {MAX_ORDER}]")
    precision = working_precision(args, args.digits)
    rows = [(n, gamma_m_derivative(n, precision).value.fixed(args.digits)) for n in range(args.max_n + 1)]
    with open_output(args.output) as fh:
        if args.format == "json":
            json.dump([{"n": n, "gamma_m": v} for n, v in rows], fh, indent=2)
            fh.write("\n")
        else:
            fh.write("n,gamma_m\n")
            for n, v in rows:
                fh.write(f"{n},{v}\n")
    return 0


def cmd_scan(args) -> int:
    grid = scan_grid(args.smin, args.smax, args.steps, args.x, get_table(args.x, args))
    with open_output(args.output) as fh:
        if args.format == "json":
            rows = [
                {"s": r.s, "lhs": r.lhs.significant(), "rhs": r.rhs, "delta": r.delta} for r in grid.rows
            ]
            json.dump({"truncation_x": grid.truncation_x, "rows": rows}, fh, indent=2)
            fh.write("\n")
        else:
            grid.to_csv(fh)
    if args.svg:
        s = [r.s for r in grid.rows]
        svg = line_chart(
            [
                Series(s, [float(r.lhs) for r in grid.rows], "zeta(s)/zeta(2s)"),
                Series(s, [r.rhs for r in grid.rows], f"partial sum estimator, x = {args.x}"),
            ],
            title="Square-free series continued below s = 1",
            xlabel="s",
            ylabel="value",
        )
        write_svg(svg, args.svg)
        if args.delta_svg:
            write_svg(
                line_chart([Series(s, grid.deltas(), "|lhs - rhs|")], xlabel="s", ylabel="delta", logy=True),
                args.delta_svg,
            )
    return 0


def cmd_zeta_half(args) -> int:
    trace = zeta_half_trace(args.xmax, args.per_decade, get_table(args.xmax, args), args.variant)
    with open_output(args.output) as fh:
        if args.format == "json":
            json.dump(
                {"target": trace.target.significant(), "samples": [{"x": x, "value": v} for x, v in trace.samples]},
                fh,
                indent=2,
            )
            fh.write("\n")
        else:
            trace.to_csv(fh)
    if args.svg:
        target = float(trace.target)
        svg = line_chart(
            [Series(trace.xs, trace.values, "square-free estimator of zeta(1/2)")],
            title="zeta(1/2) from square-free sums",
            xlabel="x",
            ylabel="estimate",
            logx=True,
            hlines=((target, f"zeta(1/2) = {target:.10f}"),),
        )
        write_svg(svg, args.svg)
    return 0


def cmd_sqrt_density(args) -> int:
    value = sqrt_density(args.x, get_table(args.x, args))
    target = 12 / math.pi**2
    emit_json({"x": args.x, "value": value, "target": target, "delta": abs(value - target)}, args)
    return 0


def cmd_alt(args) -> int:
    if args.method == "closed":
        est = gamma_bar_m_closed_form(working_precision(args, args.digits))
        emit_json(est.to_dict(decimals=args.digits), args)
        return 0
    if args.x is None:
        raise ValueError(f"--x is required for --method {args.method}")
    table = get_table(args.x, args)
    if args.method == "limit":
        emit_json(gamma_bar_m_limit(args.x, table).to_dict(), args)
        return 0
    partial = alternating_partial(args.s, args.x, table)
    predicted = float(alternating_prefactor(args.s)) * float(ratio_reference(args.s))
    emit_json({"s": args.s, "x": args.x, "partial": partial, "predicted": predicted, "delta": abs(partial - predicted)}, args)
    return 0


class _Checks:
    def __init__(self, out):
        self.out = out
        self.failed = 0

    def check(self, name: str, delta: float, bound: float, ok: bool | None = None) -> None:
        ok = delta <= bound if ok is None else ok
        self.failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: delta={delta:.3e} bound={bound:.3e}", file=self.out)


def cmd_verify(args) -> int:
    x = args.x
    out = sys.stdout
    checks = _Checks(out)
    table = get_table(x, args)

    limit = min(x, 10**4)
    mism = sum(table[n] != abs(mobius_bruteforce(n)) for n in range(1, limit + 1))
    checks.check(f"sieve matches trial division up to {limit}", mism, 0)

    with mp.workdps(60):
        closed = gamma_m_closed_form()
        d = abs(closed.value.value - mpf(reference.TABLE1[0]))
        checks.check("gamma^M closed form vs table (30 digits)", float(d), 1e-30)
        lim = gamma_m_limit(0, x, table)
        d = abs(lim.value.value - closed.value.value)
        checks.check(f"gamma^M limit at x={x} vs closed form", float(d), 10 / x)
        for n in range(MAX_ORDER + 1):
            est = gamma_m_derivative(n)
            ref = mpf(reference.TABLE1[n])
            checks.check(f"gamma^M_{n} derivative vs table (12 digits)", float(abs(est.value.value - ref) / ref), 1e-12)
        bar = gamma_bar_m_closed_form()
        d = abs(bar.value.value - mpf(reference.GAMMA_BAR_M))
        checks.check("gamma-bar^M closed form (20 digits)", float(d), 1e-20)
        d = abs(gamma_bar_m_limit(x, table).value.value - bar.value.value)
        checks.check(f"gamma-bar^M limit at x={x} vs closed form", float(d), 10 / x)

    for s in (1.5, 2.0, 3.0):
        predicted = float(alternating_prefactor(s)) * float(ratio_reference(s))
        d = abs(alternating_partial(s, x, table) - predicted)
        checks.check(f"alternating identity at s={s}", d, 10 * x ** (1 - s) / (s - 1))

    fmax = min(x, 10**4)
    pairs = [(a, b) for a in range(1, 101) for b in range(1, 101) if math.gcd(a, b) == 1 and a * b <= fmax]
    bad = sum(
        table[a * b] != table[a] * table[b]
        or signed_squarefree(a * b, table) != signed_squarefree(a, table) * signed_squarefree(b, table)
        for a, b in pairs
    )
    checks.check("multiplicativity of |mu| and (-1)^(n+1)|mu|", bad, 0)

    checks.check("sqrt density vs 12/pi^2", abs(sqrt_density(x, table) - 12 / math.pi**2), 2e-3)
    d = abs(continuation_partial(0.8, x, table) - float(ratio_reference(0.8)))
    checks.check(f"continuation at s=0.8, x={x}", d, 1e-2)

    for s in ("0.5", "0.8", "2", "3"):
        with mp.workdps(30):
            d = abs(zeta_em(s, 20).value - alternating_zeta_oracle(s, 20).value)
        checks.check(f"zeta Euler-Maclaurin vs alternating oracle at s={s}", float(d), 1e-10)

    p_max = min(x, 10**6)
    d = abs(euler_product_truncated(2, p_max) - 15 / math.pi**2)
    checks.check(f"Euler product at s=2 to p={p_max}", d, 15 / math.pi**2 / p_max)

    print(f"{'ALL PASS' if not checks.failed else f'{checks.failed} FAILED'}", file=out)
    return 0 if not checks.failed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", default="-", help="output file, '-' for stdout")
    common.add_argument("--cache", help="SQFT sieve cache file, reused when its range matches")
    common.add_argument("--threads", type=int, help="sieve threads (default: $SQFZ_THREADS or 1)")
    common.add_argument("--precision", type=int, help="working decimal digits")

    p = argparse.ArgumentParser(prog="sqfzeta", description="Square-free zeta series numerics.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    q = sub.add_parser("sieve", parents=[common], help="sieve |mu(n)| up to x")
    q.add_argument("--x", type=parse_int, required=True)
    q.add_argument("--dump", help="write the table in SQFT format")
    q.set_defaults(func=cmd_sieve)

    q = sub.add_parser("gamma", parents=[common], help="one gamma^M_n constant as JSON")
    q.add_argument("--n", type=int, default=0)
    q.add_argument("--x", type=parse_int)
    q.add_argument("--method", choices=("limit", "closed", "derivative"), default="closed")
    q.add_argument("--digits", type=int, default=30, help="decimal places to print")
    q.set_defaults(func=cmd_gamma)

    q = sub.add_parser("table1", parents=[common], help="gamma^M_0..gamma^M_N by differentiation")
    q.add_argument("--max-n", type=int, default=MAX_ORDER)
    q.add_argument("--digits", type=int, default=30)
    q.add_argument("--format", choices=("csv", "json"), default="csv")
    q.set_defaults(func=cmd_table1)

    q = sub.add_parser("scan", parents=[common], help="reference vs estimator over an s grid")
    q.add_argument("--smin", type=float, default=0.3)
    q.add_argument("--smax", type=float, default=2.0)
    q.add_argument("--steps", type=int, default=171)
    q.add_argument("--x", type=parse_int, default=10**6)
    q.add_argument("--format", choices=("csv", "json"), default="csv")
    q.add_argument("--svg", help="also write an SVG plot of both curves")
    q.add_argument("--delta-svg", help="with --svg, also plot delta against s")
    q.set_defaults(func=cmd_scan)

    q = sub.add_parser("zeta-half", parents=[common], help="zeta(1/2) estimator trace")
    q.add_argument("--xmax", type=parse_int, default=10**7)
    q.add_argument("--per-decade", type=int, default=20)
    q.add_argument("--variant", choices=("log", "log_plus_two"), default="log")
    q.add_argument("--format", choices=("csv", "json"), default="csv")
    q.add_argument("--svg", help="also write an SVG plot")
    q.set_defaults(func=cmd_zeta_half)

    q = sub.add_parser("sqrt-density", parents=[common], help="x^-1/2 sum |mu(n)|/sqrt(n)")
    q.add_argument("--x", type=parse_int, required=True)
    q.set_defaults(func=cmd_sqrt_density)

    q = sub.add_parser("alt", parents=[common], help="alternating square-free series")
    q.add_argument("--method", choices=("limit", "closed", "identity"), default="closed")
    q.add_argument("--x", type=parse_int)
    q.add_argument("--s", type=float, default=2.0, help="exponent for --method identity")
    q.add_argument("--digits", type=int, default=20)
    q.set_defaults(func=cmd_alt)

    q = sub.add_parser("verify", parents=[common], help="run the cross-check suite")
    q.add_argument("--x", type=parse_int, default=10**6)
    q.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"sqfzeta {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
