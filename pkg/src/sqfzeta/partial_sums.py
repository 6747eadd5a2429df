"""Partial sums of ``sign(n) |mu(n)| log(n)**k / n**s`` over a sieve table.

Two routes: compiled double-precision loops with compensated summation for
large ``x``, and an mpmath loop for ``x`` below :data:`MP_ROUTE_LIMIT`.
"""

from __future__ import annotations

import numpy as np
from mpmath import mp, mpf
import mpmath

from . import _kernels
from .sieve import SquarefreeTable

__all__ = ["MP_ROUTE_LIMIT", "float_sum", "float_sums", "mp_sum"]

MP_ROUTE_LIMIT = 10**6


def _check(table: SquarefreeTable, x: int) -> None:
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if table.lo != 1:
        raise ValueError(f"partial sums start at n = 1 but the table starts at {table.lo}")
    table.require(x)


def float_sums(
    table: SquarefreeTable, stops, s: float, logpow: int = 0, alternate: bool = False
) -> np.ndarray:
    """Running sums at each of the strictly increasing ``stops``."""
    stops = np.asarray(stops, dtype=np.int64)
    if stops.ndim != 1 or stops.size == 0:
        raise ValueError("stops must be a non-empty 1-d sequence")
    if np.any(np.diff(stops) <= 0):
        raise ValueError("stops must be strictly increasing")
    _check(table, int(stops[0]))
    _check(table, int(stops[-1]))
    return _kernels.checkpoint_sums(table.bits, table.lo, stops, float(s), int(logpow), bool(alternate))


def float_sum(table: SquarefreeTable, x: int, s: float, logpow: int = 0, alternate: bool = False) -> float:
    return float(float_sums(table, [x], s, logpow, alternate)[0])


def mp_sum(
    table: SquarefreeTable, x: int, s, logpow: int = 0, alternate: bool = False, digits: int = 30
) -> mpf:
    """Same sum accumulated in mpmath at ``digits`` significant digits."""
    _check(table, x)
    flags = table.indicator(1, x)
    with mp.workdps(digits):
        s = mpf(s)
        total = mpf(0)
        for n in np.flatnonzero(flags) + 1:
            n = int(n)
            t = mpf(n) ** -s
            if logpow:
                t *= mpmath.log(n) ** logpow
            if alternate and n % 2 == 0:
                total -= t
            else:
                total += t
        return +total


def multi_exponent_sums(table: SquarefreeTable, x: int, exponents) -> np.ndarray:
    """``sum_{n<=x} |mu(n)| n**-s`` for many ``s`` in one pass."""
    _check(table, x)
    exps = np.ascontiguousarray(exponents, dtype=np.float64)
    return _kernels.multi_exponent_sums(table.bits, table.lo, int(x), exps)
