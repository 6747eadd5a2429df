"""Continuation of sum |mu(n)|/n^s below Re(s) = 1 and the zeta(1/2) estimators.

Subtracting the growth term ``(6/pi^2) x^(1-s)/(1-s)`` from the partial sum
of the square-free series gives an estimator that still converges to
``zeta(s)/zeta(2s)`` for real ``1/4 < s < 1``.  At ``s = 1/2`` the target
vanishes, which yields a square-root density law and, after differentiating
in ``s``, two estimators of ``zeta(1/2)``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import mpmath
import numpy as np
from mpmath import mp, mpf

from .partial_sums import float_sum, float_sums, multi_exponent_sums
from .precision import BigReal, PoleError, to_mpf, zeta_em
from .sieve import SquarefreeTable

__all__ = [
    "DOMAIN_EDGE",
    "ScanRow",
    "ScanGrid",
    "SeriesTrace",
    "ratio_reference",
    "continuation_partial",
    "scan_grid",
    "sqrt_density",
    "zeta_half_estimate",
    "zeta_half_trace",
    "trace_points",
    "format_float",
]

DOMAIN_EDGE = 0.25
RESIDUE = 6 / math.pi**2
VARIANTS = ("log", "log_plus_two")


def format_float(v: float) -> str:
    """Shortest round-trip decimal for ``v``, never in exponent form."""
    return np.format_float_positional(float(v), unique=True, trim="-")


class ScanRow(NamedTuple):
    s: float
    lhs: BigReal
    rhs: float

    @property
    def delta(self) -> float:
        return abs(float(self.lhs) - self.rhs)


@dataclass
class ScanGrid:
    """Reference values against the truncated estimator on an ``s`` grid."""

    rows: list[ScanRow]
    truncation_x: int

    def __post_init__(self):
        ss = [r.s for r in self.rows]
        if any(b <= a for a, b in zip(ss, ss[1:])):
            raise ValueError("scan rows must be strictly ascending in s")

    def deltas(self) -> np.ndarray:
        return np.array([r.delta for r in self.rows])

    def max_delta(self, s_lo: float = -math.inf, s_hi: float = math.inf) -> float:
        """Largest delta over rows with ``s_lo <= s <= s_hi``."""
        picked = [r.delta for r in self.rows if s_lo <= r.s <= s_hi]
        if not picked:
            raise ValueError(f"no scan rows in [{s_lo}, {s_hi}]")
        return max(picked)

    def to_csv(self, fh=None) -> str | None:
        """Write ``s,lhs,rhs,delta`` rows to ``fh``, or return them as a string."""
        buf = fh if fh is not None else io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", "lhs", "rhs", "delta"])
        for r in self.rows:
            w.writerow([format_float(r.s), r.lhs.significant(), format_float(r.rhs), format_float(r.delta)])
        return None if fh is not None else buf.getvalue()


@dataclass
class SeriesTrace:
    """Samples ``(x, value)`` of a partial-sum estimator, ``x`` strictly increasing."""

    samples: list[tuple[int, float]]
    target: BigReal | None = None

    def __post_init__(self):
        xs = [x for x, _ in self.samples]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("trace x values must be strictly increasing")

    @property
    def xs(self) -> np.ndarray:
        return np.array([x for x, _ in self.samples], dtype=np.int64)

    @property
    def values(self) -> np.ndarray:
        return np.array([v for _, v in self.samples])

    def deviations(self) -> np.ndarray:
        if self.target is None:
            raise ValueError("trace has no target")
        return np.abs(self.values - float(self.target))

    def to_csv(self, fh=None) -> str | None:
        """Write ``x,value,target`` rows to ``fh``, or return them as a string."""
        buf = fh if fh is not None else io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "value", "target"])
        target = self.target.significant() if self.target is not None else ""
        for x, v in self.samples:
            w.writerow([x, format_float(v), target])
        return None if fh is not None else buf.getvalue()


def ratio_reference(s, digits: int = 20) -> BigReal:
    """``zeta(s)/zeta(2s)`` for real ``s > 1/4``, ``s != 1``.

    At ``s = 1/2`` the denominator has a pole and the ratio is exactly 0.
    Below 1/4 the continued estimator is not expected to converge, so the
    reference refuses it as well.
    """
    with mp.workdps(digits + 10):
        s = to_mpf(s)
        if s == 1:
            raise PoleError("zeta(s)/zeta(2s) has a pole at s = 1")
        if s <= DOMAIN_EDGE:
            raise ValueError(f"s = {s} is outside the continuation domain s > 1/4")
        if s == mpf(1) / 2:
            return BigReal(0, max(digits, 16))
        value = zeta_em(s, digits + 5).value / zeta_em(2 * s, digits + 5).value
    return BigReal(value, max(digits, 16))


def _growth(s: float, x: int) -> float:
    with mp.workdps(30):
        s = mpf(s)
        return float(6 / mp.pi**2 * mpf(x) ** (1 - s) / (1 - s))


def continuation_partial(s: float, x: int, table: SquarefreeTable) -> float:
    """``sum_{n<=x} |mu(n)| n^-s - (6/pi^2) x^(1-s)/(1-s)``."""
    if s == 1:
        raise PoleError("s = 1 is the logarithmic case; use stieltjes.gamma_m_limit(0, x, table)")
    total = float_sum(table, x, float(s))
    return total - _growth(s, x)


def scan_grid(
    s_min: float, s_max: float, steps: int, x: int, table: SquarefreeTable, digits: int = 20
) -> ScanGrid:
    """Compare :func:`ratio_reference` with :func:`continuation_partial` on a uniform grid.

    Grid points landing on the pole ``s = 1`` are dropped.
    """
    if not DOMAIN_EDGE < s_min < s_max:
        raise ValueError(f"need 1/4 < s_min < s_max, got [{s_min}, {s_max}]")
    if steps < 2:
        raise ValueError("steps must be >= 2")
    grid = [float(s) for s in np.linspace(s_min, s_max, steps) if abs(s - 1) > 1e-12]
    sums = multi_exponent_sums(table, x, grid)
    rows = [
        ScanRow(s, ratio_reference(s, digits), float(total) - _growth(s, x))
        for s, total in zip(grid, sums)
    ]
    return ScanGrid(rows, x)


def sqrt_density(x: int, table: SquarefreeTable) -> float:
    """``x^(-1/2) sum_{n<=x} |mu(n)|/sqrt(n)``, which tends to 12/pi^2."""
    return float_sum(table, x, 0.5) / math.sqrt(x)


def _half_estimates(log_sum, plain_sum, x, variant):
    if variant == "log":
        return -0.5 * log_sum + RESIDUE * math.sqrt(x) * (math.log(x) - 2)
    if variant == "log_plus_two":
        return -0.5 * (log_sum + 2 * plain_sum) + RESIDUE * math.sqrt(x) * math.log(x)
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def zeta_half_estimate(x: int, table: SquarefreeTable, variant: str = "log") -> float:
    """Estimate zeta(1/2) from square-free sums up to ``x``.

    ``"log"``:           -1/2 sum |mu(n)| log(n)/sqrt(n) + (6/pi^2) sqrt(x) (log(x) - 2)
    ``"log_plus_two"``:  -1/2 sum |mu(n)| (log(n) + 2)/sqrt(n) + (6/pi^2) sqrt(x) log(x)

    Both converge slowly and with visible oscillation.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    log_sum = float_sum(table, x, 0.5, 1)
    plain_sum = float_sum(table, x, 0.5) if variant == "log_plus_two" else 0.0
    return _half_estimates(log_sum, plain_sum, x, variant)


def trace_points(x_max: int, samples_per_decade: int) -> np.ndarray:
    """``1`` and ``round(10**(k/D))`` up to ``x_max``, deduplicated."""
    if x_max < 10:
        raise ValueError("x_max must be >= 10")
    if samples_per_decade < 1:
        raise ValueError("samples_per_decade must be >= 1")
    top = math.floor(samples_per_decade * math.log10(x_max) + 1e-9)
    pts = np.rint(10.0 ** (np.arange(top + 1) / samples_per_decade)).astype(np.int64)
    pts = np.unique(pts)
    return pts[pts <= x_max]


def zeta_half_trace(x_max: int, samples_per_decade: int, table: SquarefreeTable, variant: str = "log") -> SeriesTrace:
    """Log-spaced samples of :func:`zeta_half_estimate`, from one pass over the table."""
    xs = trace_points(x_max, samples_per_decade)
    log_sums = float_sums(table, xs, 0.5, 1)
    plain = float_sums(table, xs, 0.5) if variant == "log_plus_two" else np.zeros(xs.size)
    samples = [
        (int(x), _half_estimates(float(a), float(b), int(x), variant))
        for x, a, b in zip(xs, log_sums, plain)
    ]
    return SeriesTrace(samples, target=zeta_em(0.5, 20))
