"""Configurable-precision reals and Euler-Maclaurin evaluators.

Arithmetic is carried by :mod:`mpmath`; the zeta, zeta-derivative and
Euler-gamma evaluators, the Bernoulli table and the finite-difference engine
are implemented here.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import mpmath
from mpmath import mp, mpf
from mpmath.libmp import to_str

__all__ = [
    "DEFAULT_PRECISION",
    "MAX_DIGITS",
    "PrecisionError",
    "PoleError",
    "BigReal",
    "BernoulliTable",
    "bernoulli_table",
    "Method",
    "ConstantEstimate",
    "zeta_em",
    "zeta_em_terms",
    "zeta_prime_2",
    "euler_gamma",
    "fd_weights",
    "numeric_derivative",
    "to_mpf",
]

DEFAULT_PRECISION = 50
MIN_DIGITS = 16
MAX_DIGITS = 1000
GUARD_DIGITS = 10


class PrecisionError(ArithmeticError):
    """Requested accuracy is beyond the working-precision budget."""


class PoleError(ZeroDivisionError):
    """Evaluation at a pole."""


def to_mpf(x) -> mpf:
    """Convert ints, floats, strings, Fractions, mpf or BigReal to ``mpf``."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def _check_budget(digits: int) -> int:
    digits = int(digits)
    if digits < 1:
        raise ValueError(f"target digits must be positive, got {digits}")
    if digits > MAX_DIGITS:
        raise PrecisionError(f"{digits} digits exceeds the precision budget of {MAX_DIGITS}")
    return digits


def _fixed(value: mpf, decimals: int, truncate: bool = False) -> str:
    # `decimals` places after the point, never in exponent form
    scaled = value * mpf(10) ** decimals
    q = (mpmath.floor(scaled) if scaled >= 0 else mpmath.ceil(scaled)) if truncate else mpmath.nint(scaled)
    sign = "-" if q < 0 else ""
    digits = str(int(abs(q))).rjust(decimals + 1, "0")
    if decimals == 0:
        return sign + digits
    return f"{sign}{digits[:-decimals]}.{digits[-decimals:]}"


class BigReal:
    """A real number held at a fixed number of significant decimal digits.

    Binary operations run at, and return, the smaller of the operands'
    precisions.  Plain Python numbers adopt the precision of the BigReal
    they are combined with.  mpmath functions accept BigReal directly.
    """

    __slots__ = ("value", "digits")

    def __init__(self, value, digits: int = DEFAULT_PRECISION):
        if digits < MIN_DIGITS:
            raise ValueError(f"BigReal precision must be >= {MIN_DIGITS} digits, got {digits}")
        if digits > MAX_DIGITS + 2 * GUARD_DIGITS:
            raise PrecisionError(f"{digits} digits exceeds the precision budget")
        self.digits = int(digits)
        with mp.workdps(self.digits):
            self.value = +to_mpf(value)

    @property
    def _mpf_(self):
        return self.value._mpf_

    def _combine(self, other, op):
        if isinstance(other, BigReal):
            d = min(self.digits, other.digits)
            other = other.value
        else:
            d = self.digits
            other = to_mpf(other)
        with mp.workdps(d):
            return BigReal(op(self.value, other), d)

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._combine(other, lambda a, b: b + a)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._combine(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._combine(other, lambda a, b: b * a)

    def __truediv__(self, other):
        return self._combine(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._combine(other, lambda a, b: b / a)

    def __pow__(self, other):
        return self._combine(other, lambda a, b: a**b)

    def __neg__(self):
        return BigReal(-self.value, self.digits)

    def __abs__(self):
        return BigReal(abs(self.value), self.digits)

    def __float__(self):
        return float(self.value)

    def __eq__(self, other):
        try:
            return self.value == to_mpf(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.value < to_mpf(other)

    def __le__(self, other):
        return self.value <= to_mpf(other)

    def __gt__(self, other):
        return self.value > to_mpf(other)

    def __ge__(self, other):
        return self.value >= to_mpf(other)

    def __hash__(self):
        return hash((self.value, self.digits))

    def __repr__(self):
        return f"BigReal('{self}', digits={self.digits})"

    def __str__(self):
        return to_str(self.value._mpf_, self.digits)

    def fixed(self, decimals: int, truncate: bool = False) -> str:
        """Fixed-point string with ``decimals`` places after the point.

        Rounds to nearest unless ``truncate`` is set (drops the excess digits).
        """
        with mp.workdps(self.digits + 5):
            return _fixed(self.value, decimals, truncate)

    def significant(self, digits: int | None = None) -> str:
        """String with ``digits`` significant digits, never in exponent form."""
        digits = digits or self.digits
        return to_str(self.value._mpf_, digits, min_fixed=-math.inf, max_fixed=math.inf)


@lru_cache(maxsize=None)
def _bernoulli_fractions(m: int) -> tuple[Fraction, ...]:
    """Exact ``B_2 .. B_2m`` from the tangent numbers (Brent-Harvey recurrence)."""
    tangent = [0] * (m + 1)
    if m >= 1:
        tangent[1] = 1
    for k in range(2, m + 1):
        tangent[k] = (k - 1) * tangent[k - 1]
    for k in range(2, m + 1):
        for j in range(k, m + 1):
            tangent[j] = (j - k) * tangent[j - 1] + (j - k + 2) * tangent[j]
    return tuple(
        Fraction((-1) ** (k - 1) * 2 * k * tangent[k], 4**k * (4**k - 1)) for k in range(1, m + 1)
    )


@dataclass(frozen=True)
class BernoulliTable:
    """Even-index Bernoulli numbers ``B_2, B_4, ..., B_2m`` at a fixed precision."""

    values: tuple[BigReal, ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k: int) -> BigReal:
        """``B_{2k}`` for ``k >= 1``."""
        if k < 1:
            raise IndexError("table starts at B_2 (k = 1)")
        return self.values[k - 1]


@lru_cache(maxsize=64)
def _bernoulli_cached(m: int, digits: int) -> BernoulliTable:
    return BernoulliTable(tuple(BigReal(b, digits) for b in _bernoulli_fractions(m)))


def bernoulli_table(m: int, digits: int = DEFAULT_PRECISION) -> BernoulliTable:
    """Cached table of ``B_2 .. B_2m`` rounded to ``digits`` significant digits."""
    if m < 1:
        raise ValueError("order must be >= 1")
    digits = max(digits, MIN_DIGITS)
    # grow in blocks so nearby requests share one cache entry
    size = max(32, 1 << (m - 1).bit_length())
    table = _bernoulli_cached(size, digits)
    return BernoulliTable(table.values[:m])


class Method(str, enum.Enum):
    LIMIT_FORMULA = "limit_formula"
    CLOSED_FORM = "closed_form"
    DERIVATIVE = "derivative"
    EULER_MACLAURIN = "euler_maclaurin"
    ALTERNATING_LIMIT = "alternating_limit"


@dataclass(frozen=True)
class ConstantEstimate:
    """A computed constant with its provenance and an error heuristic."""

    value: BigReal
    method: Method
    truncation_x: int | None = None
    error_heuristic: BigReal | None = None

    def __post_init__(self):
        if self.error_heuristic is not None and not self.error_heuristic > 0:
            raise ValueError("error_heuristic must be positive")

    def __float__(self):
        return float(self.value)

    def to_dict(self, decimals: int | None = None) -> dict:
        value = self.value.fixed(decimals) if decimals is not None else self.value.significant()
        err = None
        if self.error_heuristic is not None:
            err = float(self.error_heuristic)
        return {
            "value": value,
            "method": self.method.value,
            "truncation_x": self.truncation_x,
            "error_heuristic": err,
        }


def _digits_or_context(target_digits: int | None) -> int:
    return _check_budget(target_digits if target_digits is not None else mp.dps)


def zeta_em_terms(s, cutoff: int, order: int) -> mpf:
    """Euler-Maclaurin value of zeta(s) with explicit cutoff ``N`` and order ``m``.

    ``sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
    + sum_{k=1..m} B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)``,
    evaluated at the current mpmath precision.
    """
    s = to_mpf(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    N = mpf(cutoff)
    total = mpmath.fsum(mpf(n) ** -s for n in range(1, cutoff))
    total += N ** (1 - s) / (s - 1) + N**-s / 2
    bern = bernoulli_table(order, mp.dps) if order else ()
    rising = s  # s(s+1)...(s+2k-2)
    fact = mpf(2)  # (2k)!
    power = N ** (-s - 1)
    for k in range(1, order + 1):
        if k > 1:
            rising *= (s + 2 * k - 3) * (s + 2 * k - 2)
            fact *= (2 * k - 1) * (2 * k)
            power /= N * N
        total += bern[k].value / fact * rising * power
    return total


def _em_order(s: mpf, cutoff: int, eps: mpf, max_order: int) -> int | None:
    """Smallest m whose next correction term drops below ``eps``, or None."""
    bern = bernoulli_table(max_order + 1, mp.dps)
    N = mpf(cutoff)
    rising, fact, power = s, mpf(2), N ** (-s - 1)
    prev = None
    for k in range(1, max_order + 2):
        if k > 1:
            rising *= (s + 2 * k - 3) * (s + 2 * k - 2)
            fact *= (2 * k - 1) * (2 * k)
            power /= N * N
        term = abs(bern[k].value / fact * rising * power)
        if term < eps:
            return k - 1
        if prev is not None and term > prev:
            return None  # asymptotic series turned around
        prev = term
    return None


def zeta_em(s, target_digits: int | None = None) -> BigReal:
    """Riemann zeta at real ``s > 0``, ``s != 1``, to ``target_digits`` decimals.

    ``target_digits`` defaults to the ambient mpmath precision.  The cutoff
    and order are chosen so that the first omitted Euler-Maclaurin term,
    which bounds the remainder for real ``s > 0``, is below
    ``10**-(target_digits + 5)``.
    """
    digits = _digits_or_context(target_digits)
    work = digits + GUARD_DIGITS
    with mp.workdps(work):
        s = to_mpf(s)
        if s == 1:
            raise PoleError("zeta has a pole at s = 1")
        if s <= 0:
            raise ValueError(f"zeta_em requires real s > 0, got {s}")
        eps = mpf(10) ** -(digits + 5)
        cutoff = max(10, int(0.4 * (digits + 10)) + int(abs(s)))
        while True:
            order = _em_order(s, cutoff, eps, max_order=int(3.2 * cutoff) + 4)
            if order is not None:
                break
            cutoff *= 2
        value = zeta_em_terms(s, cutoff, order)
        # the promise is absolute, so large values need extra significant digits
        magnitude = max(0, int(mpmath.floor(mpmath.log10(abs(value)))) + 1) if value else 0
    return BigReal(value, max(digits + magnitude, MIN_DIGITS))


def _log_over_square_derivative(r: int, t: mpf) -> mpf:
    """r-th derivative of log(t)/t**2."""
    harmonic = mpmath.fsum(mpf(1) / j for j in range(1, r + 1))
    return (-1) ** r * mpmath.factorial(r) * t ** (-2 - r) * (
        (r + 1) * mpmath.log(t) - (r + 1) * harmonic + r
    )


def zeta_prime_2(target_digits: int = 30) -> BigReal:
    """zeta'(2) = -sum_{k>=2} log(k)/k**2, a negative number.

    Euler-Maclaurin on ``f(k) = log(k)/k**2`` with the exact tail integral
    ``(log N + 1)/N``.
    """
    digits = _check_budget(target_digits)
    if digits < 10:
        raise ValueError("zeta_prime_2 needs target_digits >= 10")
    with mp.workdps(digits + GUARD_DIGITS):
        cutoff = max(20, digits + 10)
        N = mpf(cutoff)
        eps = mpf(10) ** -(digits + 5)
        total = mpmath.fsum(mpmath.log(k) / mpf(k) ** 2 for k in range(2, cutoff))
        total += (mpmath.log(N) + 1) / N + mpmath.log(N) / N**2 / 2
        bern = bernoulli_table(cutoff, mp.dps)
        fact = mpf(1)
        for j in range(1, cutoff + 1):
            fact *= (2 * j - 1) * (2 * j)
            term = bern[j].value / fact * _log_over_square_derivative(2 * j - 1, N)
            total -= term
            if abs(term) < eps:
                break
        else:
            raise PrecisionError("Euler-Maclaurin series for zeta'(2) did not converge")
        return BigReal(-total, max(digits, MIN_DIGITS))


def euler_gamma(target_digits: int = 30) -> BigReal:
    """Euler's constant via ``H_N - log N - 1/(2N) + sum_k B_2k / (2k N^2k)``."""
    digits = _check_budget(target_digits)
    with mp.workdps(digits + GUARD_DIGITS):
        cutoff = max(10, digits + 10)
        N = mpf(cutoff)
        eps = mpf(10) ** -(digits + 5)
        total = mpmath.fsum(mpf(1) / k for k in range(1, cutoff + 1))
        total -= mpmath.log(N) + 1 / (2 * N)
        bern = bernoulli_table(cutoff, mp.dps)
        for k in range(1, cutoff + 1):
            term = bern[k].value / (2 * k * N ** (2 * k))
            total += term
            if abs(term) < eps:
                break
        else:
            raise PrecisionError("Euler-Maclaurin series for gamma did not converge")
        return BigReal(total, max(digits, MIN_DIGITS))


def fd_weights(nodes, order: int) -> list[mpf]:
    """Finite-difference weights for the ``order``-th derivative at 0.

    Fornberg's recursion on arbitrary distinct ``nodes`` (in step units).
    """
    xs = [to_mpf(x) for x in nodes]
    n = len(xs)
    if order >= n:
        raise ValueError(f"need more than {order} nodes for derivative order {order}")
    c = [[mpf(0)] * (order + 1) for _ in range(n)]
    c[0][0] = mpf(1)
    c1 = mpf(1)
    c4 = xs[0]
    for i in range(1, n):
        mn = min(i, order)
        c2 = mpf(1)
        c5 = c4
        c4 = xs[i]
        for j in range(i):
            c3 = xs[i] - xs[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2
            for k in range(mn, 0, -1):
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3
            c[j][0] = c4 * c[j][0] / c3
        c1 = c2
    return [row[order] for row in c]


def _stencil(order: int, avoid_center: bool) -> list[mpf]:
    """Symmetric nodes (step units) giving an O(h^2) estimate of ``order``."""
    if avoid_center:
        m = order + 2 if order % 2 == 0 else order + 1
        return [mpf(2 * j - m + 1) / 2 for j in range(m)]
    r = max(1, (order + 1) // 2)
    return [mpf(j) for j in range(-r, r + 1)]


def numeric_derivative(
    f: Callable,
    s0,
    order: int,
    step=None,
    *,
    precision: int | None = None,
    avoid_center: bool = False,
    levels: int = 8,
) -> tuple[BigReal, BigReal]:
    """Estimate ``f^(order)(s0)`` by central differences and Richardson extrapolation.

    The first difference uses ``step`` (default ``10**-(P/(order+2))`` at
    ``P`` working digits); each further level halves it and removes one more
    even power of the step from the error.  ``avoid_center`` shifts the
    stencil to half-integer nodes so ``s0`` itself is never sampled.

    Returns ``(value, error_heuristic)``; the heuristic is the gap between
    the two best successive extrapolants.

    Raises:
        PrecisionError: if rounding noise amplified by the stencil swamps the
            estimate even at the coarsest step.
    """
    if not 0 <= order <= 10:
        raise ValueError(f"order must be in [0, 10], got {order}")
    P = precision or DEFAULT_PRECISION
    with mp.workdps(P):
        s0 = to_mpf(s0)
        if order == 0 and not avoid_center:
            return BigReal(to_mpf(f(s0)), P), BigReal(mpf(10) ** -P, P)
        h = to_mpf(step) if step is not None else mpf(10) ** (-mpf(P) / (order + 2))
        nodes = _stencil(order, avoid_center)
        weights = fd_weights(nodes, order)
        amplification = mpmath.fsum(abs(w) for w in weights)
        ulp = mpf(10) ** -P

        def difference(hk):
            vals = [to_mpf(f(s0 + x * hk)) for x, w in zip(nodes, weights) if w != 0]
            ws = [w for w in weights if w != 0]
            scale = max(abs(v) for v in vals)
            est = mpmath.fsum(w * v for w, v in zip(ws, vals)) / hk**order
            noise = ulp * max(scale, 1) * amplification / hk**order
            return est, noise

        first, noise = difference(h)
        if noise > mpf("1e-3") * max(abs(first), 1):
            need = P + int(mpmath.ceil(mpmath.log10(noise / max(abs(first), 1)))) + 6
            raise PrecisionError(
                f"step {mpmath.nstr(h, 3)} loses all accuracy for order {order} at {P} digits; "
                f"use at least {need} digits or a larger step"
            )
        rows = [[first]]
        best, best_err = first, None
        for i in range(1, levels + 1):
            h /= 2
            est, noise_i = difference(h)
            row = [est]
            for j in range(1, i + 1):
                row.append(row[j - 1] + (row[j - 1] - rows[i - 1][j - 1]) / (4**j - 1))
            err = max(abs(row[i] - rows[i - 1][i - 1]), noise_i)
            rows.append(row)
            if best_err is None or err < best_err:
                best, best_err = row[i], err
            elif err > 4 * best_err:
                break  # noise has taken over
        best_err = best_err if best_err > 0 else ulp
        return BigReal(best, P), BigReal(best_err, P)
