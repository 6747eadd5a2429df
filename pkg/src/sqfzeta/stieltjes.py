"""Moebius-Stieltjes constants of zeta(s)/zeta(2s).

``gamma^M_n`` are the coefficients in

    zeta(s)/zeta(2s) = 6/(pi^2 (s-1)) + sum_n gamma^M_n (-1)^n (s-1)^n / n!

computed three ways: truncated partial sums, a closed form for ``n = 0`` in
terms of Euler's constant and zeta'(2), and numerical differentiation of the
regularised ratio at ``s = 1``.  The alternating analogue ``gamma-bar^M``
(from ``sum (-1)^(n+1) |mu(n)|/n``) has a limit route and a closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mp, mpf

from .partial_sums import MP_ROUTE_LIMIT, float_sum, mp_sum
from .precision import (
    DEFAULT_PRECISION,
    GUARD_DIGITS,
    BigReal,
    ConstantEstimate,
    Method,
    PrecisionError,
    euler_gamma,
    numeric_derivative,
    zeta_em,
    zeta_prime_2,
)
from .sieve import SquarefreeTable

__all__ = [
    "MAX_ORDER",
    "GammaMRequest",
    "gamma_m",
    "gamma_m_limit",
    "gamma_m_closed_form",
    "gamma_m_derivative",
    "gamma_bar_m_limit",
    "gamma_bar_m_closed_form",
    "regularized_ratio",
]

MAX_ORDER = 10
FLOAT_DIGITS = 17
MP_SUM_DIGITS = 30
# half-width of the derivative stencil around s = 1; keeps 2s clear of the pole at 1/2
STENCIL_HALF_WIDTH = mpf("0.4")


@dataclass(frozen=True)
class GammaMRequest:
    order_n: int
    truncation_x: int | None = None
    method: Method = Method.CLOSED_FORM

    def __post_init__(self):
        if not 0 <= self.order_n <= MAX_ORDER:
            raise ValueError(f"order_n must be in [0, {MAX_ORDER}], got {self.order_n}")
        limit_methods = (Method.LIMIT_FORMULA, Method.ALTERNATING_LIMIT)
        if self.method in limit_methods and (self.truncation_x is None or self.truncation_x < 1):
            raise ValueError("limit methods need truncation_x >= 1")
        if self.method is Method.CLOSED_FORM and self.order_n != 0:
            raise ValueError("the closed form exists only for n = 0")


def _residue() -> mpf:
    return 6 / mp.pi**2


def _use_mp(x: int, route: str) -> bool:
    if route not in ("auto", "float", "mp"):
        raise ValueError(f"unknown summation route {route!r}")
    return route == "mp" or (route == "auto" and x < MP_ROUTE_LIMIT)


def _limit_estimate(total, correction_fn, x: int, digits: int, method: Method) -> ConstantEstimate:
    with mp.workdps(max(digits, FLOAT_DIGITS) + 5):
        value = mpf(total) - correction_fn()
    return ConstantEstimate(
        value=BigReal(value, digits),
        method=method,
        truncation_x=x,
        error_heuristic=BigReal(mpf(1) / x, FLOAT_DIGITS),
    )


def gamma_m_limit(n: int, x: int, table: SquarefreeTable, *, route: str = "auto") -> ConstantEstimate:
    """``sum_{k<=x} |mu(k)| log^n(k)/k - (6/pi^2) log^(n+1)(x)/(n+1)``.

    Below ``x = 10**6`` the sum runs in 30-digit mpmath arithmetic, above it
    in compensated double precision (``route`` overrides).  The error
    heuristic is ``1/x``.
    """
    if n < 0:
        raise ValueError(f"order must be >= 0, got {n}")
    table.require(x)
    if _use_mp(x, route):
        total, digits = mp_sum(table, x, 1, n, digits=MP_SUM_DIGITS), MP_SUM_DIGITS
    else:
        total, digits = float_sum(table, x, 1.0, n), FLOAT_DIGITS

    def correction():
        return _residue() * mpmath.log(x) ** (n + 1) / (n + 1)

    return _limit_estimate(total, correction, x, digits, Method.LIMIT_FORMULA)


def gamma_m_closed_form(precision: int = DEFAULT_PRECISION) -> ConstantEstimate:
    """``gamma^M = 6 gamma/pi^2 - 72 zeta'(2)/pi^4``."""
    gamma = euler_gamma(precision + GUARD_DIGITS)
    zp2 = zeta_prime_2(precision + GUARD_DIGITS)
    with mp.workdps(precision + GUARD_DIGITS):
        value = 6 * gamma.value / mp.pi**2 - 72 * zp2.value / mp.pi**4
    return ConstantEstimate(value=BigReal(value, precision), method=Method.CLOSED_FORM)


def regularized_ratio(s) -> mpf:
    """``zeta(s)/zeta(2s) - 6/(pi^2 (s-1))`` at the ambient precision."""
    s = mpf(s)
    return zeta_em(s).value / zeta_em(2 * s).value - _residue() / (s - 1)


def gamma_m_derivative(n: int, precision: int = DEFAULT_PRECISION, *, levels: int | None = None) -> ConstantEstimate:
    """``(-1)^n d^n/ds^n [zeta(s)/zeta(2s) - 6/(pi^2 (s-1))]`` at ``s = 1``.

    The stencil uses half-integer offsets so ``s = 1`` is never sampled, and
    spans ``1 +- 0.4`` at its coarsest level.

    Raises:
        PrecisionError: when ``precision`` cannot deliver a meaningful
            estimate of order ``n``; the message names the digits needed.
    """
    if not 0 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in [0, {MAX_ORDER}], got {n}")
    points = n + 2 if n % 2 == 0 else n + 1
    if levels is None:
        levels = 6 + precision // 6
    with mp.workdps(precision):
        step = 2 * STENCIL_HALF_WIDTH / (points - 1)
    value, err = numeric_derivative(
        regularized_ratio, 1, n, step, precision=precision, avoid_center=True, levels=levels
    )
    with mp.workdps(precision):
        rel = err.value / max(abs(value.value), 1)
        if rel > mpf(10) ** -6:
            lost = int(mpmath.ceil(mpmath.log10(rel))) + 6
            raise PrecisionError(
                f"derivative of order {n} at {precision} digits is only good to "
                f"{mpmath.nstr(rel, 2)} relative; use at least {precision + 4 * lost + 4} digits"
            )
        signed = value.value if n % 2 == 0 else -value.value
    return ConstantEstimate(
        value=BigReal(signed, precision), method=Method.DERIVATIVE, error_heuristic=err
    )


def gamma_bar_m_limit(x: int, table: SquarefreeTable, *, route: str = "auto") -> ConstantEstimate:
    """``sum_{n<=x} (-1)^(n+1) |mu(n)|/n - (2/pi^2) log x``."""
    table.require(x)
    if _use_mp(x, route):
        total, digits = mp_sum(table, x, 1, 0, alternate=True, digits=MP_SUM_DIGITS), MP_SUM_DIGITS
    else:
        total, digits = float_sum(table, x, 1.0, 0, alternate=True), FLOAT_DIGITS

    def correction():
        return 2 / mp.pi**2 * mpmath.log(x)

    return _limit_estimate(total, correction, x, digits, Method.ALTERNATING_LIMIT)


def gamma_bar_m_closed_form(precision: int = DEFAULT_PRECISION) -> ConstantEstimate:
    """``gamma-bar^M = gamma^M/3 + 8 log(2)/(3 pi^2)``.

    The 1/3 and the log 2 term are the constant and linear Taylor
    coefficients of ``(2^s - 1)/(2^s + 1)`` at ``s = 1``.
    """
    gm = gamma_m_closed_form(precision + GUARD_DIGITS)
    with mp.workdps(precision + GUARD_DIGITS):
        value = gm.value.value / 3 + 8 * mpmath.log(2) / (3 * mp.pi**2)
    return ConstantEstimate(value=BigReal(value, precision), method=Method.CLOSED_FORM)


def gamma_m(
    request: GammaMRequest, table: SquarefreeTable | None = None, precision: int = DEFAULT_PRECISION
) -> ConstantEstimate:
    """Dispatch a :class:`GammaMRequest` to the matching route."""
    if request.method is Method.LIMIT_FORMULA:
        if table is None:
            raise ValueError("limit route needs a sieve table")
        return gamma_m_limit(request.order_n, request.truncation_x, table)
    if request.method is Method.CLOSED_FORM:
        return gamma_m_closed_form(precision)
    if request.method is Method.DERIVATIVE:
        return gamma_m_derivative(request.order_n, precision)
    if request.method is Method.ALTERNATING_LIMIT:
        if table is None:
            raise ValueError("limit route needs a sieve table")
        return gamma_bar_m_limit(request.truncation_x, table)
    raise ValueError(f"method {request.method.value} does not compute gamma^M")
