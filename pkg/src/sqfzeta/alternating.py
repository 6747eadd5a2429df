"""Alternating square-free series and the Euler products behind them.

``f(n) = (-1)^(n+1) |mu(n)|`` is multiplicative, so its Dirichlet series
factors over primes: the factor at 2 becomes ``1 - 2^-s`` and every odd
prime keeps ``1 + p^-s``.  Hence

    sum (-1)^(n+1) |mu(n)| / n^s = (2^s - 1)/(2^s + 1) * zeta(s)/zeta(2s)

for ``s > 1``.  The classical alternating zeta series, accelerated by the
Euler transform, gives an independent route to zeta(s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath
import numpy as np
from mpmath import mp, mpf

from .partial_sums import float_sum
from .precision import DEFAULT_PRECISION, BigReal, PoleError, to_mpf
from .sieve import SquarefreeTable, primes_up_to

__all__ = [
    "PrimeList",
    "euler_product_truncated",
    "alternating_partial",
    "alternating_prefactor",
    "alternating_eta",
    "alternating_zeta_oracle",
    "signed_squarefree",
]

PRIME_BOUND_LIMIT = 10**8


@dataclass(frozen=True)
class PrimeList:
    primes: np.ndarray = field(repr=False)
    bound: int

    @classmethod
    def up_to(cls, bound: int) -> "PrimeList":
        if bound > PRIME_BOUND_LIMIT:
            raise ValueError(f"prime bound {bound} above {PRIME_BOUND_LIMIT}")
        return cls(primes_up_to(bound), int(bound))

    def __len__(self):
        return len(self.primes)


def euler_product_truncated(s: float, p_max: int) -> float:
    """``prod_{p <= p_max} (1 + p^-s)`` for ``s > 1``."""
    if s <= 1:
        raise ValueError(f"the Euler product diverges for s <= 1 (got s = {s})")
    if p_max < 2:
        raise ValueError("p_max must be >= 2")
    primes = PrimeList.up_to(p_max).primes.astype(np.float64)
    return math.exp(math.fsum(np.log1p(primes ** (-float(s)))))


def signed_squarefree(n: int, table: SquarefreeTable) -> int:
    """``(-1)^(n+1) |mu(n)|`` read from ``table``."""
    return table[n] if n % 2 else -table[n]


def alternating_partial(s: float, x: int, table: SquarefreeTable) -> float:
    """``sum_{n<=x} (-1)^(n+1) |mu(n)| n^-s``.

    Only converges to the prefactor identity for ``s > 1``; for smaller ``s``
    the partial sums are still returned so their growth can be inspected.
    """
    if s <= 0:
        raise ValueError(f"alternating_partial requires s > 0, got {s}")
    return float_sum(table, x, float(s), 0, alternate=True)


def alternating_prefactor(s, digits: int = DEFAULT_PRECISION) -> BigReal:
    """``(2^s - 1)/(2^s + 1)``; equals 1/3 at ``s = 1`` and 0 at ``s = 0``."""
    with mp.workdps(digits + 5):
        p = mpf(2) ** to_mpf(s)
        return BigReal((p - 1) / (p + 1), digits)


def alternating_eta(s, target_digits: int = 15) -> BigReal:
    """``sum_{n>=1} (-1)^(n+1) n^-s`` for real ``s > 0`` via the Euler transform.

    The transformed series is ``sum_k 2^-(k+1) Delta^k a_0`` with
    ``a_j = (j+1)^-s``.  That sequence is completely monotone, so
    ``|Delta^k a_0| <= 1`` and stopping after ``K`` terms leaves at most
    ``2^-(K+1)``.
    """
    if target_digits < 1:
        raise ValueError("target_digits must be positive")
    terms = math.ceil((target_digits + 3) * math.log2(10)) + 2
    # forward differences cancel about K*log10(2) digits
    with mp.workdps(target_digits + int(terms * math.log10(2)) + 10):
        s = to_mpf(s)
        if s <= 0:
            raise ValueError(f"alternating_eta requires s > 0, got {s}")
        diffs = [mpf(j + 1) ** -s for j in range(terms + 1)]
        total = mpf(0)
        weight = mpf(1) / 2
        for k in range(terms + 1):
            total += weight * diffs[0]
            weight /= 2
            diffs = [a - b for a, b in zip(diffs, diffs[1:])]
        return BigReal(total, max(target_digits, 16))


def alternating_zeta_oracle(s, target_digits: int = 15) -> BigReal:
    """``zeta(s) = eta(s) / (1 - 2^(1-s))`` for real ``s > 0``, ``s != 1``."""
    with mp.workdps(target_digits + 10):
        s = to_mpf(s)
        if s == 1:
            raise PoleError("1 - 2^(1-s) vanishes at s = 1 (the bare alternating sum is log 2)")
        eta = alternating_eta(s, target_digits + 5)
        return BigReal(eta.value / (1 - mpf(2) ** (1 - s)), max(target_digits, 16))
