"""Compiled partial-sum loops over a packed square-free table.

Every loop walks ``n`` upward from the table's first index and accumulates
with Neumaier's variant of Kahan summation, so results are reproducible
bit-for-bit.
"""

import math

import numpy as np
from numba import njit


@njit(cache=True)
def _term(n, s, logpow, alternate):
    if s == 1.0:
        t = 1.0 / n
    elif s == 0.5:
        t = 1.0 / math.sqrt(n)
    elif s == 0.0:
        t = 1.0
    else:
        t = math.exp(-s * math.log(n))
    if logpow > 0:
        t *= math.log(n) ** logpow
    if alternate and n % 2 == 0:
        t = -t
    return t


@njit(cache=True)
def checkpoint_sums(bits, lo, stops, s, logpow, alternate):
    """Running sums of ``sign(n) * |mu(n)| * log(n)**logpow / n**s``.

    ``stops`` is a strictly increasing int64 array; entry ``j`` of the result
    is the sum over ``lo <= n <= stops[j]``.
    """
    out = np.empty(stops.size, dtype=np.float64)
    total = 0.0
    comp = 0.0
    j = 0
    n = lo
    last = stops[stops.size - 1]
    while n <= last:
        k = n - lo
        if (bits[k >> 3] >> (k & 7)) & 1:
            t = _term(n, s, logpow, alternate)
            acc = total + t
            if abs(total) >= abs(t):
                comp += (total - acc) + t
            else:
                comp += (t - acc) + total
            total = acc
        while j < stops.size and stops[j] == n:
            out[j] = total + comp
            j += 1
        n += 1
    return out


@njit(cache=True)
def multi_exponent_sums(bits, lo, x, exponents):
    """``sum_{lo <= n <= x} |mu(n)| n**-s`` for every ``s`` in ``exponents``."""
    m = exponents.size
    total = np.zeros(m)
    comp = np.zeros(m)
    for n in range(lo, x + 1):
        k = n - lo
        if (bits[k >> 3] >> (k & 7)) & 1:
            ln = math.log(n)
            for i in range(m):
                t = math.exp(-exponents[i] * ln)
                acc = total[i] + t
                if abs(total[i]) >= abs(t):
                    comp[i] += (total[i] - acc) + t
                else:
                    comp[i] += (t - acc) + total[i]
                total[i] = acc
    return total + comp
