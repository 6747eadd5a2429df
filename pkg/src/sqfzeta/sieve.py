"""Square-free indicator tables.

A :class:`SquarefreeTable` stores ``|mu(n)|`` for a contiguous range of
integers, one bit per integer, little-endian within each byte.  Tables are
built by a segmented sieve that strikes out multiples of ``p**2`` for every
prime ``p <= isqrt(hi)``.
"""

from __future__ import annotations

import math
import os
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

__all__ = [
    "SieveConfig",
    "SquarefreeTable",
    "sieve_squarefree",
    "mobius_bruteforce",
    "primes_up_to",
    "save_table",
    "load_table",
]

MAGIC = b"SQFT"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sIQQ")
_INT64_MAX = 2**63 - 1
DEFAULT_SEGMENT_SIZE = 1 << 22
BRUTEFORCE_LIMIT = 10**7


@dataclass(frozen=True)
class SieveConfig:
    """Segmenting and threading knobs for :func:`sieve_squarefree`.

    The output never depends on either value.
    """

    segment_size: int = DEFAULT_SEGMENT_SIZE
    thread_count: int = 1

    def __post_init__(self):
        if self.segment_size < 1:
            raise ValueError(f"segment_size must be >= 1, got {self.segment_size}")
        if self.thread_count < 1:
            raise ValueError(f"thread_count must be >= 1, got {self.thread_count}")

    @classmethod
    def from_env(cls, **overrides) -> "SieveConfig":
        """Build a config, taking ``thread_count`` from ``SQFZ_THREADS`` if set."""
        env = os.environ.get("SQFZ_THREADS")
        if env and "thread_count" not in overrides:
            overrides["thread_count"] = int(env)
        return cls(**overrides)


@dataclass(frozen=True, eq=False)
class SquarefreeTable:
    """Bit-packed ``|mu(n)|`` for ``lo <= n <= hi``.

    Bit ``k`` (little-endian bit order inside ``bits``) holds ``|mu(lo + k)|``.
    Instances are read-only once built.
    """

    lo: int
    hi: int
    bits: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.lo < 1 or self.hi < self.lo:
            raise ValueError(f"invalid range [{self.lo}, {self.hi}]")
        need = (self.hi - self.lo + 1 + 7) // 8
        if self.bits.dtype != np.uint8 or self.bits.shape != (need,):
            raise ValueError(f"bits must be a uint8 array of length {need}")
        self.bits.setflags(write=False)

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi

    def __getitem__(self, n: int) -> int:
        if n not in self:
            raise IndexError(f"{n} outside table range [{self.lo}, {self.hi}]")
        k = n - self.lo
        return int(self.bits[k >> 3] >> (k & 7)) & 1

    def __eq__(self, other):
        if not isinstance(other, SquarefreeTable):
            return NotImplemented
        return (self.lo, self.hi) == (other.lo, other.hi) and np.array_equal(self.bits, other.bits)

    def covers(self, a: int, b: int) -> bool:
        return self.lo <= a and b <= self.hi

    def require(self, x: int, start: int = 1) -> None:
        """Raise unless the table covers ``[start, x]``."""
        if not self.covers(start, x):
            raise ValueError(
                f"table range [{self.lo}, {self.hi}] does not cover [{start}, {x}]; "
                f"sieve at least up to {x}"
            )

    def indicator(self, a: int | None = None, b: int | None = None) -> np.ndarray:
        """Boolean array of ``|mu(n)|`` for ``a <= n <= b`` (defaults: whole table)."""
        a = self.lo if a is None else a
        b = self.hi if b is None else b
        if not self.covers(a, b):
            raise IndexError(f"[{a}, {b}] outside table range [{self.lo}, {self.hi}]")
        i, j = a - self.lo, b - self.lo + 1
        chunk = self.bits[i >> 3 : (j + 7) >> 3]
        flags = np.unpackbits(chunk, bitorder="little").astype(bool)
        off = i & ~7
        return flags[i - off : j - off]

    def count(self, a: int | None = None, b: int | None = None) -> int:
        """Number of square-free integers in ``[a, b]``."""
        a = self.lo if a is None else a
        b = self.hi if b is None else b
        total = 0
        step = 1 << 24
        for start in range(a, b + 1, step):
            total += int(np.count_nonzero(self.indicator(start, min(b, start + step - 1))))
        return total


def primes_up_to(n: int) -> np.ndarray:
    """All primes ``<= n`` as an int64 array (sieve of Eratosthenes)."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    is_prime = np.ones(n + 1, dtype=bool)
    is_prime[:2] = False
    is_prime[4::2] = False
    for p in range(3, math.isqrt(n) + 1, 2):
        if is_prime[p]:
            is_prime[p * p :: 2 * p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _sieve_segment(a: int, b: int, squares: np.ndarray) -> np.ndarray:
    seg = np.ones(b - a + 1, dtype=bool)
    for q in squares:
        q = int(q)
        if q > b:
            break
        start = -a % q
        seg[start::q] = False
    return seg


def sieve_squarefree(lo: int, hi: int, cfg: SieveConfig | None = None) -> SquarefreeTable:
    """Sieve ``|mu(n)|`` over ``[lo, hi]``.

    Segments are processed (optionally on a thread pool) and collected in
    ascending order, so the result is identical for every ``cfg``.
    """
    cfg = cfg or SieveConfig()
    lo, hi = int(lo), int(hi)
    if lo < 1:
        raise ValueError(f"lo must be >= 1, got {lo}")
    if hi < lo:
        raise ValueError(f"hi ({hi}) < lo ({lo})")
    if hi > _INT64_MAX:
        raise OverflowError(f"hi={hi} exceeds the int64 range")

    squares = primes_up_to(math.isqrt(hi)) ** 2
    bounds = [(a, min(hi, a + cfg.segment_size - 1)) for a in range(lo, hi + 1, cfg.segment_size)]

    def work(ab):
        return _sieve_segment(ab[0], ab[1], squares)

    out = np.empty((hi - lo + 1 + 7) // 8, dtype=np.uint8)
    pos = 0
    carry = np.zeros(0, dtype=bool)
    batch = 2 * cfg.thread_count
    with ThreadPoolExecutor(max_workers=cfg.thread_count) as pool:
        # batches bound memory; map() yields in submission order
        segments = (
            seg
            for i in range(0, len(bounds), batch)
            for seg in pool.map(work, bounds[i : i + batch])
        )
        for seg in segments:
            if carry.size:
                seg = np.concatenate([carry, seg])
            whole = seg.size & ~7
            packed = np.packbits(seg[:whole], bitorder="little")
            out[pos : pos + packed.size] = packed
            pos += packed.size
            carry = seg[whole:]
    if carry.size:
        out[pos] = np.packbits(carry, bitorder="little")[0]
    return SquarefreeTable(lo, hi, out)


def mobius_bruteforce(n: int) -> int:
    """Moebius function by trial division.  Test oracle, ``1 <= n <= 10**7``."""
    n = int(n)
    if n < 1:
        raise ValueError(f"mobius_bruteforce is defined for n >= 1, got {n}")
    if n > BRUTEFORCE_LIMIT:
        raise ValueError(f"n={n} above oracle limit {BRUTEFORCE_LIMIT}")
    sign = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1
    if n > 1:
        sign = -sign
    return sign


def save_table(table: SquarefreeTable, path: str | os.PathLike) -> None:
    """Write ``table`` in the SQFT binary format (header then packed bits)."""
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(MAGIC, FORMAT_VERSION, table.lo, table.hi))
        fh.write(table.bits.tobytes())


def load_table(path: str | os.PathLike) -> SquarefreeTable:
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size:
        raise ValueError(f"{path}: truncated SQFT header")
    magic, version, lo, hi = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ValueError(f"{path}: bad magic {magic!r}")
    if version != FORMAT_VERSION:
        raise ValueError(f"{path}: unsupported SQFT version {version}")
    bits = np.frombuffer(data, dtype=np.uint8, offset=_HEADER.size).copy()
    return SquarefreeTable(lo, hi, bits)
