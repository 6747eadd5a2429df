"""
Square-free sieve and density
=============================

Build the |mu(n)| table, check it against trial division, and watch the
square-free density approach 6/pi^2.
"""

# %%
import math
import time

from sqfzeta import mobius_bruteforce, sieve_squarefree, SieveConfig

t0 = time.perf_counter()
table = sieve_squarefree(1, 10**8, SieveConfig(segment_size=1 << 22))
print(f"sieved 1..1e8 in {time.perf_counter() - t0:.2f}s, {table.bits.nbytes / 2**20:.1f} MiB packed")

# %%
# The first few entries, next to trial division.
print([table[n] for n in range(1, 13)])
print([abs(mobius_bruteforce(n)) for n in range(1, 13)])

# %%
# Density of square-free integers up to x.
for k in range(2, 9):
    x = 10**k
    q = table.count(1, x)
    print(f"x=1e{k}: Q(x)={q:>9d}  Q(x)/x - 6/pi^2 = {q / x - 6 / math.pi**2:+.3e}")
