"""
zeta(1/2) from square-free sums
===============================

The derivative of the continued estimator at s = 1/2 yields a slowly
converging, oscillating approximation of zeta(1/2).  One pass over the table
produces the whole log-spaced trace.
"""

# %%
from pathlib import Path

import numpy as np

from sqfzeta import sieve_squarefree, sqrt_density, zeta_half_trace
from sqfzeta.svg import Series, line_chart

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)
table = sieve_squarefree(1, 10**8)

# %%
print("x^-1/2 sum |mu(n)|/sqrt(n) at 1e8:", sqrt_density(10**8, table), " 12/pi^2 =", 12 / np.pi**2)

# %%
trace = zeta_half_trace(10**8, 40, table)
(out / "zeta_half.csv").write_text(trace.to_csv())
target = float(trace.target)
for lo in range(0, 8):
    sel = (trace.xs > 10**lo) & (trace.xs <= 10 ** (lo + 1))
    dev = trace.deviations()[sel]
    print(f"decade (1e{lo}, 1e{lo + 1}]: median {np.median(trace.values[sel]):+.4f}  max |dev| {dev.max():.3f}")

# %%
svg = line_chart(
    [Series(trace.xs, trace.values, "square-free estimator")],
    title="zeta(1/2) from square-free sums",
    xlabel="x",
    ylabel="estimate",
    logx=True,
    hlines=((target, f"zeta(1/2) = {target:.10f}"),),
)
(out / "zeta_half.svg").write_text(svg)
