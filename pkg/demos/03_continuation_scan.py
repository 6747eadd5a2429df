"""
Continuing the square-free series below s = 1
=============================================

Compare zeta(s)/zeta(2s) with the truncated estimator
sum_{n<=x} |mu(n)| n^-s - (6/pi^2) x^(1-s)/(1-s) on a grid of s, and plot
both curves.  The agreement degrades as s approaches 1/4.
"""

# %%
from pathlib import Path

from sqfzeta import continuation_partial, ratio_reference, scan_grid, sieve_squarefree
from sqfzeta.svg import Series, line_chart

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)
table = sieve_squarefree(1, 10**7)

# %%
grid = scan_grid(0.26, 2.0, 175, 10**7, table)
(out / "scan.csv").write_text(grid.to_csv())
print("max delta on [0.6, 2.0]:  ", f"{grid.max_delta(0.6, 2.0):.2e}")
print("max delta on [0.26, 0.35]:", f"{grid.max_delta(0.26, 0.35):.2e}")

# %%
s = [r.s for r in grid.rows]
svg = line_chart(
    [Series(s, [float(r.lhs) for r in grid.rows], "zeta(s)/zeta(2s)"), Series(s, [r.rhs for r in grid.rows], "estimator, x = 1e7")],
    title="Square-free series continued below s = 1",
    xlabel="s",
    ylabel="value",
)
(out / "scan.svg").write_text(svg)
(out / "scan_delta.svg").write_text(line_chart([Series(s, grid.deltas(), "|lhs - rhs|")], xlabel="s", ylabel="delta", logy=True))

# %%
# Spot values.  At s = 1/2 the target is exactly zero.
for x in (10**5, 10**6, 10**7):
    print(f"x=1e{len(str(x)) - 1}:  s=0.8 -> {continuation_partial(0.8, x, table):.8f}"
          f"   s=0.5 -> {continuation_partial(0.5, x, table):+.8f}")
print("reference at 0.8:", ratio_reference(0.8))
