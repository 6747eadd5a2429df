"""
Moebius-Stieltjes constants three ways
======================================

gamma^M_n from truncated sums, from the closed form (n = 0 only) and from
numerical differentiation of zeta(s)/zeta(2s) - 6/(pi^2 (s-1)) at s = 1.
"""

# %%
from sqfzeta import (
    gamma_m_closed_form,
    gamma_m_derivative,
    gamma_m_limit,
    sieve_squarefree,
)

closed = gamma_m_closed_form(50)
print("closed form   ", closed.value.fixed(30))

# %%
# Truncated sums converge slowly: the error is set by how far the
# square-free count strays from 6x/pi^2.
table = sieve_squarefree(1, 10**8)
for k in range(4, 9):
    est = gamma_m_limit(0, 10**k, table)
    print(f"limit x=1e{k}  {est.value.significant(12)}  error {float(est.value - closed.value):+.2e}")

# %%
# Differentiation reaches the full table precision.
print("\n n  gamma^M_n (derivative route, 50 working digits)")
for n in range(11):
    est = gamma_m_derivative(n, 50)
    print(f"{n:2d}  {est.value.fixed(25):>32s}  +- {float(est.error_heuristic):.0e}")
