"""
Alternating square-free series
==============================

Flipping the sign of even terms only changes the Euler factor at p = 2,
so the alternating series is (2^s - 1)/(2^s + 1) times zeta(s)/zeta(2s).
At s = 1 both diverge like a log and the alternating constant follows.
"""

# %%
import math

from sqfzeta import (
    alternating_partial,
    alternating_prefactor,
    alternating_zeta_oracle,
    euler_product_truncated,
    gamma_bar_m_closed_form,
    gamma_bar_m_limit,
    ratio_reference,
    sieve_squarefree,
    zeta_em,
)

table = sieve_squarefree(1, 10**8)

# %%
for s in (1.5, 2.0, 3.0):
    lhs = alternating_partial(s, 10**7, table)
    rhs = float(alternating_prefactor(s)) * float(ratio_reference(s))
    print(f"s={s}: partial sum {lhs:.12f}  prefactor x ratio {rhs:.12f}")
print("Euler product to 1e6 at s=2:", euler_product_truncated(2, 10**6), " 15/pi^2 =", 15 / math.pi**2)

# %%
closed = gamma_bar_m_closed_form()
print("gamma-bar^M closed form:", closed.value.fixed(25))
for k in (6, 7, 8):
    est = gamma_bar_m_limit(10**k, table)
    print(f"  limit x=1e{k}: {est.value.significant(12)}")

# %%
# The classical alternating zeta series is an independent check on zeta_em.
for s in ("0.5", "0.8", "2"):
    print(f"zeta({s}): Euler-Maclaurin {zeta_em(s, 25)}  alternating {alternating_zeta_oracle(s, 25)}")
