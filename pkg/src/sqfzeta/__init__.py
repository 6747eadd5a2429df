"""Numerics for the square-free zeta series ``zeta(s)/zeta(2s) = sum |mu(n)|/n^s``."""

from .alternating import (
    PrimeList,
    alternating_eta,
    alternating_partial,
    alternating_prefactor,
    alternating_zeta_oracle,
    euler_product_truncated,
    signed_squarefree,
)
from .continuation import (
    ScanGrid,
    ScanRow,
    SeriesTrace,
    continuation_partial,
    ratio_reference,
    scan_grid,
    sqrt_density,
    zeta_half_estimate,
    zeta_half_trace,
)
from .precision import (
    BernoulliTable,
    BigReal,
    ConstantEstimate,
    Method,
    PoleError,
    PrecisionError,
    bernoulli_table,
    euler_gamma,
    numeric_derivative,
    zeta_em,
    zeta_prime_2,
)
from .sieve import (
    SieveConfig,
    SquarefreeTable,
    load_table,
    mobius_bruteforce,
    primes_up_to,
    save_table,
    sieve_squarefree,
)
from .stieltjes import (
    GammaMRequest,
    gamma_bar_m_closed_form,
    gamma_bar_m_limit,
    gamma_m,
    gamma_m_closed_form,
    gamma_m_derivative,
    gamma_m_limit,
)

__version__ = "0.1.0"
