import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf

from sqfzeta.precision import (
    BigReal,
    ConstantEstimate,
    Method,
    PoleError,
    PrecisionError,
    bernoulli_table,
    euler_gamma,
    fd_weights,
    numeric_derivative,
    zeta_em,
    zeta_em_terms,
    zeta_prime_2,
)


def _mp(x):
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def close(a, b, tol):
    with mp.workdps(80):
        return abs(_mp(a) - _mp(b)) < abs(_mp(tol))


# --- BigReal -----------------------------------------------------------------

def test_bigreal_min_precision():
    a = BigReal("1.5", 40)
    b = BigReal("2.25", 20)
    assert (a + b).digits == 20
    assert (a * 2).digits == 40
    assert (3 - a).digits == 40
    assert float(a / b) == pytest.approx(1.5 / 2.25)


def test_bigreal_rejects_low_precision():
    with pytest.raises(ValueError):
        BigReal(1, 15)


def test_bigreal_formatting():
    x = BigReal("1e-7", 20)
    assert x.significant(5) == "0.0000001"
    assert BigReal("2.5", 20).fixed(0) in ("2", "3")
    assert BigReal("-1.23456789", 20).fixed(3) == "-1.235"
    assert BigReal("-1.23456789", 20).fixed(3, truncate=True) == "-1.234"
    assert BigReal("0.00012", 20).fixed(6) == "0.000120"


def test_bigreal_is_mpmath_compatible():
    x = BigReal(2, 30)
    with mp.workdps(30):
        assert close(mpmath.sqrt(x), mpmath.sqrt(2), "1e-29")


@settings(max_examples=50, deadline=None)
@given(
    a=st.fractions(min_value=-1000, max_value=1000),
    b=st.fractions(min_value=-1000, max_value=1000),
    da=st.integers(16, 80),
    db=st.integers(16, 80),
)
def test_bigreal_arithmetic_matches_exact(a, b, da, db):
    x, y = BigReal(a, da), BigReal(b, db)
    d = min(da, db)
    tol = Fraction(1, 10 ** (d - 3)) * max(1, abs(a) + abs(b))
    assert abs(Fraction(str((x + y).significant(d + 5))) - (a + b)) <= tol
    assert (x - y).digits == d


def test_constant_estimate_checks_error_sign():
    with pytest.raises(ValueError):
        ConstantEstimate(BigReal(1), Method.CLOSED_FORM, error_heuristic=BigReal(-1))
    est = ConstantEstimate(BigReal(1), Method.LIMIT_FORMULA, 10, BigReal("0.1"))
    assert est.to_dict()["method"] == "limit_formula"


# --- Bernoulli ---------------------------------------------------------------

def test_bernoulli_small():
    table = bernoulli_table(6)
    expected = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30), Fraction(5, 66), Fraction(-691, 2730)]
    assert len(table) == 6
    for k, e in enumerate(expected, start=1):
        assert close(table[k], e, "1e-45")


def test_bernoulli_b2_exact():
    assert bernoulli_table(1, 100)[1].value * 6 == 1


def test_bernoulli_matches_mpmath_large_index():
    table = bernoulli_table(60, 60)
    with mp.workdps(60):
        assert close(table[60], mpmath.bernoulli(120), mpmath.bernoulli(120) * mpf("1e-55"))


# --- zeta --------------------------------------------------------------------

def test_zeta_2_and_4():
    assert close(zeta_em(2, 30), "1.644934066848226436472415166646", "1e-30")
    assert close(zeta_em(4, 30), "1.082323233711138191516003696541", "1e-30")


def test_zeta_half_quoted_digits():
    assert close(zeta_em("0.5", 20), "-1.4603545088", "1e-10")


@pytest.mark.parametrize("s", ["0.3", "0.5", "0.8", "1.0001", "1.5", "2.5", "7"])
def test_zeta_against_mpmath(s):
    with mp.workdps(60):
        assert close(zeta_em(s, 40), mpmath.zeta(mpf(s)), "1e-40")


def test_zeta4_from_zeta2():
    # pi^2 = 6 zeta(2), so zeta(4) = pi^4/90 = (6 zeta(2))^2/90
    z2, z4 = zeta_em(2, 40), zeta_em(4, 40)
    with mp.workdps(60):
        assert close(z4, (6 * z2.value) ** 2 / 90, "1e-39")


@pytest.mark.parametrize("s", ["0.6", "2", "3.5"])
def test_cutoff_and_order_independence(s):
    with mp.workdps(50):
        a = zeta_em_terms(s, 20, 15)
        b = zeta_em_terms(s, 40, 17)
        assert abs(a - b) < mpf("1e-30")


def test_zeta_errors():
    with pytest.raises(PoleError):
        zeta_em(1, 20)
    with pytest.raises(ValueError):
        zeta_em(-1, 20)
    with pytest.raises(PrecisionError):
        zeta_em(2, 5000)


def test_zeta_is_deterministic():
    assert zeta_em("0.7", 30).value == zeta_em("0.7", 30).value


# --- zeta'(2), gamma ---------------------------------------------------------

def test_zeta_prime_2_matches_bruteforce_oracle():
    # fsum of -log(k)/k^2 for k <= 10**7 plus the integral tail, computed offline
    assert close(zeta_prime_2(15), "-0.9375482543158438", "2e-15")


def test_zeta_prime_2_sign():
    assert zeta_prime_2(10) < 0


def test_zeta_prime_2_against_mpmath():
    with mp.workdps(80):
        assert close(zeta_prime_2(60), mpmath.zeta(2, derivative=1), "1e-60")


def test_euler_gamma_digits():
    assert euler_gamma(20).fixed(20) == "0.57721566490153286061"  # rounded
    assert euler_gamma(20).fixed(20, truncate=True) == "0.57721566490153286060"
    assert close(euler_gamma(5), euler_gamma(20), "1e-5")
    with mp.workdps(120):
        assert close(euler_gamma(100), mp.euler, "1e-100")


def test_raw_harmonic_difference():
    # math.fsum(1/k, k <= 10**6) - log(10**6), computed offline
    raw = 0.5772161649014507
    assert abs(raw - float(euler_gamma(20))) < 1e-6


def test_closed_form_consistency():
    g, z = euler_gamma(40), zeta_prime_2(40)
    with mp.workdps(50):
        value = 6 * g.value / mp.pi**2 - 72 * z.value / mp.pi**4
    assert close(value, "1.043894515711938", "1e-15")


# --- numeric differentiation -------------------------------------------------

def test_derivative_of_square():
    value, err = numeric_derivative(lambda s: s * s, 3, 1, "1e-5")
    assert abs(float(value) - 6) < 1e-8
    assert err > 0


def test_derivative_of_exp():
    value, _ = numeric_derivative(mpmath.exp, 0, 4, "1e-3")
    assert abs(float(value) - 1) < 1e-6


def test_derivative_of_zeta_matches_zeta_prime_2():
    value, _ = numeric_derivative(zeta_em, 2, 1, "1e-6")
    assert close(value, zeta_prime_2(30), "1e-25")


def test_order_zero_is_exact():
    calls = []

    def f(s):
        calls.append(s)
        return mpmath.sin(s)

    value, _ = numeric_derivative(f, "0.3", 0)
    with mp.workdps(50):
        assert value.value == mpmath.sin(mpf("0.3"))
    assert len(calls) == 1


def test_avoid_center_never_samples_point():
    seen = []

    def f(s):
        seen.append(s)
        return mpmath.exp(s)

    value, _ = numeric_derivative(f, 1, 2, "0.1", avoid_center=True)
    assert all(s != 1 for s in seen)
    assert close(value, mpmath.e, "1e-20")


def test_precision_error_for_tiny_step():
    with pytest.raises(PrecisionError, match="digits"):
        numeric_derivative(mpmath.exp, 0, 8, "1e-8", precision=30)


@settings(max_examples=30, deadline=None)
@given(order=st.integers(1, 8), extra=st.integers(0, 3))
def test_fd_weights_exact_on_monomials(order, extra):
    nodes = list(range(-(order + extra), order + extra + 1))
    with mp.workdps(40):
        w = fd_weights(nodes, order)
        for power in range(len(nodes)):
            got = mpmath.fsum(wi * mpf(x) ** power for wi, x in zip(w, nodes))
            scale = mpmath.fsum(abs(wi) * abs(mpf(x)) ** power for wi, x in zip(w, nodes))
            want = math.factorial(order) if power == order else 0
            assert abs(got - want) <= mpf("1e-35") * scale
