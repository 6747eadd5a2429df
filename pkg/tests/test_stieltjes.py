import math

import pytest
from mpmath import mp, mpf

from sqfzeta import reference
from sqfzeta.precision import Method, PrecisionError
from sqfzeta.sieve import sieve_squarefree
from sqfzeta.stieltjes import (
    GammaMRequest,
    gamma_bar_m_closed_form,
    gamma_bar_m_limit,
    gamma_m,
    gamma_m_closed_form,
    gamma_m_derivative,
    gamma_m_limit,
)


def diff(a, b):
    with mp.workdps(60):
        return float(abs(mpf(a) - mpf(b)))


def test_limit_single_term():
    t = sieve_squarefree(1, 10)
    est = gamma_m_limit(0, 1, t)
    assert float(est) == 1.0
    assert est.method is Method.LIMIT_FORMULA
    assert est.truncation_x == 1


def test_limit_first_order_at_1e6(table_1e6):
    est = gamma_m_limit(1, 10**6, table_1e6)
    assert diff(est.value, reference.TABLE1[1]) < 1e-4
    assert float(est.error_heuristic) == pytest.approx(1e-6)


def test_limit_routes_agree(table_1e6):
    x = 54321
    a = gamma_m_limit(2, x, table_1e6, route="mp")
    b = gamma_m_limit(2, x, table_1e6, route="float")
    assert diff(a.value, b.value) < 1e-12


def test_limit_is_deterministic(table_1e6):
    a = gamma_m_limit(0, 10**6, table_1e6)
    b = gamma_m_limit(0, 10**6, table_1e6)
    assert a.value.value == b.value.value


def test_limit_needs_coverage():
    with pytest.raises(ValueError, match="does not cover"):
        gamma_m_limit(0, 1000, sieve_squarefree(1, 999))


def test_closed_form_digits():
    est = gamma_m_closed_form()
    assert est.value.fixed(30) == reference.TABLE1[0]
    assert est.method is Method.CLOSED_FORM


def test_closed_form_gamma_component():
    # 6 gamma / pi^2 from the 20 printed digits of gamma, evaluated offline
    assert 6 * float(reference.EULER_GAMMA) / math.pi**2 == pytest.approx(0.3509050463083339, abs=1e-15)


@pytest.mark.parametrize(
    "n,tol",
    [(0, 1e-12), (1, 1e-12), (3, 1e-12), (5, 1e-8), (10, 1e-6)],
)
def test_derivative_against_table(n, tol):
    est = gamma_m_derivative(n)
    ref = mpf(reference.TABLE1[n])
    assert diff(est.value, ref) / float(ref) < tol
    assert est.method is Method.DERIVATIVE
    assert est.error_heuristic > 0


def test_derivative_reports_missing_precision():
    with pytest.raises(PrecisionError, match="digits"):
        gamma_m_derivative(10, 20)


def test_derivative_order_range():
    with pytest.raises(ValueError):
        gamma_m_derivative(11)


def test_gamma_bar_small_cases():
    t = sieve_squarefree(1, 10)
    assert float(gamma_bar_m_limit(1, t)) == 1.0
    # 1 - 1/2 - (2/pi^2) log 2, by hand
    assert float(gamma_bar_m_limit(2, t)) == pytest.approx(0.3595390144546342, abs=1e-15)


def test_gamma_bar_closed_form_digits():
    est = gamma_bar_m_closed_form()
    assert est.value.fixed(20, truncate=True) == reference.GAMMA_BAR_M
    assert diff(est.value, reference.GAMMA_BAR_M) < 1e-20


def test_gamma_bar_is_built_from_gamma_m():
    gm = gamma_m_closed_form(60)
    bar = gamma_bar_m_closed_form(60)
    with mp.workdps(60):
        rebuilt = gm.value.value / 3 + 8 * mp.log(2) / (3 * mp.pi**2)
        assert abs(rebuilt - bar.value.value) < mpf("1e-55")


def test_gamma_bar_limit_vs_closed(table_1e6):
    est = gamma_bar_m_limit(10**6, table_1e6)
    assert diff(est.value, gamma_bar_m_closed_form().value) < 10 / 10**6
    assert est.method is Method.ALTERNATING_LIMIT


def test_request_dispatch(table_1e6):
    assert gamma_m(GammaMRequest(0)).value.fixed(30) == reference.TABLE1[0]
    lim = gamma_m(GammaMRequest(0, 10**4, Method.LIMIT_FORMULA), table_1e6)
    assert lim.truncation_x == 10**4
    with pytest.raises(ValueError):
        GammaMRequest(11)
    with pytest.raises(ValueError):
        GammaMRequest(0, None, Method.LIMIT_FORMULA)
    with pytest.raises(ValueError):
        GammaMRequest(2, method=Method.CLOSED_FORM)
