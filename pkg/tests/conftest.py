import math

import pytest

from sqfzeta.sieve import sieve_squarefree


def is_squarefree(n: int) -> bool:
    """Trial-division oracle, independent of the sieve."""
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


@pytest.fixture(scope="session")
def table_1e6():
    return sieve_squarefree(1, 10**6)


@pytest.fixture(scope="session")
def table_1e7():
    return sieve_squarefree(1, 10**7)


@pytest.fixture(scope="session")
def table_1e8():
    return sieve_squarefree(1, 10**8)


@pytest.fixture(scope="session")
def squarefree_upto_1e5():
    return [n for n in range(1, 10**5 + 1) if is_squarefree(n)]


RESIDUE = 6 / math.pi**2


ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, ok: bool, detail: str) -> None:
    """Log one acceptance line; the summary is printed at the end of the run."""
    line = f"{'PASS' if ok else 'FAIL'} [{criterion}] {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
