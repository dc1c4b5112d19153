import pytest

from algconn.verify import verify_theorem_1


@pytest.fixture(scope="session")
def t1_reports():
    """Full minimality sweeps for n = 4..8, computed once per session.

    The n = 8 sweep dominates the suite's runtime, so every test that
    needs sweep rows shares this dict instead of re-running it.
    """
    return {n: verify_theorem_1(n) for n in range(4, 9)}


@pytest.fixture(scope="session")
def t1_small(t1_reports):
    return {n: t1_reports[n] for n in (4, 5, 6)}
