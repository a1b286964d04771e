import pytest

from depjsl.finrel.finset import FinSet
from depjsl.finrel.relation import Rel
from depjsl.jsl.semilattice import chain, m_n, n_5, powerset


@pytest.fixture
def example_rel():
    """x1, x2 ↦ {y1, y2}; x3 ↦ {y3}."""
    x = FinSet.of("x1", "x2", "x3")
    y = FinSet.of("y1", "y2", "y3")
    return Rel.from_rows(x, y, {"x1": ["y1", "y2"], "x2": ["y1", "y2"], "x3": ["y3"]})


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def m3():
    return m_n(3)


@pytest.fixture
def n5():
    return n_5()


@pytest.fixture
def p3():
    return powerset(["a", "b", "c"])


@pytest.fixture
def scratch_suites():
    """Suites registered by a test are removed afterwards."""
    from depjsl.checks.suites import SUITES

    before = dict(SUITES)
    yield
    SUITES.clear()
    SUITES.update(before)
