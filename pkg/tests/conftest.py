import pytest

from foldedchar import fold, make_datum, parse_cycles


def folded(type_label, cycles):
    d = make_datum(type_label)
    return fold(d, parse_cycles(cycles, d.rank))


@pytest.fixture
def a2():
    return folded("A2", "(1 2)")


@pytest.fixture
def a3():
    return folded("A3", "(1 3)")


@pytest.fixture
def d4_triality():
    return folded("D4", "(1 3 4)")
