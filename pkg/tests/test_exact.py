from fractions import Fraction
import itertools

import pytest
from hypothesis import given, strategies as st

from foldedchar.exact import SingularMatrix, determinant, pivot_columns, solve


def brute_rank(m):
    """Rank as the largest non-vanishing minor, by Leibniz expansion."""
    def det(a):
        n = len(a)
        total = 0
        for perm in itertools.permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        sign = -sign
            p = sign
            for i in range(n):
                p *= a[i][perm[i]]
            total += p
        return total

    rows, cols = len(m), len(m[0])
    for k in range(min(rows, cols), 0, -1):
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                if det([[m[r][c] for c in cs] for r in rs]):
                    return k
    return 0


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
def test_pivot_count_is_rank(m):
    piv = pivot_columns(m)
    assert len(piv) == brute_rank(m)
    assert piv == sorted(piv)
    if piv:
        assert brute_rank([[row[c] for c in piv] for row in m]) == len(piv)


def test_pivot_columns_greedy():
    m = [[1, 2, 0], [2, 4, 1]]
    assert pivot_columns(m) == [0, 2]
    assert pivot_columns([[0, 0], [0, 0]]) == []


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_solve(m, b):
    if determinant(m) == 0:
        with pytest.raises(SingularMatrix):
            solve(m, [b])
        return
    (x,) = solve(m, [b])
    assert all(sum(Fraction(m[i][j]) * x[j] for j in range(3)) == b[i] for i in range(3))


def test_determinant():
    assert determinant([[2, -1], [-1, 2]]) == 3
    assert determinant([[0, 1], [1, 0]]) == -1
