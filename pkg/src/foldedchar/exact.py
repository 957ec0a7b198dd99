"""Exact linear algebra over the rationals for small dense matrices.

Matrices are lists of rows holding ``int`` or ``Fraction`` entries.
"""

from fractions import Fraction

__all__ = ["pivot_columns", "solve", "determinant", "SingularMatrix"]


class SingularMatrix(ArithmeticError):
    pass


def pivot_columns(m):
    """Indices of the pivot columns of an integer matrix.

    Fraction-free (Bareiss) elimination; the pivots are the lexicographically
    first maximal set of linearly independent columns.
    """
    if not m:
        return []
    a = [list(row) for row in m]
    rows, cols = len(a), len(a[0])
    pivots = []
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        p = next((k for k in range(r, rows) if a[k][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for k in range(r + 1, rows):
            for j in range(c + 1, cols):
                num = piv * a[k][j] - a[k][c] * a[r][j]
                a[k][j] = num / prev if isinstance(num, Fraction) else _exact_div(num, prev)
            a[k][c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _exact_div(num, den):
    q, rem = divmod(num, den)
    if rem:
        # non-integer input; fall back to rationals
        return Fraction(num, den)
    return q


def determinant(m):
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        p = next((k for k in range(c, n) if a[k][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for k in range(c + 1, n):
            f = a[k][c] / a[c][c]
            if f:
                for j in range(c, n):
                    a[k][j] -= f * a[c][j]
    return det


def solve(m, rhs):
    """Solve ``m x = b`` for each column ``b`` of ``rhs`` (a list of vectors).

    Returns the list of solution vectors as Fractions.
    """
    n = len(m)
    k = len(rhs)
    a = [[Fraction(x) for x in m[i]] + [Fraction(b[i]) for b in rhs] for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise SingularMatrix("matrix is singular")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        if piv != 1:
            a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                row_c = a[c]
                a[r] = [x - f * y for x, y in zip(a[r], row_c)]
    return [tuple(a[i][n + j] for i in range(n)) for j in range(k)]
