"""Finite-type root data in exact integer coordinates.

Conventions
-----------
Nodes are labelled ``1..n``.  The Cartan matrix is stored with
``cartan[i][j] = <coroot_i, root_j>`` (0-based array indices for node
labels ``i+1``, ``j+1``).  Weights are integer tuples in fundamental-weight
coordinates, so the pairing ``<coroot_i, mu>`` is simply ``mu[i]`` and the
simple root ``alpha_j`` is column ``j`` of the Cartan matrix.  Coweights are
integer tuples in simple-coroot coordinates.

Node numbering follows Bourbaki:

* ``A_n``: the chain ``1 - 2 - ... - n``.
* ``B_n``, ``C_n``: the chain ``1 - ... - n`` with the double bond between
  ``n-1`` and ``n``.
* ``D_n``: the chain ``1 - ... - (n-2)`` with ``n-1`` and ``n`` both attached
  to ``n-2``.
* ``E_n``: the chain ``1 - 3 - 4 - ... - n`` with ``2`` attached to ``4``.
* ``F_4``: ``1 - 2 => 3 - 4``; ``G_2``: ``1 - 2`` with the triple bond.

Non-simply-laced labels name the transposed matrix: ``C_n`` is the datum
with ``cartan[n-1][n-2] == -2`` and ``B_n`` the one with
``cartan[n-2][n-1] == -2``.  With this reading the folding of ``A_{2n-1}``
is ``C_n`` and that of ``D_{n+1}`` is ``B_n``, i.e. the type of the
fixed-point Lie algebra.  ``B_2`` and ``C_2`` coincide and are reported as
``C2``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial, gcd
import re

__all__ = [
    "RootDatum",
    "RootDatumError",
    "cartan_matrix",
    "make_datum",
    "from_cartan",
    "positive_roots",
    "reflect",
    "weyl_orbit",
    "weyl_dimension",
    "weyl_group_order",
    "classify_type",
    "dominant_representative",
    "is_dominant",
]


class RootDatumError(ValueError):
    """Raised for unknown labels and matrices that are not of finite type."""


_LABEL_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def _chain(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _link(a, i, j):
    # 1-based node labels
    a[i - 1][j - 1] = a[j - 1][i - 1] = -1


def cartan_matrix(series, n):
    """Cartan matrix of the simple type ``series``/``n`` as a list of rows."""
    series = series.upper()
    if series == "A" and n >= 1:
        return _chain(n)
    if series in "BC" and n >= 2:
        a = _chain(n)
        if series == "C":
            a[n - 1][n - 2] = -2
        else:
            a[n - 2][n - 1] = -2
        if n == 2:
            # B2 = C2; one representative
            a = [[2, -1], [-2, 2]]
        return a
    if series == "D" and n >= 3:
        if n == 3:
            return _chain(3)
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        for i in range(1, n - 2):
            _link(a, i, i + 1)
        _link(a, n - 2, n - 1)
        _link(a, n - 2, n)
        return a
    if series == "E" and n in (6, 7, 8):
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        _link(a, 1, 3)
        _link(a, 2, 4)
        for i in range(3, n):
            _link(a, i, i + 1)
        return a
    if series == "F" and n == 4:
        a = _chain(4)
        a[2][1] = -2
        return a
    if series == "G" and n == 2:
        return [[2, -1], [-3, 2]]
    raise RootDatumError(f"unknown Cartan type {series}{n}")


def _symmetrizers(cartan):
    """Minimal positive integers d with d[i]*A[i][j] == d[j]*A[j][i]."""
    n = len(cartan)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or cartan[i][j] == 0:
                    continue
                want = d[i] * cartan[i][j] / cartan[j][i]
                if d[j] is None:
                    d[j] = want
                    comp.append(j)
                    stack.append(j)
                elif d[j] != want:
                    raise RootDatumError("Cartan matrix is not symmetrizable")
        den = 1
        for i in comp:
            den = den * d[i].denominator // gcd(den, d[i].denominator)
        vals = [int(d[i] * den) for i in comp]
        g = 0
        for v in vals:
            g = gcd(g, v)
        for i, v in zip(comp, vals):
            d[i] = v // g
    return tuple(int(x) for x in d)


def _leading_minors_positive(m):
    """Sylvester's criterion on an exact rational symmetric matrix."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            if f:
                for c in range(k, n):
                    a[r][c] -= f * a[k][c]
    return True


def _validate_cartan(cartan):
    n = len(cartan)
    if n == 0 or any(len(row) != n for row in cartan):
        raise RootDatumError("Cartan matrix must be square and non-empty")
    for i in range(n):
        if cartan[i][i] != 2:
            raise RootDatumError("diagonal entries must equal 2")
        for j in range(n):
            if i == j:
                continue
            if cartan[i][j] > 0:
                raise RootDatumError("off-diagonal entries must be <= 0")
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise RootDatumError("A[i][j] = 0 must imply A[j][i] = 0")
    d = _symmetrizers(cartan)
    sym = [[d[i] * cartan[i][j] for j in range(n)] for i in range(n)]
    if not _leading_minors_positive(sym):
        raise RootDatumError("Cartan matrix is not of finite type")
    return d


@dataclass(frozen=True)
class RootDatum:
    """Simply-connected semisimple root datum given by its Cartan matrix.

    ``Y`` has the simple coroots as basis and ``X`` the fundamental weights,
    so both lattices are implicit in the coordinates.
    """

    cartan: tuple
    symmetrizers: tuple = field(compare=False)
    type_label: str = field(compare=False)

    @property
    def rank(self):
        return len(self.cartan)

    @property
    def nodes(self):
        return tuple(range(1, self.rank + 1))

    @property
    def is_simply_laced(self):
        return all(x in (2, 0, -1) for row in self.cartan for x in row) and all(
            self.cartan[i][j] == self.cartan[j][i]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def simple_root(self, i):
        """``alpha_i`` (node label ``i``) in fundamental-weight coordinates."""
        return tuple(row[i - 1] for row in self.cartan)

    @cached_property
    def simple_roots(self):
        return tuple(self.simple_root(i) for i in self.nodes)

    @property
    def rho(self):
        return (1,) * self.rank

    def zero(self):
        return (0,) * self.rank

    def pair(self, coweight, weight):
        return sum(c * w for c, w in zip(coweight, weight))

    def root_to_weight(self, coeffs):
        """Weight coordinates of ``sum coeffs[j] alpha_j``."""
        n = self.rank
        return tuple(
            sum(self.cartan[i][j] * coeffs[j] for j in range(n)) for i in range(n)
        )

    @cached_property
    def _inverse_cartan(self):
        n = self.rank
        a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
             for i, row in enumerate(self.cartan)]
        for k in range(n):
            p = next(r for r in range(k, n) if a[r][k] != 0)
            a[k], a[p] = a[p], a[k]
            piv = a[k][k]
            a[k] = [x / piv for x in a[k]]
            for r in range(n):
                if r != k and a[r][k] != 0:
                    f = a[r][k]
                    a[r] = [x - f * y for x, y in zip(a[r], a[k])]
        return tuple(tuple(row[n:]) for row in a)

    def weight_to_root(self, weight):
        """Root-lattice coefficients of ``weight`` (Fractions in general)."""
        inv = self._inverse_cartan
        n = self.rank
        return tuple(sum(inv[j][i] * weight[i] for i in range(n)) for j in range(n))

    def height(self, weight):
        """Sum of simple-root coefficients; integral on the root lattice."""
        h = sum(self.weight_to_root(weight))
        if h.denominator != 1:
            raise RootDatumError(f"{weight} is not in the root lattice")
        return int(h)

    @cached_property
    def weight_form(self):
        """Symmetric rational Gram matrix of the fundamental weights.

        Normalized so that ``(alpha_i, alpha_i) = 2 * symmetrizers[i]``.
        """
        inv = self._inverse_cartan
        d = self.symmetrizers
        n = self.rank
        return tuple(tuple(inv[i][j] * d[i] for j in range(n)) for i in range(n))

    def inner(self, u, v):
        g = self.weight_form
        n = self.rank
        return sum(u[i] * g[i][j] * v[j] for i in range(n) if u[i] for j in range(n) if v[j])

    def __repr__(self):
        return f"RootDatum({self.type_label})"


def from_cartan(cartan, type_label=None):
    """Validated :class:`RootDatum` from an arbitrary finite-type matrix."""
    cartan = tuple(tuple(int(x) for x in row) for row in cartan)
    d = _validate_cartan(cartan)
    if type_label is None:
        type_label = _classify(cartan, d)
    return RootDatum(cartan, d, type_label)


def make_datum(type_label):
    """Root datum of a simple type such as ``"A3"``, ``"D4"`` or ``"E6"``."""
    m = _LABEL_RE.match(type_label)
    if not m:
        raise RootDatumError(f"cannot parse Cartan type {type_label!r}")
    series, n = m.group(1).upper(), int(m.group(2))
    a = cartan_matrix(series, n)
    if series == "D" and n == 3:
        label = "A3"
    elif series == "B" and n == 2:
        label = "C2"
    else:
        label = f"{series}{n}"
    return from_cartan(a, label)


def reflect(d, i, mu):
    """Simple reflection ``s_i(mu) = mu - <coroot_i, mu> alpha_i``."""
    c = mu[i - 1]
    if c == 0:
        return tuple(mu)
    col = i - 1
    return tuple(m - c * row[col] for m, row in zip(mu, d.cartan))


def is_dominant(mu):
    return all(c >= 0 for c in mu)


def dominant_representative(d, mu):
    """The dominant weight in the Weyl orbit of ``mu``."""
    mu = tuple(mu)
    while True:
        for i, c in enumerate(mu):
            if c < 0:
                mu = reflect(d, i + 1, mu)
                break
        else:
            return mu


def weyl_orbit(d, lam):
    """Weyl orbit of a dominant weight, by saturation under simple reflections."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise RootDatumError(f"{lam} is not dominant")
    seen = {lam}
    todo = [lam]
    while todo:
        mu = todo.pop()
        for i in d.nodes:
            if mu[i - 1] > 0:
                nu = reflect(d, i, mu)
                if nu not in seen:
                    seen.add(nu)
                    todo.append(nu)
    return frozenset(seen)


@dataclass(frozen=True)
class PositiveRoot:
    coeffs: tuple   # simple-root coefficients
    root: tuple     # weight coordinates
    coroot: tuple   # simple-coroot coordinates
    height: int


_ROOT_CACHE = {}


def positive_roots(d):
    """All positive roots with their coroots, by height, then coefficients in decreasing lexicographic order.

    Generated from the simple roots by applying simple reflections while the
    result stays positive.
    """
    key = d.cartan
    if key in _ROOT_CACHE:
        return _ROOT_CACHE[key]
    n = d.rank
    a = d.cartan
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    todo = list(simple)
    while todo:
        beta = todo.pop()
        for i in range(n):
            if beta == simple[i]:
                continue
            pairing = sum(a[i][j] * beta[j] for j in range(n))
            if pairing == 0:
                continue
            gamma = tuple(b - pairing * int(k == i) for k, b in enumerate(beta))
            if all(c >= 0 for c in gamma) and gamma not in seen:
                seen.add(gamma)
                todo.append(gamma)
    sym = d.symmetrizers
    out = []
    for c in sorted(seen, key=lambda c: (sum(c), tuple(-x for x in c))):
        # (beta, beta)/2 in units where (alpha_j, alpha_j)/2 = sym[j]
        norm = Fraction(sum(c[i] * c[j] * sym[i] * a[i][j] for i in range(n) for j in range(n)), 2)
        coroot = []
        for j in range(n):
            x = c[j] * sym[j] / norm
            if x.denominator != 1:
                raise RootDatumError("non-integral coroot")
            coroot.append(int(x))
        out.append(PositiveRoot(c, d.root_to_weight(c), tuple(coroot), sum(c)))
    _ROOT_CACHE[key] = tuple(out)
    return _ROOT_CACHE[key]


def weyl_dimension(d, lam):
    """Dimension of the irreducible module with highest weight ``lam``."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise RootDatumError(f"{lam} is not dominant")
    num = 1
    den = 1
    for pr in positive_roots(d):
        num *= sum(c * (l + 1) for c, l in zip(pr.coroot, lam))
        den *= sum(pr.coroot)
    q, r = divmod(num, den)
    assert r == 0, "Weyl dimension formula gave a non-integer"
    return q


_WEYL_ORDERS = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}


def weyl_group_order(type_label):
    """Order of the Weyl group for a label like ``"A3"`` or ``"A1xC2"``."""
    total = 1
    for part in type_label.split("x"):
        m = _LABEL_RE.match(part)
        if not m:
            raise RootDatumError(f"cannot parse Cartan type {part!r}")
        s, n = m.group(1).upper(), int(m.group(2))
        if part in _WEYL_ORDERS:
            total *= _WEYL_ORDERS[part]
        elif s == "A":
            total *= factorial(n + 1)
        elif s in "BC":
            total *= 2 ** n * factorial(n)
        elif s == "D":
            total *= 2 ** (n - 1) * factorial(n)
        else:
            raise RootDatumError(f"unknown Cartan type {part!r}")
    return total


def _components(cartan):
    n = len(cartan)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            i = stack.pop()
            for j in range(n):
                if not seen[j] and cartan[i][j] != 0:
                    seen[j] = True
                    comp.append(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _candidates(n):
    out = [("A", n)]
    if n >= 2:
        out.append(("C", n))
    if n >= 3:
        out.append(("B", n))
    if n >= 4:
        out.append(("D", n))
    if n in (6, 7, 8):
        out.append(("E", n))
    if n == 4:
        out.append(("F", 4))
    if n == 2:
        out.append(("G", 2))
    return out


def _isomorphic(a, b):
    """True if ``b`` is ``a`` after a simultaneous row/column permutation."""
    n = len(a)
    if sorted(map(sorted, a)) != sorted(map(sorted, b)):
        return False
    assign = [None] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        for t in range(n):
            if used[t] or sorted(a[k]) != sorted(b[t]):
                continue
            if all(a[k][p] == b[t][assign[p]] and a[p][k] == b[assign[p]][t] for p in range(k)):
                assign[k] = t
                used[t] = True
                if extend(k + 1):
                    return True
                used[t] = False
        return False

    return extend(0)


def _classify(cartan, d):
    labels = []
    for comp in _components(cartan):
        sub = [[cartan[i][j] for j in comp] for i in comp]
        n = len(comp)
        for s, r in _candidates(n):
            if _isomorphic(sub, cartan_matrix(s, r)):
                labels.append("C2" if (s, r) == ("B", 2) else f"{s}{r}")
                break
        else:
            raise RootDatumError("Cartan matrix is not of finite type")
    labels.sort(key=lambda s: (s[0], int(s[1:])))
    return "x".join(labels)


def classify_type(d):
    """Cartan type label of a datum or raw Cartan matrix, up to node relabelling."""
    cartan = d.cartan if isinstance(d, RootDatum) else tuple(tuple(r) for r in d)
    sym = _validate_cartan(cartan)
    return _classify(cartan, sym)
