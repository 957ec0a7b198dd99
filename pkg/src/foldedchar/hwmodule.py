"""Explicit irreducible highest-weight modules.

``V(lam)`` is built level by level below the highest weight vector ``eta``.
Every basis vector is a monomial ``f_{i_1} ... f_{i_k} eta``, written as the
word ``(i_1, ..., i_k)`` of node labels.  At each weight the candidates are
``f_j b`` for ``b`` a basis vector one level up; the contravariant form
(``<eta, eta> = 1``, ``e_i`` adjoint to ``f_i``) is computed on them from
data already known one level up, and a maximal subset with invertible Gram
matrix is kept.  Because the form is non-degenerate on the irreducible
quotient, this yields ``V(lam)`` and not the Verma module.

For each weight space the module stores, in coordinates of the chosen basis,

* ``e[i][k]``: the image ``e_i b_k`` in the weight space ``mu + alpha_i``;
* ``f[j][k]``: the image ``f_j b'_k`` of the ``k``-th basis vector of the
  weight space ``mu + alpha_j``.

Nothing in this module uses floating point or the Freudenthal recursion,
except the final cross-check in :func:`build_module`.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .characters import CapExceeded, default_cap, freudenthal, weight_sort_key
from .exact import pivot_columns, solve
from .rootdata import RootDatumError, is_dominant, weyl_dimension

__all__ = [
    "HWModule",
    "WeightSpace",
    "ModuleMismatch",
    "word_weight",
    "e_action",
    "contravariant_form",
    "build_module",
    "sigma_trace",
    "form_sigma_invariance_check",
    "random_monomial_pairs",
]


class ModuleMismatch(AssertionError):
    """The explicit module disagrees with Freudenthal: an implementation bug."""


def word_weight(d, lam, word):
    """Weight of ``f_{word} eta``: ``lam`` minus the simple roots in ``word``."""
    mu = list(lam)
    for i in word:
        for r, row in enumerate(d.cartan):
            mu[r] -= row[i - 1]
    return tuple(mu)


# ---------------------------------------------------------------------------
# Verma-level formulas on monomial combinations (dict word -> int)


def e_action(d, lam, i, v):
    """``e_i`` applied to a combination of monomials.

    Uses ``e_i f_j w = f_j e_i w + [i == j] <coroot_i, wt(w)> w`` and
    ``e_i eta = 0``; unrolled, ``e_i`` deletes each occurrence of ``i`` from
    the word with coefficient ``<coroot_i, weight of the part to its right>``.
    """
    out = {}
    for word, coeff in v.items():
        if not coeff:
            continue
        for p, letter in enumerate(word):
            if letter != i:
                continue
            c = word_weight(d, lam, word[p + 1:])[i - 1]
            if c == 0:
                continue
            w = word[:p] + word[p + 1:]
            out[w] = out.get(w, 0) + coeff * c
    return {w: c for w, c in out.items() if c}


def contravariant_form(d, lam, m, m2):
    """``<f_m eta, f_m2 eta>`` computed in the Verma module."""
    m, m2 = tuple(m), tuple(m2)
    if word_weight(d, lam, m) != word_weight(d, lam, m2):
        return 0
    return _form(d, tuple(lam), m, m2)


@lru_cache(maxsize=200_000)
def _form(d, lam, m, m2):
    if not m:
        return 1 if not m2 else 0
    # <f_i x, y> = <x, e_i y>
    i = m[0]
    total = 0
    for w, c in e_action(d, lam, i, {m2: 1}).items():
        total += c * _form(d, lam, m[1:], w)
    return total


# ---------------------------------------------------------------------------
# the irreducible module


@dataclass
class WeightSpace:
    weight: tuple
    depth: int
    basis: list                      # words
    gram: tuple                      # integer Gram matrix of the basis
    e: dict = field(default_factory=dict)
    f: dict = field(default_factory=dict)

    @property
    def dim(self):
        return len(self.basis)


@dataclass
class HWModule:
    datum: object
    lam: tuple
    spaces: dict                     # weight -> WeightSpace

    @property
    def dimension(self):
        return sum(s.dim for s in self.spaces.values())

    def dims(self):
        return {mu: s.dim for mu, s in self.spaces.items()}

    def weights(self):
        return sorted(self.spaces, key=lambda mu: weight_sort_key(self.spaces[mu].depth, mu))

    def coordinates(self, word):
        """Coordinates of ``f_word eta`` in the chosen basis, or ``None`` if it is zero."""
        d = self.datum
        mu = self.lam
        v = (Fraction(1),)
        for j in reversed(word):
            nu = tuple(a - r[j - 1] for a, r in zip(mu, d.cartan))
            space = self.spaces.get(nu)
            if space is None:
                return None
            cols = space.f[j]
            v = tuple(sum(v[k] * cols[k][t] for k in range(len(v))) for t in range(space.dim))
            mu = nu
        return v

    def pairing_row(self, word):
        """Row ``r`` with ``<x, f_word eta> = r . coords(x)`` on the weight space of ``word``.

        Built from ``<x, f_j w> = <e_j x, w>``, innermost letter first.
        Returns ``None`` if ``f_word eta`` leaves the support.
        """
        d = self.datum
        weights = [self.lam]
        for j in reversed(word):
            nu = tuple(a - row[j - 1] for a, row in zip(weights[-1], d.cartan))
            if nu not in self.spaces:
                return None
            weights.append(nu)
        r = (Fraction(1),)
        for t, j in enumerate(reversed(word)):
            cols = self.spaces[weights[t + 1]].e[j]
            r = tuple(sum(r[s] * col[s] for s in range(len(r))) for col in cols)
        return r

    def form(self, m, m2):
        """Contravariant form of two monomials via basis coordinates."""
        d = self.datum
        if word_weight(d, self.lam, m) != word_weight(d, self.lam, m2):
            return 0
        x = self.coordinates(m)
        y = self.coordinates(m2)
        if x is None or y is None:
            return 0
        s = self.spaces[word_weight(d, self.lam, m)].gram
        n = len(x)
        val = sum(x[a] * s[a][b] * y[b] for a in range(n) for b in range(n))
        assert val.denominator == 1
        return int(val)


def _as_int(x):
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ModuleMismatch(f"non-integral Gram entry {x}")
        return int(x)
    return x


def build_module(d, lam, cap=None, check=True):
    """Construct ``V(lam)`` explicitly; see the module docstring."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise RootDatumError(f"{lam} is not dominant")
    cap = default_cap() if cap is None else cap
    dim = weyl_dimension(d, lam)
    if dim > cap:
        raise CapExceeded(f"dim V{lam} = {dim} exceeds the cap {cap}")

    n = d.rank
    cols = [tuple(row[j] for row in d.cartan) for j in range(n)]  # alpha_{j+1}

    def up(mu, j):
        return tuple(a + b for a, b in zip(mu, cols[j - 1]))

    top = WeightSpace(lam, 0, [()], ((1,),))
    spaces = {lam: top}
    level = [lam]
    depth = 0
    while level:
        depth += 1
        targets = set()
        for nu in level:
            for j in d.nodes:
                targets.add(tuple(a - b for a, b in zip(nu, cols[j - 1])))
        new_level = []
        for mu in sorted(targets, key=lambda w: tuple(-c for c in w)):
            space = _build_space(d, mu, depth, spaces, up)
            if space is not None:
                spaces[mu] = space
                new_level.append(mu)
        level = new_level

    mod = HWModule(d, lam, spaces)
    if check:
        ch = freudenthal(d, lam, cap=cap)
        got = mod.dims()
        if got != ch.mults:
            raise ModuleMismatch(f"explicit module disagrees with Freudenthal for {lam}")
    return mod


def _build_space(d, mu, depth, spaces, up):
    cands = []  # (word, j, k)
    for j in d.nodes:
        nu = up(mu, j)
        src = spaces.get(nu)
        if src is None or src.depth != depth - 1:
            continue
        for k, w in enumerate(src.basis):
            cands.append(((j,) + w, j, k))
    if not cands:
        return None
    cands.sort(key=lambda c: c[0])

    # e_i images of every candidate, in coordinates of V_{mu + alpha_i}
    images = []
    for word, j, k in cands:
        nu = up(mu, j)
        src = spaces[nu]
        img = {}
        for i in d.nodes:
            tgt_w = up(mu, i)
            tgt = spaces.get(tgt_w)
            if tgt is None:
                continue
            vec = [Fraction(0)] * tgt.dim
            # f_j (e_i b'_k), with e_i b'_k in V_{nu + alpha_i}
            eb = src.e.get(i)
            if eb is not None:
                fcols = tgt.f.get(j)
                if fcols is not None:
                    col = eb[k]
                    for t, c in enumerate(col):
                        if c:
                            for s, x in enumerate(fcols[t]):
                                vec[s] += c * x
            if i == j:
                vec[k] += nu[i - 1]
            img[i] = tuple(vec)
        images.append(img)

    # Gram matrix: <f_j b'_k, c'> = <b'_k, e_j c'> computed in V_{mu + alpha_j}
    m = len(cands)
    gram = [[0] * m for _ in range(m)]
    for a, (word, j, k) in enumerate(cands):
        s = spaces[up(mu, j)].gram
        row_k = s[k]
        for b in range(m):
            vec = images[b].get(j)
            if vec is None:
                continue
            gram[a][b] = _as_int(sum(row_k[t] * vec[t] for t in range(len(vec))))
    for a in range(m):
        for b in range(a):
            if gram[a][b] != gram[b][a]:
                raise ModuleMismatch(f"asymmetric Gram matrix at {mu}")

    sel = pivot_columns(gram)
    if not sel:
        return None
    g_sel = tuple(tuple(gram[a][b] for b in sel) for a in sel)
    coords = solve(g_sel, [[gram[a][c] for a in sel] for c in range(m)])

    space = WeightSpace(mu, depth, [cands[a][0] for a in sel], g_sel)
    for c, (word, j, k) in enumerate(cands):
        space.f.setdefault(j, {})[k] = coords[c]
    # dense column lists indexed by k
    for j, byk in space.f.items():
        space.f[j] = [byk[k] for k in range(len(byk))]
    for i in d.nodes:
        if up(mu, i) in spaces:
            space.e[i] = [images[a][i] for a in sel]
    return space


def sigma_trace(mod, sigma, mu):
    """Trace of the diagram automorphism on the weight space ``mu``.

    ``sigma`` acts on monomials by relabelling, which fixes ``eta``.  Each
    ``sigma(b_k)`` is expressed in the chosen basis by solving ``S x = g``
    with ``g_m = <b_m, sigma(b_k)>``.
    """
    mu = tuple(mu)
    if sigma.act(mu) != mu:
        raise ValueError(f"{mu} is not sigma-invariant")
    space = mod.spaces.get(mu)
    if space is None:
        raise ValueError(f"{mu} is not a weight of V{mod.lam}")
    rhs = []
    for word in space.basis:
        g = mod.pairing_row(sigma.act_word(word))
        rhs.append(g)
    xs = solve(space.gram, rhs)
    tr = sum(x[k] for k, x in enumerate(xs))
    assert tr.denominator == 1
    return int(tr)


def random_monomial_pairs(mod, count, rng):
    """``count`` pairs of equal-weight monomials, each a random lowering path in ``mod``."""
    d = mod.datum
    spaces = mod.spaces

    def walk(target_depth):
        word = []
        mu = mod.lam
        for _ in range(target_depth):
            steps = []
            for j in d.nodes:
                nu = tuple(a - r[j - 1] for a, r in zip(mu, d.cartan))
                if nu in spaces:
                    steps.append((j, nu))
            if not steps:
                break
            j, mu = rng.choice(steps)
            word.insert(0, j)
        return tuple(word)

    weights = mod.weights()
    pairs = []
    while len(pairs) < count:
        mu = rng.choice(weights)
        depth = spaces[mu].depth
        # two independent paths of the same length; keep them only if they meet at one weight
        for _ in range(50):
            a, b = walk(depth), walk(depth)
            if word_weight(d, mod.lam, a) == word_weight(d, mod.lam, b):
                pairs.append((a, b))
                break
        else:
            a = walk(depth)
            pairs.append((a, a))
    return pairs


def form_sigma_invariance_check(d, lam, sigma, samples, mod=None):
    """True iff ``<sigma x, sigma y> == <x, y>`` on every sampled monomial pair.

    With ``mod`` the form is evaluated in basis coordinates, otherwise by the
    Verma-module recursion.
    """
    for x, y in samples:
        sx, sy = sigma.act_word(x), sigma.act_word(y)
        if mod is not None:
            lhs, rhs = mod.form(sx, sy), mod.form(x, y)
        else:
            lhs, rhs = contravariant_form(d, lam, sx, sy), contravariant_form(d, lam, x, y)
        if lhs != rhs:
            return False
    return True
