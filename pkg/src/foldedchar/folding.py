"""Folding a simply-laced root datum along a diagram automorphism.

Given a Cartan-matrix automorphism ``sigma`` of a simply-laced datum, the
folded datum has one node per sigma-orbit ``O``.  Its coroots are the images
of the source coroots in the coinvariants ``Y_sigma`` and its roots are

    alpha_O = 2**h * sum(alpha_i for i in O)

where ``h`` counts unordered pairs ``{i, j}`` in ``O`` with ``alpha_i +
alpha_j`` a root (non-zero only for one orbit in type ``A_{2n}``).  The
folded Cartan entry ``<coroot_O, alpha_O'>`` is read off with any
representative ``i`` of ``O``.
"""

from dataclasses import dataclass
import re

from .rootdata import (
    RootDatum,
    RootDatumError,
    classify_type,
    from_cartan,
    is_dominant,
    positive_roots,
)

__all__ = [
    "DiagramAutomorphism",
    "FoldedDatum",
    "FoldingError",
    "parse_cycles",
    "orbits",
    "orbit_h",
    "fold",
    "is_sigma_invariant",
    "to_folded_weight",
    "from_folded_weight",
    "dominant_invariant_check",
]


class FoldingError(ValueError):
    pass


# simply-laced types whose Dynkin diagram has no symmetry
_RIGID = {"A1", "E7", "E8"}


@dataclass(frozen=True)
class DiagramAutomorphism:
    """Permutation of the node labels ``1..n``; ``perm[i-1]`` is the image of ``i``."""

    perm: tuple

    def __call__(self, i):
        return self.perm[i - 1]

    @property
    def order(self):
        r, cur = 1, self.perm
        while any(cur[i] != i + 1 for i in range(len(cur))):
            cur = tuple(self.perm[c - 1] for c in cur)
            r += 1
        return r

    @property
    def is_identity(self):
        return all(p == i + 1 for i, p in enumerate(self.perm))

    def act(self, mu):
        """Action on weight (or coweight) coordinates: ``sigma(omega_i) = omega_sigma(i)``."""
        out = [0] * len(mu)
        for i, c in enumerate(mu):
            out[self.perm[i] - 1] = c
        return tuple(out)

    def act_word(self, word):
        return tuple(self.perm[i - 1] for i in word)

    def cycles(self):
        seen, out = set(), []
        for i in range(1, len(self.perm) + 1):
            if i in seen:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))


_CYCLES_RE = re.compile(r"^\s*(\(\s*[\d\s]*\)\s*)*$")


def parse_cycles(text, n):
    """Parse cycle notation such as ``"(1 4)(2 3)"`` on the nodes ``1..n``.

    Fixed points may be omitted; ``""`` and ``"()"`` give the identity.
    """
    if not _CYCLES_RE.match(text):
        raise FoldingError(f"cannot parse cycle notation {text!r}")
    perm = list(range(1, n + 1))
    used = set()
    for body in re.findall(r"\(([^)]*)\)", text):
        cyc = [int(tok) for tok in body.split()]
        for i in cyc:
            if not 1 <= i <= n:
                raise FoldingError(f"node {i} out of range 1..{n}")
            if i in used:
                raise FoldingError(f"node {i} appears twice in {text!r}")
            used.add(i)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a - 1] = b
    return DiagramAutomorphism(tuple(perm))


def _check_automorphism(d, sigma):
    n = d.rank
    if len(sigma.perm) != n or sorted(sigma.perm) != list(range(1, n + 1)):
        raise FoldingError("sigma is not a permutation of the nodes")
    a = d.cartan
    for i in range(n):
        for j in range(n):
            if a[sigma.perm[i] - 1][sigma.perm[j] - 1] != a[i][j]:
                raise FoldingError(f"{sigma} does not preserve the Cartan matrix")


def orbits(d, sigma):
    """Sigma-orbits ordered by minimal node, each in cycle order from its minimum."""
    _check_automorphism(d, sigma)
    seen, out = set(), []
    for i in d.nodes:
        if i in seen:
            continue
        orb, j = [], i
        while j not in seen:
            seen.add(j)
            orb.append(j)
            j = sigma(j)
        out.append(tuple(orb))
    return tuple(out)


def orbit_h(d, orbit):
    """Number of unordered pairs in ``orbit`` whose simple roots sum to a root."""
    roots = {pr.coeffs for pr in positive_roots(d)}
    n = d.rank
    h = 0
    for a, i in enumerate(orbit):
        for j in orbit[a + 1:]:
            c = tuple(int(k + 1 in (i, j)) for k in range(n))
            if c in roots:
                h += 1
    return h


@dataclass(frozen=True)
class FoldedDatum:
    source: RootDatum
    sigma: DiagramAutomorphism
    orbits: tuple
    h_values: tuple
    folded: RootDatum
    alpha_O: tuple  # per orbit, weight coordinates in the source datum

    def orbit_of(self, i):
        for k, orb in enumerate(self.orbits):
            if i in orb:
                return k
        raise KeyError(i)

    def project_coweight(self, coweight):
        """The map ``Y -> Y_sigma``: ``coroot_i`` goes to ``coroot_O`` for ``i`` in ``O``."""
        out = [0] * len(self.orbits)
        for i, c in enumerate(coweight):
            out[self.orbit_of(i + 1)] += c
        return tuple(out)

    def alpha_O_coeffs(self, k):
        """Simple-root coefficients of ``alpha_O`` for the ``k``-th orbit."""
        orb = self.orbits[k]
        scale = 2 ** self.h_values[k]
        return tuple(scale if i in orb else 0 for i in self.source.nodes)


def fold(d, sigma):
    """Folded root datum of the simply-laced ``d`` along ``sigma``."""
    if not d.is_simply_laced:
        raise FoldingError(f"{d.type_label} is not simply-laced")
    if d.type_label in _RIGID:
        raise FoldingError(f"{d.type_label} has no non-trivial diagram automorphism")
    orbs = orbits(d, sigma)
    if sigma.is_identity:
        raise FoldingError("sigma must be a non-trivial automorphism")
    hs = tuple(orbit_h(d, o) for o in orbs)
    alphas = []
    for orb, h in zip(orbs, hs):
        s = [0] * d.rank
        for i in orb:
            for r, row in enumerate(d.cartan):
                s[r] += row[i - 1]
        alphas.append(tuple((2 ** h) * x for x in s))
    m = len(orbs)
    cartan = [[None] * m for _ in range(m)]
    for a, orb in enumerate(orbs):
        for b in range(m):
            vals = {alphas[b][i - 1] for i in orb}
            if len(vals) != 1:
                raise FoldingError("folded Cartan entry depends on the orbit representative")
            cartan[a][b] = vals.pop()
    try:
        folded = from_cartan(cartan)
    except RootDatumError as exc:
        raise FoldingError(f"folded matrix is invalid: {exc}") from exc
    return FoldedDatum(d, sigma, orbs, hs, folded, tuple(alphas))


def is_sigma_invariant(sigma, mu):
    return sigma.act(mu) == tuple(mu)


def to_folded_weight(f, mu):
    """Coordinates ``(<coroot_O, mu>)_O`` of a sigma-invariant weight."""
    if not is_sigma_invariant(f.sigma, mu):
        raise FoldingError(f"{tuple(mu)} is not sigma-invariant")
    return tuple(mu[orb[0] - 1] for orb in f.orbits)


def from_folded_weight(f, nu):
    """Inverse of :func:`to_folded_weight`."""
    out = [0] * f.source.rank
    for c, orb in zip(nu, f.orbits):
        for i in orb:
            out[i - 1] = c
    return tuple(out)


def dominant_invariant_check(f, lam):
    return is_sigma_invariant(f.sigma, lam) and is_dominant(lam)


def folded_label(f):
    return classify_type(f.folded)
