"""Weight multiplicities of irreducible modules via Freudenthal's recursion."""

from dataclasses import dataclass, field
from fractions import Fraction
import os

from .rootdata import (
    RootDatumError,
    dominant_representative,
    is_dominant,
    positive_roots,
    weyl_dimension,
    weyl_orbit,
)

__all__ = [
    "Character",
    "CapExceeded",
    "DEFAULT_MAX_DIM",
    "default_cap",
    "freudenthal",
    "support_invariant",
    "weight_sort_key",
]

DEFAULT_MAX_DIM = 2000


class CapExceeded(ValueError):
    """The module is larger than the configured dimension cap."""


def default_cap():
    env = os.environ.get("FOLDEDCHAR_MAX_DIM")
    return int(env) if env else DEFAULT_MAX_DIM


@dataclass(frozen=True)
class Character:
    highest: tuple
    mults: dict = field(hash=False)
    depth: dict = field(hash=False, repr=False)

    def __getitem__(self, mu):
        return self.mults.get(tuple(mu), 0)

    def __contains__(self, mu):
        return tuple(mu) in self.mults

    def __len__(self):
        return len(self.mults)

    @property
    def dimension(self):
        return sum(self.mults.values())

    def weights(self):
        """Support in row order: increasing depth below the highest weight, then lexicographically decreasing."""
        return sorted(self.mults, key=lambda mu: weight_sort_key(self.depth[mu], mu))


def weight_sort_key(depth, mu):
    return (depth, tuple(-c for c in mu))


def _dominant_support(d, lam):
    """Dominant weights of V(lam) with their depth ``height(lam - mu)``."""
    roots = positive_roots(d)
    depth = {lam: 0}
    todo = [lam]
    while todo:
        mu = todo.pop()
        for pr in roots:
            nu = tuple(m - r for m, r in zip(mu, pr.root))
            if is_dominant(nu) and nu not in depth:
                depth[nu] = depth[mu] + pr.height
                todo.append(nu)
    return depth


_CACHE = {}


def freudenthal(d, lam, cap=None):
    """Character of the irreducible module of highest weight ``lam``.

    Multiplicities are computed on dominant weights in order of increasing
    depth and then spread over Weyl orbits.  Every division is checked to be
    exact.
    """
    lam = tuple(lam)
    if len(lam) != d.rank:
        raise RootDatumError(f"weight {lam} has wrong length for {d.type_label}")
    if not is_dominant(lam):
        raise RootDatumError(f"{lam} is not dominant")
    cap = default_cap() if cap is None else cap
    dim = weyl_dimension(d, lam)
    if dim > cap:
        raise CapExceeded(f"dim V{lam} = {dim} exceeds the cap {cap}")
    key = (d.cartan, lam)
    if key in _CACHE:
        return _CACHE[key]

    roots = positive_roots(d)
    depth = _dominant_support(d, lam)
    rho = d.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    norm_lr = d.inner(lr, lr)
    mult = {lam: 1}

    def m(nu):
        return mult.get(dominant_representative(d, nu), 0)

    for mu in sorted(depth, key=lambda w: weight_sort_key(depth[w], w)):
        if mu == lam:
            continue
        mr = tuple(a + b for a, b in zip(mu, rho))
        den = norm_lr - d.inner(mr, mr)
        assert den > 0
        total = Fraction(0)
        for pr in roots:
            # weight strings are unbroken, so stop at the first zero
            nu = tuple(a + b for a, b in zip(mu, pr.root))
            c = m(nu)
            while c:
                total += c * d.inner(nu, pr.root)
                nu = tuple(a + b for a, b in zip(nu, pr.root))
                c = m(nu)
        value = 2 * total / den
        assert value.denominator == 1, "Freudenthal recursion gave a non-integer"
        mult[mu] = int(value)

    full = {}
    full_depth = {}
    for mu, c in mult.items():
        if c == 0:
            continue
        for nu in weyl_orbit(d, mu):
            full[nu] = c
            full_depth[nu] = d.height(tuple(a - b for a, b in zip(lam, nu)))
    ch = Character(lam, full, full_depth)
    _CACHE[key] = ch
    return ch


def support_invariant(d, sigma, ch):
    """Sigma-invariant weights of ``ch`` in row order."""
    return [mu for mu in ch.weights() if sigma.act(mu) == mu]
