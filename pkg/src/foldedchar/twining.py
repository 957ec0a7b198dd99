"""Twining characters and the comparison with the folded group.

For a sigma-invariant dominant ``lam`` the twining character of ``V(lam)``
is ``mu -> tr(sigma | V_mu)`` on sigma-invariant weights.  It is compared
exactly with the weight multiplicities of the folded datum's irreducible
module of the same highest weight, and numerically, after twisting by a
torus element ``t``, with the character of that module at ``phi(t)``.
"""

from dataclasses import dataclass, field
import cmath
import random

from .characters import freudenthal, weight_sort_key
from .folding import (
    FoldingError,
    dominant_invariant_check,
    from_folded_weight,
    to_folded_weight,
)
from .hwmodule import build_module, sigma_trace

__all__ = [
    "TwiningCharacter",
    "TorusElement",
    "JantzenRow",
    "JantzenReport",
    "CorollaryReport",
    "twining_character",
    "folded_character",
    "verify_jantzen",
    "phi",
    "verify_corollary",
    "random_torus_element",
]


@dataclass(frozen=True)
class TwiningCharacter:
    lam: tuple
    entries: dict = field(hash=False)
    depth: dict = field(hash=False, repr=False)
    dims: dict = field(hash=False, repr=False)   # dim V_mu on the same weights

    def __getitem__(self, mu):
        return self.entries.get(tuple(mu), 0)

    def weights(self):
        return sorted(self.entries, key=lambda mu: weight_sort_key(self.depth[mu], mu))

    def total(self):
        return sum(self.entries.values())


@dataclass(frozen=True)
class TorusElement:
    """Point of ``C^* (x) Y``: one non-zero coordinate per simple coroot."""

    coords: tuple

    def __post_init__(self):
        if any(z == 0 for z in self.coords):
            raise ValueError("torus coordinates must be non-zero")

    def evaluate(self, mu):
        """``mu(t) = prod z_i ** <coroot_i, mu>``."""
        out = 1
        for z, c in zip(self.coords, mu):
            if c:
                out *= z ** c
        return out

    def __mul__(self, other):
        return TorusElement(tuple(a * b for a, b in zip(self.coords, other.coords)))


def _check_lambda(f, lam):
    if len(lam) != f.source.rank:
        raise FoldingError(f"weight {lam} has wrong length for {f.source.type_label}")
    if not dominant_invariant_check(f, lam):
        raise FoldingError(f"{lam} is not a sigma-invariant dominant weight")


def twining_character(f, lam, cap=None, module=None):
    """``mu -> tr(sigma | V_mu)`` from the explicit module of highest weight ``lam``."""
    lam = tuple(lam)
    _check_lambda(f, lam)
    mod = module if module is not None else build_module(f.source, lam, cap=cap)
    entries, depth, dims = {}, {}, {}
    for mu, space in mod.spaces.items():
        if f.sigma.act(mu) != mu:
            continue
        entries[mu] = sigma_trace(mod, f.sigma, mu)
        depth[mu] = space.depth
        dims[mu] = space.dim
    return TwiningCharacter(lam, entries, depth, dims)


def folded_character(f, lam, cap=None):
    """Folded-datum multiplicities at ``lam``, re-indexed by source weights."""
    lam = tuple(lam)
    _check_lambda(f, lam)
    ch = freudenthal(f.folded, to_folded_weight(f, lam), cap=cap)
    return {from_folded_weight(f, nu): c for nu, c in ch.mults.items()}


@dataclass(frozen=True)
class JantzenRow:
    mu: tuple
    trace: int
    folded_dim: int

    @property
    def ok(self):
        return self.trace == self.folded_dim


@dataclass(frozen=True)
class JantzenReport:
    case: dict
    orbits: tuple
    rows: tuple

    @property
    def ok(self):
        return all(r.ok for r in self.rows)

    def to_dict(self):
        return {
            "case": self.case,
            "orbits": [list(o) for o in self.orbits],
            "entries": [
                {"mu": list(r.mu), "trace": r.trace, "folded_dim": r.folded_dim, "ok": r.ok}
                for r in self.rows
            ],
            "ok": self.ok,
        }


def case_dict(f, lam):
    return {
        "type": f.source.type_label,
        "sigma": str(f.sigma),
        "lambda": list(lam),
        "folded_type": f.folded.type_label,
    }


def verify_jantzen(f, lam, cap=None, twine=None):
    """Compare traces and folded multiplicities on every sigma-invariant weight.

    The row set is the union of both supports, so a weight present on one
    side only shows up as a mismatch against 0.
    """
    lam = tuple(lam)
    twine = twine if twine is not None else twining_character(f, lam, cap=cap)
    folded = folded_character(f, lam, cap=cap)
    depth = dict(twine.depth)
    for mu in folded:
        if mu not in depth:
            depth[mu] = f.source.height(tuple(a - b for a, b in zip(lam, mu)))
    rows = tuple(
        JantzenRow(mu, twine[mu], folded.get(mu, 0))
        for mu in sorted(depth, key=lambda w: weight_sort_key(depth[w], w))
    )
    return JantzenReport(case_dict(f, lam), f.orbits, rows)


def phi(f, t):
    """The canonical map ``T -> T_sigma``: multiply coordinates along each orbit."""
    if len(t.coords) != f.source.rank:
        raise ValueError("torus element has the wrong number of coordinates")
    out = []
    for orb in f.orbits:
        z = 1
        for i in orb:
            z *= t.coords[i - 1]
        out.append(z)
    return TorusElement(tuple(out))


@dataclass(frozen=True)
class CorollaryReport:
    t: TorusElement
    lhs: complex
    rhs: complex
    tol: float

    @property
    def error(self):
        return abs(self.lhs - self.rhs)

    @property
    def ok(self):
        return self.error < self.tol

    def to_dict(self):
        return {
            "t": [[z.real, z.imag] for z in map(complex, self.t.coords)],
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "error": self.error,
            "ok": self.ok,
        }


def verify_corollary(f, lam, t, tol=1e-8, twine=None, cap=None):
    """``tr(t sigma, V)`` against ``tr(phi(t), V')``.

    Only sigma-stable weight spaces contribute to the left side; sigma
    permutes the others without fixed blocks.
    """
    lam = tuple(lam)
    twine = twine if twine is not None else twining_character(f, lam, cap=cap)
    lhs = sum(complex(t.evaluate(mu)) * tr for mu, tr in twine.entries.items())
    tp = phi(f, t)
    ch = freudenthal(f.folded, to_folded_weight(f, lam), cap=cap)
    rhs = sum(complex(tp.evaluate(nu)) * c for nu, c in ch.mults.items())
    return CorollaryReport(t, complex(lhs), complex(rhs), tol)


def random_torus_element(n, rng):
    """Unit-modulus coordinates ``exp(2 pi i u)`` with ``u`` uniform in [0, 1)."""
    return TorusElement(tuple(cmath.exp(2j * cmath.pi * rng.random()) for _ in range(n)))


def torus_samples(n, count, seed):
    rng = random.Random(seed)
    return [random_torus_element(n, rng) for _ in range(count)]
