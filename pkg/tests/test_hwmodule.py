import random

import pytest

from foldedchar.characters import CapExceeded, freudenthal
from foldedchar.hwmodule import (
    ModuleMismatch,
    build_module,
    contravariant_form,
    e_action,
    form_sigma_invariance_check,
    random_monomial_pairs,
    sigma_trace,
    word_weight,
)
from foldedchar.exact import determinant
from foldedchar.folding import DiagramAutomorphism, parse_cycles
from foldedchar.rootdata import RootDatumError, make_datum, weyl_dimension

from conftest import folded

CASES = [
    ("A2", "(1 2)", (1, 1)),
    ("A2", "(1 2)", (2, 2)),
    ("A3", "(1 3)", (1, 0, 1)),
    ("A3", "(1 3)", (0, 1, 0)),
    ("A4", "(1 4)(2 3)", (1, 0, 0, 1)),
    ("A5", "(1 5)(2 4)", (0, 0, 1, 0, 0)),
    ("D4", "(3 4)", (1, 0, 0, 0)),
    ("D4", "(3 4)", (0, 1, 0, 0)),
    ("D4", "(1 3 4)", (0, 1, 0, 0)),
    ("D5", "(4 5)", (1, 0, 0, 0, 0)),
    ("E6", "(1 6)(3 5)", (0, 1, 0, 0, 0, 0)),
]


def test_e_action_examples():
    a1 = make_datum("A1")
    assert e_action(a1, (2,), 1, {(1,): 1}) == {(): 2}
    assert e_action(a1, (2,), 1, {(): 1}) == {}
    a2 = make_datum("A2")
    assert e_action(a2, (1, 0), 2, {(1,): 1}) == {}


def test_e_action_commutator():
    # e_i f_j - f_j e_i = [i == j] h_i on any monomial
    d = make_datum("A3")
    lam = (1, 1, 0)
    for w in [(), (1,), (2, 1), (3, 2, 1), (1, 2, 2)]:
        for i in d.nodes:
            for j in d.nodes:
                lhs = e_action(d, lam, i, {(j,) + w: 1})
                fe = {(j,) + u: c for u, c in e_action(d, lam, i, {w: 1}).items()}
                diff = dict(lhs)
                for u, c in fe.items():
                    diff[u] = diff.get(u, 0) - c
                diff = {u: c for u, c in diff.items() if c}
                h = word_weight(d, lam, w)[i - 1]
                expected = {w: h} if i == j and h else {}
                assert diff == expected


def test_contravariant_form_examples():
    a1 = make_datum("A1")
    assert contravariant_form(a1, (2,), (), ()) == 1
    assert contravariant_form(a1, (2,), (1,), (1,)) == 2
    assert contravariant_form(a1, (2,), (1,), ()) == 0
    # sl2: <f^k eta, f^k eta> = k! * prod_{j<k} (n - j)
    assert contravariant_form(a1, (3,), (1, 1), (1, 1)) == 2 * 3 * 2
    a2 = make_datum("A2")
    assert contravariant_form(a2, (1, 1), (1, 2), (2, 1)) == 1
    assert contravariant_form(a2, (1, 1), (1, 2), (1, 2)) == 2


def test_contravariant_form_symmetric():
    d = make_datum("D4")
    lam = (0, 1, 0, 0)
    words = [(2, 1, 3), (2, 3, 1), (1, 2, 3), (3, 2, 4), (2, 4, 3)]
    for a in words:
        for b in words:
            assert contravariant_form(d, lam, a, b) == contravariant_form(d, lam, b, a)


def test_build_module_examples():
    a1 = make_datum("A1")
    assert build_module(a1, (2,)).dims() == {(2,): 1, (0,): 1, (-2,): 1}
    m = build_module(make_datum("A2"), (1, 1))
    assert m.dims()[(0, 0)] == 2
    assert m.dimension == 8
    for label in ["A1", "D4", "E6"]:
        d = make_datum(label)
        assert build_module(d, d.zero()).dimension == 1


def test_build_module_errors():
    with pytest.raises(RootDatumError):
        build_module(make_datum("A2"), (-1, 1))
    with pytest.raises(CapExceeded):
        build_module(make_datum("A2"), (1, 1), cap=7)


@pytest.mark.parametrize("label,cycles,lam", CASES)
def test_module_matches_freudenthal(label, cycles, lam):
    d = make_datum(label)
    mod = build_module(d, lam, check=False)
    assert mod.dims() == freudenthal(d, lam).mults
    assert mod.dimension == weyl_dimension(d, lam)


@pytest.mark.parametrize("label,cycles,lam", CASES)
def test_gram_matrices(label, cycles, lam):
    mod = build_module(make_datum(label), lam)
    assert mod.spaces[lam].basis == [()]
    assert mod.spaces[lam].gram == ((1,),)
    for space in mod.spaces.values():
        g = space.gram
        n = len(g)
        assert all(isinstance(x, int) for row in g for x in row)
        assert all(g[a][b] == g[b][a] for a in range(n) for b in range(n))
        # positive definite: leading minors of an integer matrix
        assert all(determinant([row[:k] for row in g[:k]]) > 0 for k in range(1, n + 1))


@pytest.mark.parametrize("label,cycles,lam", CASES[:6])
def test_module_form_matches_verma_recursion(label, cycles, lam):
    d = make_datum(label)
    mod = build_module(d, lam)
    pairs = random_monomial_pairs(mod, 40, random.Random(1))
    for a, b in pairs:
        assert mod.form(a, b) == contravariant_form(d, lam, a, b)
    for space in mod.spaces.values():
        for p, a in enumerate(space.basis):
            for q, b in enumerate(space.basis):
                assert contravariant_form(d, lam, a, b) == space.gram[p][q]


@pytest.mark.parametrize("label,cycles,lam", CASES)
def test_pairing_row_is_gram_times_coordinates(label, cycles, lam):
    d = make_datum(label)
    mod = build_module(d, lam)
    s = parse_cycles(cycles, d.rank)
    for mu, space in mod.spaces.items():
        for w in space.basis:
            for word in (w, s.act_word(w)):
                x = mod.coordinates(word)
                r = mod.pairing_row(word)
                g = space.gram if word_weight(d, lam, word) == mu else None
                if g is None:
                    continue
                assert tuple(sum(g[a][b] * x[b] for b in range(len(x))) for a in range(len(x))) == r


def test_sigma_trace_a2():
    f = folded("A2", "(1 2)")
    mod = build_module(f.source, (1, 1))
    assert mod.spaces[(0, 0)].basis == [(1, 2), (2, 1)]
    assert sigma_trace(mod, f.sigma, (1, 1)) == 1
    assert sigma_trace(mod, f.sigma, (0, 0)) == 0
    assert sigma_trace(mod, f.sigma, (-1, -1)) == 1


def test_sigma_trace_errors():
    f = folded("A2", "(1 2)")
    mod = build_module(f.source, (1, 1))
    with pytest.raises(ValueError):
        sigma_trace(mod, f.sigma, (2, -1))
    with pytest.raises(ValueError):
        sigma_trace(mod, f.sigma, (3, 3))


def test_identity_trace_is_dimension():
    d = make_datum("D4")
    mod = build_module(d, (0, 1, 0, 0))
    ident = DiagramAutomorphism.identity(4)
    for mu, space in mod.spaces.items():
        assert sigma_trace(mod, ident, mu) == space.dim


@pytest.mark.parametrize("label,cycles,lam", CASES)
def test_trace_invariants(label, cycles, lam):
    d = make_datum(label)
    s = parse_cycles(cycles, d.rank)
    mod = build_module(d, lam)
    assert sigma_trace(mod, s, lam) == 1
    r = s.order
    even_a = label[0] == "A" and int(label[1:]) % 2 == 0
    for mu, space in mod.spaces.items():
        if s.act(mu) != mu:
            continue
        tr = sigma_trace(mod, s, mu)
        assert abs(tr) <= space.dim
        if not even_a:
            assert (space.dim - tr) % r == 0


def test_form_invariance_examples():
    f = folded("A3", "(1 3)")
    d, lam = f.source, (0, 1, 0)
    mod = build_module(d, lam)
    pairs = random_monomial_pairs(mod, 100, random.Random(0))
    assert form_sigma_invariance_check(d, lam, f.sigma, pairs)
    assert form_sigma_invariance_check(d, lam, f.sigma, pairs, mod=mod)
    assert form_sigma_invariance_check(d, lam, DiagramAutomorphism.identity(3), pairs)
    mismatched = [((2,), (2, 1)), ((1, 2), (3, 2)), ((), (2,))]
    assert form_sigma_invariance_check(d, lam, f.sigma, mismatched)


def test_form_invariance_detects_non_automorphism():
    # a permutation that is not a diagram automorphism breaks the form
    d = make_datum("A3")
    lam = (2, 1, 0)
    bad = DiagramAutomorphism((2, 1, 3))
    pairs = [((1,), (1,)), ((1, 2), (1, 2)), ((2, 3), (2, 3))]
    assert not form_sigma_invariance_check(d, lam, bad, pairs)


def test_random_pairs_share_weight():
    d = make_datum("E6")
    lam = (0, 1, 0, 0, 0, 0)
    mod = build_module(d, lam)
    pairs = random_monomial_pairs(mod, 100, random.Random(0))
    assert len(pairs) == 100
    for a, b in pairs:
        assert word_weight(d, lam, a) == word_weight(d, lam, b)
        assert word_weight(d, lam, a) in mod.spaces


def test_mismatch_is_an_error():
    assert issubclass(ModuleMismatch, AssertionError)
