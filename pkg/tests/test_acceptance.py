"""Acceptance gate: one test and one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the status lines are printed
even under output capture.
"""

import itertools
import json
import subprocess
import sys
import time

import pytest

from foldedchar.catalog import DEFAULT_CATALOG, is_a_even
from foldedchar.characters import freudenthal
from foldedchar.folding import fold, parse_cycles
from foldedchar.rootdata import classify_type, make_datum, weyl_dimension

VERIFY = [sys.executable, "-m", "foldedchar", "verify", "--catalog", "default", "--seed", "0", "--format", "json"]


def report(capsys, n, title, ok, detail=""):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}" + (f" ({detail})" if detail else ""))
    assert ok, detail


@pytest.fixture(scope="module")
def verify_run():
    start = time.perf_counter()
    proc = subprocess.run(VERIFY, capture_output=True, text=True, timeout=600)
    elapsed = time.perf_counter() - start
    return proc, elapsed


@pytest.fixture(scope="module")
def cases(verify_run):
    proc, _ = verify_run
    return json.loads(proc.stdout)["cases"]


def expected_catalog():
    a2 = make_datum("A2")
    out, a = [], 0
    while weyl_dimension(a2, (a, a)) <= 200:
        out.append(("A2", "(1 2)", (a, a)))
        a += 1
    out += [
        ("A3", "(1 3)", (1, 0, 1)), ("A3", "(1 3)", (0, 1, 0)), ("A3", "(1 3)", (1, 1, 1)),
        ("A4", "(1 4)(2 3)", (1, 0, 0, 1)), ("A4", "(1 4)(2 3)", (0, 1, 1, 0)),
        ("A5", "(1 5)(2 4)", (0, 0, 1, 0, 0)),
        ("D4", "(3 4)", (1, 0, 0, 0)), ("D4", "(3 4)", (0, 1, 0, 0)),
        ("D4", "(1 3 4)", (0, 1, 0, 0)), ("D4", "(1 3 4)", (0, 2, 0, 0)),
        ("D5", "(4 5)", (1, 0, 0, 0, 0)),
        ("E6", "(1 6)(3 5)", (0, 1, 0, 0, 0, 0)),
    ]
    return out


def test_catalog_contents():
    got = [(c.type_label, c.sigma, c.lam) for c in DEFAULT_CATALOG]
    assert got == expected_catalog()


def test_criterion_1_jantzen_exact(capsys, verify_run, cases):
    proc, elapsed = verify_run
    bad = [(c["case"], e) for c in cases for e in c["entries"] if e["trace"] != e["folded_dim"]]
    n_rows = sum(len(c["entries"]) for c in cases)
    ok = (proc.returncode == 0 and not bad and len(cases) == len(expected_catalog())
          and all(isinstance(e["trace"], int) for c in cases for e in c["entries"])
          and elapsed < 300)
    report(capsys, 1, "Jantzen theorem, exact integer equality on the catalog", ok,
           f"{len(cases)} cases, {n_rows} weights, {elapsed:.1f}s, exit {proc.returncode}, mismatches {bad[:3]}")


def test_criterion_2_corollary(capsys, cases):
    worst = max(c["corollary"]["max_error"] for c in cases)
    ok = all(c["corollary"]["ok"] and c["corollary"]["seed"] == 0 and c["corollary"]["tol"] == 1e-8
             for c in cases) and worst < 1e-8
    report(capsys, 2, "corollary at 10 unit-modulus torus elements per case, tol 1e-8", ok,
           f"max |lhs - rhs| = {worst:.2e}")


def orbit_h_by_definition(cartan, orbit):
    # number of unordered pairs {i, j} in the orbit joined by an edge
    return sum(1 for i, j in itertools.combinations(orbit, 2) if cartan[i - 1][j - 1] != 0)


FOLD_TABLE = [
    ("A3", "(1 3)", "C2"),
    ("A5", "(1 5)(2 4)", "C3"),
    ("D4", "(3 4)", "B3"),
    ("D5", "(4 5)", "B4"),
    ("D4", "(1 3 4)", "G2"),
    ("E6", "(1 6)(3 5)", "F4"),
    ("A2", "(1 2)", "A1"),
    ("A4", "(1 4)(2 3)", "C2"),
]


def test_criterion_3_fold_table(capsys):
    problems = []
    for label, cycles, expected in FOLD_TABLE:
        d = make_datum(label)
        f = fold(d, parse_cycles(cycles, d.rank))
        if classify_type(f.folded) != expected:
            problems.append(f"{label}{cycles} -> {classify_type(f.folded)}")
        for k, orb in enumerate(f.orbits):
            h = orbit_h_by_definition(d.cartan, orb)
            want = tuple((2 ** h) * int(i in orb) for i in d.nodes)
            if f.h_values[k] != h or f.alpha_O_coeffs(k) != want:
                problems.append(f"{label}{cycles} orbit {orb}: h={f.h_values[k]}, alpha_O={f.alpha_O_coeffs(k)}")
    a2 = fold(make_datum("A2"), parse_cycles("(1 2)", 2))
    a4 = fold(make_datum("A4"), parse_cycles("(1 4)(2 3)", 4))
    if a2.h_values != (1,) or a2.alpha_O_coeffs(0) != (2, 2):
        problems.append("A2 doubled root")
    if a4.h_values != (0, 1) or a4.alpha_O_coeffs(1) != (0, 2, 2, 0):
        problems.append("A4 doubled root")
    report(capsys, 3, "folding type table, h and alpha_O", not problems, "; ".join(problems))


def test_criterion_4_oracle(capsys, cases):
    bad = []
    for spec, c in zip(DEFAULT_CATALOG, cases):
        d = make_datum(spec.type_label)
        dim = weyl_dimension(d, spec.lam)
        if not (c["oracle"]["per_weight_ok"] and c["oracle"]["weyl_total_ok"]
                and c["oracle"]["dimension"] == dim == freudenthal(d, spec.lam).dimension):
            bad.append(str(spec))
    report(capsys, 4, "module weight dimensions = Freudenthal, totals = Weyl dimension", not bad, ", ".join(bad))


def test_criterion_5_structural(capsys, cases):
    bad = []
    for spec, c in zip(DEFAULT_CATALOG, cases):
        st = c["structural"]
        d = make_datum(spec.type_label)
        r = parse_cycles(spec.sigma, d.rank).order
        congruent = all((freudenthal(d, spec.lam)[e["mu"]] - e["trace"]) % r == 0 for e in c["entries"])
        checks = [st["form_invariance_ok"], st["form_pairs"] == 100, st["trace_at_lambda_ok"],
                  c["entries"][0]["mu"] == list(spec.lam) and c["entries"][0]["trace"] == 1]
        if not is_a_even(spec.type_label):
            checks += [st["mod_order_ok"] is True, congruent]
        if not all(checks):
            bad.append(str(spec))
    report(capsys, 5, "form sigma-invariance (100 pairs), trace 1 at lambda, mod-r congruence", not bad,
           ", ".join(bad))


def test_criterion_6_determinism(capsys, verify_run):
    first, _ = verify_run
    second = subprocess.run(VERIFY, capture_output=True, text=True, timeout=600)
    ok = first.stdout == second.stdout and first.stdout.strip() != ""
    report(capsys, 6, "two verify runs give byte-identical JSON", ok, f"{len(first.stdout)} bytes")
