"""Built-in verification catalog and the per-case harness used by ``verify``."""

from dataclasses import dataclass
import random
import re

from .characters import freudenthal
from .folding import FoldingError, fold, parse_cycles, to_folded_weight
from .hwmodule import build_module, form_sigma_invariance_check, random_monomial_pairs
from .rootdata import make_datum, weyl_dimension
from .twining import torus_samples, twining_character, verify_corollary, verify_jantzen

__all__ = ["CaseSpec", "DEFAULT_CATALOG", "parse_case", "run_case"]


@dataclass(frozen=True)
class CaseSpec:
    type_label: str
    sigma: str
    lam: tuple

    def __str__(self):
        return f"{self.type_label},{self.sigma},{','.join(map(str, self.lam))}"

    def resolve(self):
        """``(datum, folded datum)``; raises on invalid input."""
        d = make_datum(self.type_label)
        if len(self.lam) != d.rank:
            raise FoldingError(f"weight {self.lam} has wrong length for {self.type_label}")
        f = fold(d, parse_cycles(self.sigma, d.rank))
        return d, f


_CASE_RE = re.compile(r"^\s*([A-Za-z]\s*\d+)\s*,\s*((?:\([^)]*\)\s*)*)\s*,\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*$")


def parse_weight(text):
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}") from None


def parse_case(text):
    """Parse ``TYPE,CYCLES,WEIGHT`` such as ``A3,(1 3),1,0,1``."""
    m = _CASE_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse case {text!r}; expected TYPE,(CYCLES),w1,w2,...")
    return CaseSpec(m.group(1).replace(" ", "").upper(), m.group(2).strip(), parse_weight(m.group(3)))


def _a2_weights(cap=200):
    d = make_datum("A2")
    out, a = [], 0
    while weyl_dimension(d, (a, a)) <= cap:
        out.append((a, a))
        a += 1
    return out


DEFAULT_CATALOG = tuple(
    [CaseSpec("A2", "(1 2)", lam) for lam in _a2_weights()]
    + [CaseSpec("A3", "(1 3)", lam) for lam in [(1, 0, 1), (0, 1, 0), (1, 1, 1)]]
    + [CaseSpec("A4", "(1 4)(2 3)", lam) for lam in [(1, 0, 0, 1), (0, 1, 1, 0)]]
    + [CaseSpec("A5", "(1 5)(2 4)", (0, 0, 1, 0, 0))]
    + [CaseSpec("D4", "(3 4)", lam) for lam in [(1, 0, 0, 0), (0, 1, 0, 0)]]
    + [CaseSpec("D4", "(1 3 4)", lam) for lam in [(0, 1, 0, 0), (0, 2, 0, 0)]]
    + [CaseSpec("D5", "(4 5)", (1, 0, 0, 0, 0))]
    + [CaseSpec("E6", "(1 6)(3 5)", (0, 1, 0, 0, 0, 0))]
)


def is_a_even(type_label):
    return type_label[0] == "A" and int(type_label[1:]) % 2 == 0


def run_case(spec, cap=None, torus_count=10, tol=1e-8, seed=0, form_pairs=100):
    """Every check for one case, as a JSON-ready dict with an overall ``ok``."""
    d, f = spec.resolve()
    mod = build_module(d, spec.lam, cap=cap)
    ch = freudenthal(d, spec.lam, cap=cap)
    twine = twining_character(f, spec.lam, module=mod)
    report = verify_jantzen(f, spec.lam, cap=cap, twine=twine).to_dict()

    dims_ok = mod.dims() == ch.mults
    total_ok = mod.dimension == weyl_dimension(d, spec.lam) == ch.dimension
    report["oracle"] = {
        "dimension": mod.dimension,
        "per_weight_ok": dims_ok,
        "weyl_total_ok": total_ok,
    }

    r = f.sigma.order
    congruent = all((twine.dims[mu] - tr) % r == 0 for mu, tr in twine.entries.items())
    # asserted only outside type A_{2n}; recorded there
    mod_r = None if is_a_even(spec.type_label) else congruent
    rng = random.Random(seed)
    pairs = random_monomial_pairs(mod, form_pairs, rng)
    report["structural"] = {
        "trace_at_lambda_ok": twine[spec.lam] == 1,
        "trace_bounded_ok": all(0 <= tr <= twine.dims[mu] for mu, tr in twine.entries.items()),
        "trace_sum_ok": twine.total() == weyl_dimension(f.folded, to_folded_weight(f, spec.lam)),
        "mod_order_ok": mod_r,
        "mod_order_observed": congruent,
        "form_invariance_ok": form_sigma_invariance_check(d, spec.lam, f.sigma, pairs),
        "form_pairs": len(pairs),
    }

    cors = [verify_corollary(f, spec.lam, t, tol=tol, twine=twine, cap=cap)
            for t in torus_samples(d.rank, torus_count, seed)]
    report["corollary"] = {
        "tol": tol,
        "seed": seed,
        "max_error": max((c.error for c in cors), default=0.0),
        "ok": all(c.ok for c in cors),
    }
    structural = report["structural"]
    report["ok"] = bool(
        report["ok"]
        and dims_ok
        and total_ok
        and structural["trace_at_lambda_ok"]
        and structural["trace_bounded_ok"]
        and structural["trace_sum_ok"]
        and structural["mod_order_ok"] is not False
        and structural["form_invariance_ok"]
        and report["corollary"]["ok"]
    )
    return report
