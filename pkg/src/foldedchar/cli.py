"""Command-line interface.

Subcommands ``fold``, ``char``, ``twine`` and ``verify``.  Exit status is 0
on success, 1 when a verification fails and 2 on usage or validation errors.
"""

import argparse
import json
import sys

from .catalog import DEFAULT_CATALOG, parse_case, parse_weight, run_case
from .characters import CapExceeded, default_cap, freudenthal
from .folding import FoldingError, fold, parse_cycles
from .rootdata import RootDatumError, classify_type, make_datum
from .twining import verify_jantzen

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _fmt_weight(mu):
    return "(" + ",".join(map(str, mu)) + ")"


def _emit_json(obj, out):
    json.dump(obj, out, indent=2, sort_keys=False)
    out.write("\n")


def _folded(args):
    d = make_datum(args.type)
    return d, fold(d, parse_cycles(args.auto, d.rank))


def _weight_arg(args, d):
    lam = parse_weight(args.weight)
    if len(lam) != d.rank:
        raise RootDatumError(f"weight {lam} has wrong length for {d.type_label}")
    return lam


def cmd_fold(args, out):
    d, f = _folded(args)
    doc = {
        "type": d.type_label,
        "sigma": str(f.sigma),
        "order": f.sigma.order,
        "orbits": [list(o) for o in f.orbits],
        "h": list(f.h_values),
        "alpha_O": [list(f.alpha_O_coeffs(k)) for k in range(len(f.orbits))],
        "alpha_O_weight": [list(a) for a in f.alpha_O],
        "cartan": [list(r) for r in f.folded.cartan],
        "label": classify_type(f.folded),
    }
    if args.format == "json":
        _emit_json(doc, out)
    else:
        for key, val in doc.items():
            out.write(f"{key}\t{json.dumps(val)}\n")
    return EXIT_OK


def cmd_char(args, out):
    d = make_datum(args.type)
    lam = _weight_arg(args, d)
    ch = freudenthal(d, lam, cap=args.max_dim)
    rows = [(mu, ch[mu]) for mu in ch.weights()]
    if args.format == "json":
        _emit_json({
            "type": d.type_label,
            "lambda": list(lam),
            "entries": [{"mu": list(mu), "mult": m} for mu, m in rows],
            "total": ch.dimension,
        }, out)
    else:
        out.write("mu\tmult\n")
        for mu, m in rows:
            out.write(f"{_fmt_weight(mu)}\t{m}\n")
        out.write(f"total\t{ch.dimension}\n")
    return EXIT_OK


def cmd_twine(args, out):
    d, f = _folded(args)
    lam = _weight_arg(args, d)
    rep = verify_jantzen(f, lam, cap=args.max_dim)
    if args.format == "json":
        _emit_json(rep.to_dict(), out)
    else:
        out.write("mu\ttrace\tfolded_dim\tok\n")
        for r in rep.rows:
            out.write(f"{_fmt_weight(r.mu)}\t{r.trace}\t{r.folded_dim}\t{'ok' if r.ok else 'FAIL'}\n")
        st = sum(r.trace for r in rep.rows)
        sf = sum(r.folded_dim for r in rep.rows)
        out.write(f"sum\t{st}\t{sf}\t{'ok' if rep.ok else 'FAIL'}\n")
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_verify(args, out):
    if args.case:
        specs = [parse_case(c) for c in args.case]
    else:
        specs = list(DEFAULT_CATALOG)
    # validate everything before running anything
    for s in specs:
        _, f = s.resolve()
        if not all(c >= 0 for c in s.lam) or f.sigma.act(s.lam) != s.lam:
            raise FoldingError(f"{s}: lambda is not a sigma-invariant dominant weight")
    reports = [
        run_case(s, cap=args.max_dim, torus_count=args.torus_samples, tol=args.tol, seed=args.seed)
        for s in specs
    ]
    ok = all(r["ok"] for r in reports)
    if args.format == "json":
        _emit_json({"cases": reports, "ok": ok}, out)
    else:
        out.write("case\tdim\tjantzen\toracle\tstructural\tcorollary\tok\n")
        for s, r in zip(specs, reports):
            st = r["structural"]
            structural = (st["trace_at_lambda_ok"] and st["trace_bounded_ok"] and st["trace_sum_ok"]
                          and st["mod_order_ok"] is not False and st["form_invariance_ok"])
            oracle = r["oracle"]["per_weight_ok"] and r["oracle"]["weyl_total_ok"]
            jantzen = all(e["ok"] for e in r["entries"])
            cells = [jantzen, oracle, structural, r["corollary"]["ok"], r["ok"]]
            out.write(f"{s}\t{r['oracle']['dimension']}\t"
                      + "\t".join("ok" if c else "FAIL" for c in cells) + "\n")
        out.write(f"all\t\t\t\t\t\t{'ok' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser():
    p = argparse.ArgumentParser(
        prog="foldedchar",
        description="Fold simply-laced root data and check twining characters against the folded group.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, auto=False, weight=False):
        sp.add_argument("--type", required=True, help="Cartan type, e.g. A3, D4, E6")
        if auto:
            sp.add_argument("--auto", required=True, help='diagram automorphism in cycle notation, e.g. "(1 3)"')
        if weight:
            sp.add_argument("--weight", required=True, help="highest weight in fundamental-weight coordinates, e.g. 1,0,1")
        sp.add_argument("--format", choices=("table", "json"), default="table")
        sp.add_argument("--max-dim", type=int, default=None,
                        help="dimension cap (default: $FOLDEDCHAR_MAX_DIM or 2000)")

    common(sub.add_parser("fold", help="describe the folded root datum"), auto=True)
    common(sub.add_parser("char", help="weight multiplicities (Freudenthal)"), weight=True)
    common(sub.add_parser("twine", help="twining character vs folded character"), auto=True, weight=True)

    v = sub.add_parser("verify", help="batch verification")
    g = v.add_mutually_exclusive_group()
    g.add_argument("--catalog", choices=("default",), default="default")
    g.add_argument("--case", action="append", metavar="TYPE,(CYCLES),WEIGHT",
                   help='e.g. A3,"(1 3)","1,0,1"; may be repeated')
    v.add_argument("--max-dim", type=int, default=None)
    v.add_argument("--torus-samples", type=int, default=10)
    v.add_argument("--tol", type=float, default=1e-8)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("table", "json"), default="json")
    return p


_COMMANDS = {"fold": cmd_fold, "char": cmd_char, "twine": cmd_twine, "verify": cmd_verify}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if getattr(args, "max_dim", None) is None:
        args.max_dim = default_cap()
    try:
        return _COMMANDS[args.command](args, out)
    except (RootDatumError, FoldingError, CapExceeded, ValueError) as exc:
        print(f"foldedchar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
