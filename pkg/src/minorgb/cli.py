"""Command-line interface.

Subcommands operate on matrix files (see the corpus module for the
format) and print JSON reports.  Exit codes: 0 when every check passes,
1 when a check fails, 2 for usage errors and guardrail refusals.
"""

import argparse
import json
import sys

from .betti import GeneratorCapExceeded, betti_table
from .corpus import corpus_entries, load_matrix_file, write_corpus
from .drivers import DRIVER_IDS, run_driver, serialize_report
from .gin import multigraded_gin
from .groebner import (all_initial_ideals, buchberger, initial_ideal,
                       universal_gb_certificate)
from .hilbert import k_mn_closed, k_polynomial_ideal
from .markings import MarkingCapExceeded
from .matrices import maximal_minors
from .matroids import column_matroid
from .orders import degrevlex, parse_order

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _emit(doc, out_path):
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _load(path):
    return load_matrix_file(path)


def _minors(L):
    minors = [p for p in maximal_minors(L) if not p.is_zero()]
    if not minors:
        raise SystemExit("all maximal minors vanish")
    return minors


def _order(L, text):
    if text is None:
        return degrevlex(L.ring)
    return parse_order(L.ring, text)


def cmd_gb(args):
    L = _load(args.matrix)
    gb = buchberger(_minors(L), _order(L, args.order))
    _emit({
        "command": "gb",
        "matrix": args.matrix,
        "basis": [str(g) for g in gb],
        "initial_ideal": initial_ideal(_minors(L), gb.order).gens_str(),
    }, args.out)
    return EXIT_PASS


def cmd_universal_check(args):
    L = _load(args.matrix)
    minors = _minors(L)
    try:
        cert = universal_gb_certificate(minors, cap=args.max_markings)
    except MarkingCapExceeded as exc:
        _emit({"command": "universal-check", "matrix": args.matrix,
               "status": "skipped", "reason": str(exc)}, args.out)
        return EXIT_USAGE
    doc = {
        "command": "universal-check",
        "matrix": args.matrix,
        "verdict": cert.verdict,
        "realizable_markings": cert.realizable_count,
        "candidate_markings": cert.candidate_total,
    }
    if not cert.verdict:
        bad = next(o for o in cert.outcomes if not o.all_spairs_reduce)
        i, j, r = bad.failing_spair
        doc["failing_marking"] = {
            "marked_terms": [L.ring.mono_str(e) for e in bad.marking.choices],
            "spair": [i, j],
            "normal_form": str(r),
        }
    _emit(doc, args.out)
    return EXIT_PASS if cert.verdict else EXIT_FAIL


def cmd_initials(args):
    L = _load(args.matrix)
    minors = _minors(L)
    try:
        ideals = all_initial_ideals(minors, cap=args.max_markings)
    except MarkingCapExceeded as exc:
        _emit({"command": "initials", "matrix": args.matrix,
               "status": "skipped", "reason": str(exc)}, args.out)
        return EXIT_USAGE
    except ValueError as exc:
        _emit({"command": "initials", "matrix": args.matrix,
               "status": "failed", "reason": str(exc)}, args.out)
        return EXIT_FAIL
    _emit({"command": "initials", "matrix": args.matrix,
           "count": len(ideals),
           "initial_ideals": [J.gens_str() for J in ideals]}, args.out)
    return EXIT_PASS


def cmd_hilbert(args):
    if args.closed:
        m, n = args.closed
        _emit({"command": "hilbert", "closed": [m, n],
               "k_polynomial": k_mn_closed(m, n).serialize()}, args.out)
        return EXIT_PASS
    if not args.matrix:
        raise SystemExit("hilbert needs a matrix file or --closed M N")
    L = _load(args.matrix)
    k = k_polynomial_ideal(_minors(L), _order(L, args.order))
    _emit({"command": "hilbert", "matrix": args.matrix,
           "k_polynomial": k.serialize()}, args.out)
    return EXIT_PASS


def cmd_gin(args):
    L = _load(args.matrix)
    result = multigraded_gin(_minors(L), _order(L, args.order),
                             seed=args.seed)
    _emit({
        "command": "gin",
        "matrix": args.matrix,
        "gin": result.candidate.gens_str(),
        "trials": result.trials,
        "agreed": result.agreed,
        "borel_certified": result.borel_certified,
    }, args.out)
    return EXIT_PASS if result.agreed else EXIT_FAIL


def cmd_betti(args):
    L = _load(args.matrix)
    J = initial_ideal(_minors(L), _order(L, args.order))
    try:
        table = betti_table(J)
    except GeneratorCapExceeded as exc:
        _emit({"command": "betti", "matrix": args.matrix,
               "status": "skipped", "reason": str(exc)}, args.out)
        return EXIT_USAGE
    _emit({"command": "betti", "matrix": args.matrix,
           "initial_ideal": J.gens_str(),
           "betti": table.serialize(),
           "totals": list(table.totals())}, args.out)
    return EXIT_PASS


def cmd_matroid(args):
    L = _load(args.matrix)
    matroid = column_matroid(L)
    dual = matroid.dual()
    _emit({
        "command": "matroid",
        "matrix": args.matrix,
        "rank": matroid.rank_value,
        "bases": sorted(sorted(b) for b in matroid.bases),
        "circuits": [sorted(c) for c in matroid.circuits()],
        "dual_bases": sorted(sorted(b) for b in dual.bases),
    }, args.out)
    return EXIT_PASS


def cmd_verify(args):
    params = {}
    if args.matrix:
        params["path"] = args.matrix
    for key in ("m", "n"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.seed is not None and args.driver not in (
            "identities", "thm-2.5", "lemma-2.4", "remark-1.3", "thm-1.1"):
        params["seed"] = args.seed
    if args.max_markings is not None and args.driver in (
            "thm-1.1", "thm-3.1", "thm-3.2", "remark-1.3"):
        params["max_markings"] = args.max_markings
    if args.grading is not None:
        params["grading"] = args.grading
    if args.blocks is not None:
        params["block_sizes"] = tuple(
            int(s) for s in args.blocks.split(","))
    report = run_driver(args.driver, **params)
    text = serialize_report(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return EXIT_PASS if report["verdict"] == "pass" else EXIT_FAIL


def cmd_corpus(args):
    if args.action == "list":
        _emit({"command": "corpus", "entries": sorted(corpus_entries())},
              args.out)
        return EXIT_PASS
    if args.action == "write":
        paths = write_corpus(args.dir)
        _emit({"command": "corpus", "written": sorted(paths)}, args.out)
        return EXIT_PASS
    raise SystemExit("corpus action must be list or write")


def _add_common(p, matrix=True):
    if matrix:
        p.add_argument("matrix", help="matrix file (.mat)")
    p.add_argument("--order", default=None,
                   help="term order: lex | degrevlex | weight:a,b,... "
                        "[;vars:x>y>...]")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="also write report here")
    p.add_argument("--max-markings", type=int, default=10 ** 6)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="minorgb",
        description="Exact verification of universal Groebner bases, "
                    "generic initial ideals, and multigraded invariants "
                    "of ideals of maximal minors.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    for name, fn in (("gb", cmd_gb), ("universal-check", cmd_universal_check),
                     ("initials", cmd_initials), ("gin", cmd_gin),
                     ("betti", cmd_betti), ("matroid", cmd_matroid)):
        p = sub.add_parser(name)
        _add_common(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("hilbert")
    p.add_argument("matrix", nargs="?", default=None)
    p.add_argument("--closed", nargs=2, type=int, metavar=("M", "N"),
                   default=None, help="closed-form K-polynomial for (M, N)")
    p.add_argument("--order", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("verify")
    p.add_argument("driver", choices=DRIVER_IDS)
    p.add_argument("--matrix", default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--grading", choices=("column", "row"), default=None)
    p.add_argument("--blocks", default=None,
                   help="comma-separated block sizes for the rigidity "
                        "drivers")
    p.add_argument("--max-markings", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("corpus")
    p.add_argument("action", choices=("list", "write"))
    p.add_argument("dir", nargs="?", default="corpus")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_corpus)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return args.fn(args)
    except SystemExit as exc:
        sys.stderr.write("%s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
