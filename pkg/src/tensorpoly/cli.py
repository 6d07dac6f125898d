"""Command-line driver: ``tensorpoly info|poly|check|gen``.

Exit status is 0 on success, 1 when a check or strategy cross-check fails,
and 2 on bad input (unreadable file, parse or structure errors).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable, Dict, List, Optional, Tuple

from . import graph as gc
from . import ribbon as rb
from . import tpoly as tp
from .errors import StrategyMismatchError, TensorPolyError
from .graphio import load, report, serialize
from .polynomial import MultiPoly
from .stranded import StrandedGraph, random_stranded_graph

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

STRATEGIES = {"subset": tp.SUBSET, "delcontr": tp.DELCONTR, "both": tp.BOTH}


def _evaluators(G: StrandedGraph, literal: bool) -> Dict[str, Tuple[Callable[[], MultiPoly], Callable[[], MultiPoly]]]:
    """``which -> (subset-sum evaluator, deletion/contraction evaluator)``."""
    M = G.underlying_multigraph()
    J = G.jacket()
    return {
        "tutte": (lambda: gc.tutte_subset_sum(M), lambda: gc.tutte_delcontr(M)),
        "mtutte": (lambda: gc.multivariate_tutte(M), lambda: gc.multivariate_tutte_delcontr(M)),
        "br": (lambda: rb.br_polynomial(J), lambda: rb.br_delcontr(J)),
        "mbr": (lambda: rb.multivariate_br(J), lambda: rb.multivariate_br_delcontr(J)),
        "t": (lambda: tp.t_polynomial(G), lambda: tp.t_polynomial_delcontr(G)),
        "mt": (lambda: tp.multivariate_t(G), lambda: tp.t_polynomial_delcontr(G, variant=tp.MULTIVARIATE)),
        "ht": (lambda: tp.hypervariate_t(G, literal=literal),
               lambda: tp.t_polynomial_delcontr(G, variant=tp.HYPERVARIATE) if not literal
               else tp.hypervariate_t(G, literal=True)),
    }


def _parse_subst(items: List[str]) -> Dict[str, MultiPoly]:
    out = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise ValueError(f"--subst expects var=value, got {item!r}")
        out[name.strip()] = MultiPoly.parse(value)
    return out


def cmd_info(args) -> int:
    G = load(args.file)
    rep = report(G)
    print(rep.to_json() if args.json else rep.to_text())
    return EXIT_OK


def cmd_poly(args) -> int:
    G = load(args.file)
    subst = _parse_subst(args.subst)
    subset_fn, delcontr_fn = _evaluators(G, args.literal)[args.which]
    strategy = STRATEGIES[args.strategy]
    verdict = None
    if strategy == tp.SUBSET:
        p = subset_fn()
    elif strategy == tp.DELCONTR:
        p = delcontr_fn()
    else:
        p, q = subset_fn(), delcontr_fn()
        verdict = "MATCH" if p == q else "MISMATCH"
        if verdict == "MISMATCH":
            diff = (p - q).canonical_text()
            if args.json:
                print(json.dumps({"which": args.which, "cross_check": verdict, "subset": p.canonical_text(),
                                  "delcontr": q.canonical_text(), "diff": diff}, sort_keys=True, indent=2))
            else:
                print(f"subset:   {p.canonical_text()}")
                print(f"delcontr: {q.canonical_text()}")
                print(f"MISMATCH  diff = {diff}")
            return EXIT_FAIL
    if subst:
        p = p.substitute(subst)
    if args.json:
        doc = {"which": args.which, "strategy": args.strategy, "polynomial": p.canonical_text(), "terms": p.to_json()}
        if verdict:
            doc["cross_check"] = verdict
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(p.canonical_text())
        if verdict:
            print(verdict)
    return EXIT_OK


def specialization_checks(G: StrandedGraph) -> List[Tuple[str, bool, str]]:
    """``T(t=1)`` against BR of the jacket and ``T(z=t=1)`` against Tutte.

    T carries ``y^n`` where Tutte carries ``(y-1)^n``, so the Tutte side is
    compared after the shift ``y -> y - 1``.  Passive edges sit in every
    subgraph of the T sum, so the classical sides are restricted to subsets
    containing them.
    """
    T = tp.t_polynomial(G)
    required = sorted(G.passive, key=str)
    br = rb.br_polynomial(G.jacket(), required=required)
    tut = gc.tutte_subset_sum(G.underlying_multigraph(), required=required)
    a = T.substitute({"t": 1})
    b = T.substitute({"z": 1, "t": 1, "y": MultiPoly.var("y") - 1})
    return [
        ("T(x,y,z,1) = BR(jacket)", a == br, (a - br).canonical_text()),
        ("T(x,y-1,1,1) = Tutte(underlying)", b == tut, (b - tut).canonical_text()),
    ]


def cmd_check(args) -> int:
    G = load(args.file)
    rep = tp.verify_delcontr(G)
    specs = specialization_checks(G)
    ok = rep.passed and all(s[1] for s in specs)
    if args.json:
        doc = rep.to_dict()
        doc["specializations"] = [{"identity": n, "passed": p, "diff": d} for n, p, d in specs]
        doc["passed"] = ok
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(f"deletion/contraction: {len(rep.checks)} active regular edge(s) checked")
        for c in rep.checks:
            line = f"  {c.edge}: {'pass' if c.passed else 'FAIL'}"
            if not c.passed:
                line += f"  diff = {c.diff.canonical_text()}"
            print(line)
        for name, passed, diff in specs:
            print(f"{name}: {'pass' if passed else 'FAIL  diff = ' + diff}")
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    G = random_stranded_graph(args.vertices, rng, n_flags=args.flags, passive_fraction=args.passive,
                              max_edges=args.max_edges)
    sys.stdout.write(serialize(G))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tensorpoly", description="Topological polynomials of stranded graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="topology report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("poly", help="compute a polynomial")
    p.add_argument("file")
    p.add_argument("--which", choices=["tutte", "mtutte", "br", "mbr", "t", "mt", "ht"], default="t")
    p.add_argument("--strategy", choices=sorted(STRATEGIES), default="subset")
    p.add_argument("--subst", action="append", default=[], metavar="VAR=VALUE")
    p.add_argument("--literal", action="store_true",
                   help="ht only: put the total genus sum on every bubble variable")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("check", help="verify deletion/contraction and specializations")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="random valid stranded graph")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--flags", type=int, default=0)
    p.add_argument("--passive", type=float, default=0.0, help="probability that an edge is passive")
    p.add_argument("--max-edges", type=int, default=None)
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StrategyMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (TensorPolyError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
