"""Command-line front end.

Graphs travel as graph6, one per line, on stdin/stdout (or ``--input`` /
``--output`` files).  Structured results are JSON unless ``--format csv``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import graph6
from .claims import REGISTRY, ClaimError, emit, run_claim
from .constructions import (
    ConstructionError,
    FamilyParams,
    enumerate_family,
    family_member,
    named_graph,
)
from .graph import GraphError
from .oracle import SearchError, SearchSpec, search
from .spectral import SpectralError, rayleigh_lower_bound, rho_estimate, rho_exact
from .theta import PatternError, ThetaPattern, contains_theta


def parse_n_range(text: str) -> tuple[int, int]:
    """'9' -> (9, 9); '7..10' or '7-10' -> (7, 10)."""
    for sep in ("..", "-"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    n = int(text)
    return n, n


def _pattern_arg(text: str) -> ThetaPattern:
    try:
        return ThetaPattern.parse(text)
    except PatternError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read_graphs(path: Optional[str], positional: Sequence[str] = ()) -> list:
    if positional:
        return [graph6.decode(s) for s in positional]
    if path and path != "-":
        with open(path) as fh:
            return graph6.read_lines(fh)
    return graph6.read_lines(sys.stdin)


def _write(text: str, path: Optional[str]) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, default=str) + "\n"


def cmd_construct(args) -> int:
    if args.name in ("H", "G"):
        if args.n is None:
            raise ConstructionError("family members need --n")
        if args.all:
            graphs = enumerate_family(args.name, args.n)
        else:
            p = FamilyParams(args.name, args.n, b=args.offset, x1_size=args.x1, y1_size=args.y1,
                             x_larger=not args.x_smaller)
            graphs = [family_member(p)]
    else:
        if args.a is None or args.b is None:
            raise ConstructionError(f"{args.name} needs two integer parameters")
        graphs = [named_graph(args.name, args.a, args.b)]
    _write("".join(graph6.encode(g) + "\n" for g in graphs), args.output)
    return 0


def cmd_check(args) -> int:
    out = []
    for g in _read_graphs(args.input, args.graph6):
        w = contains_theta(g, args.pattern)
        out.append({
            "graph6": graph6.encode(g),
            "pattern": list(args.pattern.lengths),
            "contains": w is not None,
            "witness": w.to_dict() if w is not None and args.witness else None,
        })
    _write(_dump(out[0] if len(out) == 1 else out), args.output)
    return 0


def cmd_spectral(args) -> int:
    out = []
    for g in _read_graphs(args.input, args.graph6):
        est = rho_estimate(g, tol=args.tol, seed=args.seed)
        row = {
            "graph6": graph6.encode(g),
            "rayleigh": est.rayleigh,
            "residual": est.residual,
            "iterations": est.iterations,
            "rayleigh_lower_bound": str(rayleigh_lower_bound(g)),
            "exact_interval": None,
        }
        if not args.no_exact:
            row["exact_interval"] = rho_exact(g, Fraction(args.width), max_order=args.max_order).to_dict()
        out.append(row)
    _write(_dump(out[0] if len(out) == 1 else out), args.output)
    return 0


def cmd_search(args) -> int:
    lo, hi = parse_n_range(args.n)
    records = []
    for n in range(lo, hi + 1):
        spec = SearchSpec(n, args.pattern, args.constraint.replace("-", "_"), args.objective, args.odd_girth_min)
        records.append(search(spec, jobs=args.jobs))
    if args.format == "graph6":
        _write("".join(s + "\n" for r in records for s in r.maximizers), args.output)
    else:
        body = [r.to_dict() for r in records]
        _write(_dump(body[0] if len(body) == 1 else body), args.output)
    return 0


def cmd_verify(args) -> int:
    if args.list:
        for cid in sorted(REGISTRY):
            c = REGISTRY[cid]
            print(f"{cid}\t{c.default_range[0]}..{c.default_range[1]}\t{c.description}")
        return 0
    if not args.claim:
        raise ClaimError("name a claim id (see --list)")
    params: dict = {}
    if args.pattern is not None:
        params["pattern"] = list(args.pattern.lengths)
    if args.claim == "lemma3.3":
        params["seed"] = args.seed
        params["trials"] = args.trials
    n_range = parse_n_range(args.n) if args.n else None
    report = run_claim(args.claim, n_range, params, jobs=args.jobs)
    _write(emit(report, args.format), args.output)
    return 0 if report.must_hold_ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="thetaex", description="Theta-free extremal graph toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a named construction as graph6")
    c.add_argument("name", choices=["turan", "sk", "circ_k3", "bullet_k3", "H", "G"])
    c.add_argument("a", type=int, nargs="?", help="first part size (or n for turan)")
    c.add_argument("b", type=int, nargs="?", help="second part size (or r for turan)")
    c.add_argument("--n", type=int, help="order, for family members")
    c.add_argument("--offset", type=int, default=0, help="H(n): |Y| - |X| shift of the host K_{a,b}")
    c.add_argument("--x1", type=int, default=1, help="|X1| for a family member")
    c.add_argument("--y1", type=int, default=0, help="|Y1| for a G(n) member")
    c.add_argument("--x-smaller", action="store_true", help="G(n): put the smaller Turan part in X")
    c.add_argument("--all", action="store_true", help="every member of the family, up to isomorphism")
    c.add_argument("--output", "-o")
    c.set_defaults(func=cmd_construct)

    k = sub.add_parser("check", help="theta containment test")
    k.add_argument("graph6", nargs="*", help="graph6 strings (default: read stdin)")
    k.add_argument("--pattern", type=_pattern_arg, required=True, help="path lengths, e.g. 1,2,3")
    k.add_argument("--no-witness", dest="witness", action="store_false")
    k.add_argument("--input", "-i")
    k.add_argument("--output", "-o")
    k.set_defaults(func=cmd_check)

    s = sub.add_parser("spectral", help="spectral radius estimate and certified interval")
    s.add_argument("graph6", nargs="*")
    s.add_argument("--tol", type=float, default=1e-10)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--width", default="1/1000000000000", help="interval width as a rational")
    s.add_argument("--max-order", type=int, default=20)
    s.add_argument("--no-exact", action="store_true")
    s.add_argument("--input", "-i")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_spectral)

    q = sub.add_parser("search", help="exhaustive extremal search")
    q.add_argument("--n", required=True, help="order or range, e.g. 9 or 7..9")
    q.add_argument("--pattern", type=_pattern_arg)
    q.add_argument("--constraint", choices=["none", "non-bipartite", "non_bipartite"], default="non-bipartite")
    q.add_argument("--objective", choices=["edges", "rho"], default="edges")
    q.add_argument("--odd-girth-min", type=int)
    q.add_argument("--format", choices=["json", "graph6"], default="json")
    q.add_argument("--jobs", type=int, default=1)
    q.add_argument("--output", "-o")
    q.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="run a claim campaign")
    v.add_argument("claim", nargs="?")
    v.add_argument("--list", action="store_true", help="list claim ids")
    v.add_argument("--n", help="order or range; defaults per claim")
    v.add_argument("--pattern", type=_pattern_arg)
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--format", choices=["json", "csv"], default="json")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--output", "-o")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ConstructionError, PatternError, SearchError, SpectralError, ClaimError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
