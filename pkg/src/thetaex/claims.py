"""Verification campaigns: each claim id maps to a per-n check.

Every check returns a verdict ``{n, predicted, observed, match, must_hold}``.
``must_hold`` marks unconditional statements (inequalities, identities, results
with an explicit threshold that n meets); a failure there is a bug or a
counterexample and makes the run exit non-zero.  Statements proved only for
sufficiently large n are evaluated the same way but only set ``match``.
"""

from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from . import graph6
from .canon import canonical_form
from .constructions import (
    balanced,
    bullet_k3,
    bullet_k3_balanced,
    circ_k3,
    circ_k3_balanced,
    enumerate_family,
    family_edge_count,
    family_member,
    FamilyParams,
    sk,
    sk_balanced,
    turan,
    turan_edges,
)
from .enumerate import OddGirthAbove, TriangleFree, iter_class
from .graph import Graph, build, is_bipartite, odd_girth
from .oracle import SearchSpec, ex_search, spex_search, spex_within_ex, triangle_constraint_search
from .spectral import (
    Order,
    compare_roots,
    compare_rho,
    rho_exceeds,
    rho_squared_exceeds,
    rho_squared_root,
)
from .graph import delete_vertex
from .theta import ThetaPattern, chromatic_number, is_color_critical, is_theta_free, theta_graph

SCHEMA_VERSION = 1
MAX_CLAIM_N_EXHAUSTIVE = 10
MAX_CLAIM_N_SPEX = 9
MAX_CLAIM_N_CONSTRUCTION = 64


class ClaimError(ValueError):
    pass


@dataclass
class ClaimReport:
    claim_id: str
    n_range: tuple[int, int]
    params: dict
    verdicts: list[dict] = field(default_factory=list)
    artifacts: dict[str, list[str]] = field(default_factory=dict)

    @property
    def must_hold_ok(self) -> bool:
        return all(v["match"] for v in self.verdicts if v["must_hold"])

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "claim_id": self.claim_id,
            "n_range": list(self.n_range),
            "params": self.params,
            "verdicts": self.verdicts,
            "artifacts": self.artifacts,
            "must_hold_ok": self.must_hold_ok,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ClaimReport":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ClaimError(f"unsupported schema version {d.get('schema_version')!r}")
        return cls(d["claim_id"], tuple(d["n_range"]), d["params"], d["verdicts"], d["artifacts"])


def _g6set(graphs) -> list[str]:
    return sorted({canonical_form(g).decode("ascii") for g in graphs})


def _verdict(n: int, predicted: Any, observed: Any, match: bool, must_hold: bool, **extra) -> dict:
    v = {"n": n, "predicted": predicted, "observed": observed, "match": bool(match), "must_hold": bool(must_hold)}
    v.update(extra)
    return v


def _pattern(params: dict, default: tuple[int, ...]) -> ThetaPattern:
    p = params.get("pattern")
    return ThetaPattern(p if p else default)


# ---- per-n checks -------------------------------------------------------


def check_triangle_free_max(n: int, params: dict) -> tuple[dict, list[str]]:
    rec = triangle_constraint_search(n, 5)
    predicted = (n - 1) ** 2 // 4 + 1
    return _verdict(n, predicted, rec.best_value, rec.best_value == predicted, n >= 5), rec.maximizers


def check_turan_minus_floor(n: int, params: dict) -> tuple[dict, list[str]]:
    r = params.get("r", 2)
    if r != 2:
        raise ClaimError("only r = 2 is checkable by the oracle")
    rec = triangle_constraint_search(n, 5)
    predicted = turan_edges(n, 2) - n // 2 + 1
    return _verdict(n, predicted, rec.best_value, rec.best_value == predicted, n >= 2 * r + 1), rec.maximizers


def odd_girth_edge_bound(n: int, k: int) -> int:
    return (n - 2 * k + 1) ** 2 // 4 + 2 * k - 1


def check_odd_girth_bound(n: int, params: dict) -> tuple[dict, list[str]]:
    """Max edges over non-bipartite graphs without odd cycles of length <= 2k+1,
    against the bound, for every k; scans the whole triangle-free class."""
    ks = params.get("ks", [1, 2, 3])
    best = {k: None for k in ks}
    scanned = 0
    for g in iter_class(n, TriangleFree()):
        scanned += 1
        og = odd_girth(g)
        if og is None:
            continue
        e = g.edge_count()
        for k in ks:
            if og > 2 * k + 1 and (best[k] is None or e > best[k]):
                best[k] = e
    predicted = {str(k): odd_girth_edge_bound(n, k) for k in ks}
    observed = {str(k): best[k] for k in ks}
    ok = all(best[k] is None or best[k] <= odd_girth_edge_bound(n, k) for k in ks)
    return _verdict(n, predicted, observed, ok, True, classes_scanned=scanned), []


def check_triangle_free_extremal_set(n: int, params: dict) -> tuple[dict, list[str]]:
    rec = triangle_constraint_search(n, 5)
    predicted = _g6set(enumerate_family("H", n))
    return _verdict(n, predicted, rec.maximizers, predicted == rec.maximizers, True), rec.maximizers


def check_theta123_max(n: int, params: dict) -> tuple[dict, list[str]]:
    rec = ex_search(SearchSpec(n, ThetaPattern((1, 2, 3))))
    predicted = (n - 1) ** 2 // 4 + 1
    return _verdict(n, predicted, rec.best_value, rec.best_value == predicted, n >= 9), rec.maximizers


THM12_ROWS = {
    "thm1.2/case-q2-r2": ((1, 2, 2), lambda n: enumerate_family("G", n)),
    "thm1.2/case-r-even": ((1, 2, 4), lambda n: [bullet_k3_balanced(n)]),
    "thm1.2/case-q2-r-odd": ((1, 2, 3), lambda n: enumerate_family("H", n)),
    "thm1.2/case-q4-r-odd": ((1, 4, 3), lambda n: [circ_k3(*balanced(n, 2)), circ_k3(*reversed(balanced(n, 2)))]),
}
THM13_ROWS = {
    "thm1.3/case-r-even": ((1, 2, 2), lambda n: [bullet_k3_balanced(n)]),
    "thm1.3/case-q2-r-odd": ((1, 2, 3), lambda n: [sk_balanced(n)]),
    "thm1.3/case-q4-r-odd": ((1, 4, 3), lambda n: [circ_k3_balanced(n)]),
}


def family_row(pattern: ThetaPattern, spectral: bool) -> str:
    """Claim id of the extremal-family row covering theta(1,q,r), q even."""
    ls = pattern.lengths
    if len(ls) != 3 or ls[0] != 1:
        raise ClaimError("rows cover theta(1,q,r) only")
    q_candidates = [x for x in ls[1:] if x % 2 == 0]
    if not q_candidates:
        raise ClaimError("theta(1,q,r) needs an even q")
    # choose q even and r the other length; prefer q = 2 when present
    q = 2 if 2 in ls[1:] else q_candidates[0]
    rest = list(ls[1:])
    rest.remove(q)
    r = rest[0]
    if spectral:
        if r % 2 == 0:
            return "thm1.3/case-r-even"
        return "thm1.3/case-q2-r-odd" if q == 2 else "thm1.3/case-q4-r-odd"
    if q == 2 and r == 2:
        return "thm1.2/case-q2-r2"
    if r % 2 == 0:
        return "thm1.2/case-r-even"
    return "thm1.2/case-q2-r-odd" if q == 2 else "thm1.2/case-q4-r-odd"


def _check_row(claim_id: str, n: int, params: dict, spectral: bool) -> tuple[dict, list[str]]:
    rows = THM13_ROWS if spectral else THM12_ROWS
    default, predicted_fn = rows[claim_id]
    pattern = _pattern(params, default)
    if family_row(pattern, spectral) != claim_id:
        raise ClaimError(f"{pattern} does not belong to row {claim_id}")
    spec = SearchSpec(n, pattern, "non_bipartite", "rho" if spectral else "edges")
    rec = spex_search(spec) if spectral else ex_search(spec)
    predicted = _g6set(predicted_fn(n))
    return _verdict(n, predicted, rec.maximizers, predicted == rec.maximizers, False,
                    predicted_subset=set(predicted) <= set(rec.maximizers),
                    best_value=rec.best_value if not spectral else float(rec.best_value.lo)), rec.maximizers


def check_spex_within_ex(n: int, params: dict) -> tuple[dict, list[str]]:
    pattern = _pattern(params, (1, 2, 2))
    ex = ex_search(SearchSpec(n, pattern, "non_bipartite", "edges"))
    sp = spex_search(SearchSpec(n, pattern, "non_bipartite", "rho"))
    rel = spex_within_ex(ex, sp)
    observed = {"ex_best": ex.best_value, "spex_maximizer_edges": rel["spex_maximizer_edges"]}
    return _verdict(n, "SPEX subset of EX", observed, rel["subset"], False), sp.maximizers


def check_circ_balanced_max(n: int, params: dict) -> tuple[dict, list[str]]:
    a, b = balanced(n, 2)
    best = circ_k3(a, b)
    losers = {}
    for x in range(2, n - 3):
        y = n - 2 - x
        if y < 2 or (x, y) == (a, b):
            continue
        c = compare_rho(best, circ_k3(x, y), max_order=n)
        losers[f"{x},{y}"] = c.value
    ok = all(v == Order.GREATER.value for v in losers.values())
    return _verdict(n, f"circ_k3({a},{b}) strictly maximal", losers, ok, True), []


def check_vertex_deletion(n: int, params: dict) -> tuple[dict, list[str]]:
    graphs = [graph6.decode(s) for s in params["_graphs"].get(str(n), [])]
    violations = []
    checks = 0
    for g in graphs:
        # bisection only narrows the bracket, so one root object serves every u
        lhs = rho_squared_root(g, 0)
        for u in range(g.n):
            rhs = rho_squared_root(delete_vertex(g, u), 2 * g.degree(u))
            checks += 1
            if compare_roots(lhs, rhs) is Order.GREATER:
                violations.append([graph6.encode(g), u])
    return _verdict(n, 0, len(violations), not violations, True, graphs=len(graphs), pairs=checks), \
        [v[0] for v in violations]


EVEN_R_PATTERNS = [(1, 2, 2), (1, 2, 4), (1, 4, 4)]
Q2_ODD_R_PATTERNS = [(1, 2, 3), (1, 2, 5)]
Q4_ODD_R_PATTERNS = [(1, 4, 3), (1, 4, 5)]


def _construction_rows(n: int, families: bool = True) -> list[tuple[str, Graph, int, list[tuple[int, ...]]]]:
    """(name, graph, expected edge count, patterns it must avoid), one row per
    construction named in an extremal-family row with q, r <= 5."""
    a, b = balanced(n, 2)
    rows = [
        ("SK bal", sk_balanced(n), (n - 1) ** 2 // 4 + 1, Q2_ODD_R_PATTERNS),
        ("bullet bal", bullet_k3_balanced(n), (n - 1) ** 2 // 4 + 2, EVEN_R_PATTERNS),
        ("circ bal", circ_k3(a, b), (n - 2) ** 2 // 4 + 3, Q4_ODD_R_PATTERNS),
        ("circ rev", circ_k3(b, a), (n - 2) ** 2 // 4 + 3, Q4_ODD_R_PATTERNS),
    ]
    if families:
        for i, g in enumerate(enumerate_family("G", n)):
            rows.append((f"G[{i}]", g, family_edge_count("G", n), [(1, 2, 2)]))
        for i, g in enumerate(enumerate_family("H", n)):
            rows.append((f"H[{i}]", g, family_edge_count("H", n), Q2_ODD_R_PATTERNS))
    return rows


def check_constructions(n: int, params: dict) -> tuple[dict, list[str]]:
    observed = {}
    ok = True
    for name, g, expected, patterns in _construction_rows(n, params.get("families", True)):
        free = {",".join(map(str, p)): is_theta_free(g, ThetaPattern(p)) for p in patterns}
        nonbip = is_bipartite(g) is None
        row_ok = g.edge_count() == expected and nonbip and all(free.values())
        ok &= row_ok
        observed[name] = {"edges": g.edge_count(), "expected": expected, "non_bipartite": nonbip, "theta_free": free}
    return _verdict(n, "identities hold", observed, ok, True), []


def check_spectral_chain(n: int, params: dict) -> tuple[dict, list[str]]:
    m = (n - 1) ** 2 // 4
    res = {
        "circ > (n-2.1)/2": rho_exceeds(circ_k3_balanced(n), Fraction(10 * n - 21, 20), max_order=n),
        "bullet > sqrt(floor((n-1)^2/4))": rho_squared_exceeds(bullet_k3_balanced(n), m, max_order=n),
    }
    return _verdict(n, "all strict", res, all(res.values()), True), []


def check_spectral_chain_sk(n: int, params: dict) -> tuple[dict, list[str]]:
    """rho(SK balanced) > (n-1.1)/2.  Only asserted for large n: it fails for
    every even n <= 40 and every odd n <= 33."""
    ok = rho_exceeds(sk_balanced(n), Fraction(10 * n - 11, 20), max_order=n)
    return _verdict(n, True, ok, ok, n >= 41), []


def check_color_critical(n: int, params: dict) -> tuple[dict, list[str]]:
    """Here ``n`` plays the role of r: theta(1,q,r) for every even q <= qmax."""
    qmax = params.get("qmax", 6)
    out = {}
    ok = True
    for q in range(2, qmax + 1, 2):
        h = theta_graph(ThetaPattern((1, q, n)))
        chi, crit = chromatic_number(h), is_color_critical(h)
        out[f"1,{q},{n}"] = {"chi": chi, "critical": crit}
        ok &= chi == 3 and crit
    return _verdict(n, {"chi": 3, "critical": True}, out, ok, True), []


def check_triangle_free_spectral(n: int, params: dict) -> tuple[dict, list[str]]:
    """Spectral maximiser over non-bipartite triangle-free graphs against SK;
    the statement carries no explicit threshold, so this only reports."""
    rec = triangle_constraint_search(n, 5, "rho")
    predicted = _g6set([sk_balanced(n)])
    return _verdict(n, predicted, rec.maximizers, predicted == rec.maximizers, False), rec.maximizers


def check_turan_unconstrained(n: int, params: dict) -> tuple[dict, list[str]]:
    pattern = _pattern(params, (1, 2, 2))
    rec = ex_search(SearchSpec(n, pattern, "none", "edges"))
    t = canonical_form(turan(n, 2)).decode("ascii")
    return _verdict(n, t, rec.maximizers, t in rec.maximizers, False, best_value=rec.best_value), rec.maximizers


@dataclass(frozen=True)
class Claim:
    check: Callable[[int, dict], tuple[dict, list[str]]]
    n_cap: int
    description: str
    default_range: tuple[int, int]


REGISTRY: dict[str, Claim] = {
    "ex3-triangle": Claim(check_triangle_free_max, MAX_CLAIM_N_EXHAUSTIVE, "ex_3(n,K3) = floor((n-1)^2/4)+1", (6, 9)),
    "brouwer": Claim(check_turan_minus_floor, MAX_CLAIM_N_EXHAUSTIVE, "ex_3(n,K3) = e(T_n,2) - floor(n/2) + 1", (7, 9)),
    "lemma2.2": Claim(check_odd_girth_bound, MAX_CLAIM_N_EXHAUSTIVE, "odd-girth edge bound", (5, 9)),
    "lemma2.2-extremal": Claim(check_triangle_free_extremal_set, MAX_CLAIM_N_EXHAUSTIVE, "EX_3(n,C3) = H(n)", (9, 9)),
    "ex3-theta123": Claim(check_theta123_max, MAX_CLAIM_N_EXHAUSTIVE, "ex_3(n,theta(1,2,3)) = floor((n-1)^2/4)+1 for n >= 9", (9, 9)),
    "cor1.1": Claim(check_spex_within_ex, MAX_CLAIM_N_SPEX, "SPEX_3 subset of EX_3", (7, 9)),
    "lemma3.2": Claim(check_circ_balanced_max, MAX_CLAIM_N_CONSTRUCTION, "balanced circ_k3 maximises rho", (10, 30)),
    "lemma3.3": Claim(check_vertex_deletion, 12, "rho^2(G) <= rho^2(G-u) + 2d(u)", (2, 12)),
    "constructions": Claim(check_constructions, MAX_CLAIM_N_CONSTRUCTION, "edge identities and freeness", (7, 40)),
    "spectral-chain": Claim(check_spectral_chain, MAX_CLAIM_N_CONSTRUCTION, "strict spectral lower bounds", (10, 40)),
    "spectral-chain-sk": Claim(check_spectral_chain_sk, MAX_CLAIM_N_CONSTRUCTION, "rho(SK) > (n-1.1)/2", (10, 64)),
    "color-critical": Claim(check_color_critical, 6, "theta(1,q,r), q even: chi 3, critical", (2, 6)),
    "spex3-triangle": Claim(check_triangle_free_spectral, MAX_CLAIM_N_SPEX, "SPEX_3(n,C3) = {SK bal}", (5, 9)),
    "turan-unconstrained": Claim(check_turan_unconstrained, MAX_CLAIM_N_EXHAUSTIVE, "T(n,2) in EX(n,theta)", (8, 8)),
}
for _cid in THM12_ROWS:
    REGISTRY[_cid] = Claim(
        (lambda cid: lambda n, p: _check_row(cid, n, p, False))(_cid),
        MAX_CLAIM_N_EXHAUSTIVE, "extremal row, large n only", (7, 9))
for _cid in THM13_ROWS:
    REGISTRY[_cid] = Claim(
        (lambda cid: lambda n, p: _check_row(cid, n, p, True))(_cid),
        MAX_CLAIM_N_SPEX, "extremal row, large n only", (7, 9))


def random_graphs(count: int, n_max: int, seed: int, n_min: int = 2) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        p = rng.random()
        out.append(build(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]))
    return out


def _run_one(args):
    claim_id, n, params = args
    return REGISTRY[claim_id].check(n, params)


def run_claim(claim_id: str, n_range: Optional[tuple[int, int]] = None, params: Optional[dict] = None,
              jobs: int = 1) -> ClaimReport:
    if claim_id not in REGISTRY:
        raise ClaimError(f"unknown claim {claim_id!r}; known: {', '.join(sorted(REGISTRY))}")
    claim = REGISTRY[claim_id]
    params = dict(params or {})
    lo, hi = n_range or claim.default_range
    if lo > hi:
        raise ClaimError("empty n range")
    if hi > claim.n_cap:
        raise ClaimError(f"{claim_id} is capped at n <= {claim.n_cap}")
    public = {k: v for k, v in params.items() if not k.startswith("_")}
    if claim_id == "lemma3.3":
        trials = int(params.get("trials", 1000))
        seed = int(params.get("seed", 7))
        public.update(trials=trials, seed=seed)
        grouped: dict[str, list[str]] = {}
        for g in random_graphs(trials, hi, seed, n_min=max(lo, 2)):
            grouped.setdefault(str(g.n), []).append(graph6.encode(g))
        params["_graphs"] = grouped
    ns = list(range(lo, hi + 1))
    work = [(claim_id, n, params) for n in ns]
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, work))
    else:
        results = [_run_one(w) for w in work]
    report = ClaimReport(claim_id, (lo, hi), public)
    for n, (verdict, art) in zip(ns, results):
        report.verdicts.append(verdict)
        if art:
            report.artifacts[str(n)] = list(art)
    return report


CSV_FIELDS = ["claim_id", "n", "predicted", "observed", "match", "must_hold"]


def emit(report: ClaimReport, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, default=_jsonable) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for v in report.verdicts:
            w.writerow([
                report.claim_id,
                v["n"],
                json.dumps(v["predicted"], default=_jsonable),
                json.dumps(v["observed"], default=_jsonable),
                int(v["match"]),
                int(v["must_hold"]),
            ])
        return buf.getvalue()
    raise ClaimError(f"unknown format {fmt!r}")


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, "to_dict"):
        return x.to_dict()
    raise TypeError(f"not JSON serialisable: {type(x).__name__}")
