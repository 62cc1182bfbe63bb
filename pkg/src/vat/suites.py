"""Desk-scale acceptance suites behind ``vat verify``.

Each suite returns a JSON-ready dict: ``{"suite", "passed", "budget_hit",
"assertions": [{"name", "passed", "detail"}, ...]}``. Nothing
time-dependent goes into the result so repeated runs compare byte for byte.
"""

from __future__ import annotations

import itertools
import json
from math import comb

from .canon import canonicalize
from .config import Config
from .counting import closed_form_kab, closed_form_odd_cycle_blowup, count_copies
from .enumeration import ClassConstraint, copy_count, edge_count, extremal_value, graphs_of_order
from .errors import BudgetExceeded
from .framework import B1, B2, b2_level, rainbow_partition, transfer_check, very_abstract_evidence
from .graph import (
    blowup,
    complete,
    complete_bipartite,
    cycle,
    odd_cycle_blowup,
    star,
    turan,
)
from .graph6 import decode, encode, encode_str
from .parameters import gamma, hom_exists, p_value
from .rainbow import (
    admits_coloring_without_rainbow,
    find_rainbow_copy,
    greedy_rainbow_embed_bipartite,
    greedy_rainbow_embed_cycle_blowup,
    random_proper_coloring,
    verify_rainbow_copy,
)
from .search import contains_subgraph


def _g6(g):
    return encode_str(canonicalize(g))


class _Suite:
    def __init__(self, name):
        self.name = name
        self.assertions = []
        self.budget_hit = False

    def check(self, name, ok, **detail):
        self.assertions.append({"name": name, "passed": bool(ok), "detail": detail})
        return ok

    def result(self):
        return {
            "suite": self.name,
            "passed": all(a["passed"] for a in self.assertions) and bool(self.assertions),
            "budget_hit": self.budget_hit,
            "assertions": self.assertions,
        }


def suite_counting(cfg: Config):
    s = _Suite("counting")
    for a, b in itertools.product(range(1, 4), repeat=2):
        bad = []
        cases = 0
        for sz, t in itertools.product(range(6), repeat=2):
            cases += 1
            brute = count_copies(complete_bipartite(a, b), complete_bipartite(sz, t))
            if brute != closed_form_kab(a, b, sz, t):
                bad.append([sz, t, brute])
        s.check(f"closed_form_kab a={a} b={b} vs brute force, s,t<=5", not bad, cases=cases, mismatches=bad)
    return s.result()


def suite_homomorphism(cfg: Config):
    s = _Suite("homomorphism")
    bases = {"K2": complete(2), "K3": complete(3), "C5": cycle(5), "C7": cycle(7)}
    for name, b in bases.items():
        bad = []
        tested = 0
        for n in range(1, 6):
            for f in graphs_of_order(n):
                tested += 1
                via_hom = hom_exists(f, b) is not None
                via_blowup = contains_subgraph(blowup(b, [f.order] * b.order), f) is not None
                if via_hom != via_blowup:
                    bad.append(encode_str(f))
        s.check(f"hom(F,{name}) iff F in blowup({name}), order<=5", not bad, tested=tested, mismatches=bad)
    return s.result()


def suite_turan(cfg: Config):
    s = _Suite("turan")
    for n in range(3, 8):
        res = extremal_value(n, edge_count(), ClassConstraint(forbidden=[complete(3)]), max_n=cfg.max_n)
        s.budget_hit |= res.budget_hit
        s.check(f"ex(n={n}, K3) = floor(n^2/4) with witness T(n,2)",
                res.value == n * n // 4 and _g6(turan(n, 2)) in res.witnesses,
                value=res.value, expected=n * n // 4, witnesses=res.witnesses)
    for n in range(4, 8):
        res = extremal_value(n, edge_count(), ClassConstraint(forbidden=[complete(4)]), max_n=cfg.max_n)
        want = turan(n, 3).size
        s.check(f"ex(n={n}, K4) = e(T(n,3))", res.value == want and _g6(turan(n, 3)) in res.witnesses,
                value=res.value, expected=want)
    return s.result()


def suite_pentagon_count(cfg: Config):
    s = _Suite("erdos-pentagon")
    res = extremal_value(5, copy_count(cycle(5)), ClassConstraint(forbidden=[complete(3)]), max_n=cfg.max_n)
    s.check("ex(5, C5, K3) = 1 with witness C5", res.value == 1 and res.witnesses == [_g6(cycle(5))],
            value=res.value, witnesses=res.witnesses)
    for k in (1, 2):
        bad = []
        tested = 0
        base = cycle(2 * k + 1)
        for sizes in itertools.product(range(4), repeat=2 * k + 1):
            tested += 1
            brute = count_copies(base, blowup(base, sizes))
            if brute != closed_form_odd_cycle_blowup(k, sizes):
                bad.append([list(sizes), brute])
        s.check(f"N(C{2 * k + 1}, blowup) = product of parts, parts<=3", not bad, tested=tested, mismatches=bad)
    return s.result()


def suite_star_count_c4_free(cfg: Config):
    s = _Suite("gerbner-patkos")
    for n in range(5, min(8, cfg.max_n) + 1):
        res = extremal_value(n, copy_count(star(3)), ClassConstraint(forbidden=[cycle(4)]), max_n=cfg.max_n)
        s.budget_hit |= res.budget_hit
        target = comb(n - 1, 3)
        s.check(f"ex(n={n}, K13, C4) >= C(n-1,3)", res.value is not None and res.value >= target,
                value=res.value, lower_bound=target,
                ratio=None if not target else res.value / target, witnesses=res.witnesses)
    return s.result()


def rainbow_threshold_m(cfg: Config, limit: int = 11):
    """Least m such that every proper coloring of K_{2,m} has a rainbow C4, with the K_{2,m-1} witness."""
    witness = None
    for m in range(1, limit + 1):
        col = admits_coloring_without_rainbow(complete_bipartite(2, m), cycle(4), edge_budget=cfg.edge_budget)
        if col is None:
            return m, witness
        witness = col
    return None, witness


def suite_rainbow_threshold(cfg: Config):
    s = _Suite("rainbow-threshold")
    p = rainbow_partition(complete(3), cfg.edge_budget)
    s.check("K4 not in rainbow(K3)", p.allowed(complete(4)) is False)
    tri_free = [g for n in range(1, 6) for g in graphs_of_order(n) if contains_subgraph(g, complete(3)) is None]
    bad = [encode_str(g) for g in tri_free if p.allowed(g) is not True]
    s.check("every triangle-free graph of order <= 5 is in rainbow(K3)", not bad, tested=len(tri_free),
            failures=bad)
    try:
        m, witness = rainbow_threshold_m(cfg)
    except BudgetExceeded:
        s.budget_hit = True
        s.check("threshold search finished", False)
        return s.result()
    s.check("least m with a rainbow C4 in every coloring of K_{2,m} is <= 11", m is not None and m <= 11, m=m)
    ok = witness is not None and witness.is_proper() and find_rainbow_copy(witness, cycle(4)) is None
    s.check("K_{2,m-1} has a proper coloring with no rainbow C4", ok,
            coloring=None if witness is None else witness.to_dict())
    return s.result()


def suite_embedders(cfg: Config):
    s = _Suite("embedders")
    host = complete_bipartite(2, 9)
    fails = []
    for i in range(500):
        col = random_proper_coloring(host, cfg.seed + i)
        rc = greedy_rainbow_embed_bipartite(col, cycle(4))
        if rc is None or not col.is_proper() or not verify_rainbow_copy(col, rc):
            fails.append(cfg.seed + i)
    s.check("bipartite embedder: rainbow C4 in 500 colorings of K_{2,9}", not fails, failed_seeds=fails)
    host = odd_cycle_blowup(1, 81)
    fails = []
    for i in range(100):
        col = random_proper_coloring(host, cfg.seed + i)
        rc = greedy_rainbow_embed_cycle_blowup(col, 3)
        if rc is None or not col.is_proper() or not verify_rainbow_copy(col, rc):
            fails.append(cfg.seed + i)
    s.check("blowup embedder: rainbow C3<3> in 100 colorings of C3<81>", not fails, failed_seeds=fails)
    return s.result()


def suite_evidence(cfg: Config):
    s = _Suite("evidence")
    m, _ = rainbow_threshold_m(cfg)
    p4 = rainbow_partition(cycle(4), cfg.edge_budget)
    k1 = p_value(cycle(4))
    rep = very_abstract_evidence(p4, B1, k1, (3, 9))
    s.budget_hit |= rep.verdict == "inconclusive-budget"
    s.check("rainbow(C4) on b1: k = p(C4) = 2 supported", rep.verdict == "supported" and k1 == 2,
            report=rep.to_dict())
    exc = rep.checks[1]["counterexample"]
    s.check("exclusion witness is K_{2,m} from the threshold search",
            m is not None and exc == _g6(complete_bipartite(2, m)), witness=exc, m=m)
    p3 = rainbow_partition(complete(3), cfg.edge_budget)
    k2 = b2_level(gamma(complete(3)))
    rep = very_abstract_evidence(p3, B2, k2, (3, 9))
    s.budget_hit |= rep.verdict == "inconclusive-budget"
    s.check("rainbow(K3) on b2: level -(gamma(K3)-1) = -1 supported",
            rep.verdict == "supported" and k2 == -1, report=rep.to_dict())
    return s.result()


def suite_transfer(cfg: Config):
    s = _Suite("transfer")
    p4 = rainbow_partition(cycle(4), cfg.edge_budget)
    rep = transfer_check(p4, B1, copy_count(star(3)), (5, min(7, cfg.max_n)), k=p_value(cycle(4)))
    for row in rep["rows"]:
        n = row["n"]
        s.budget_hit |= bool(row.get("budget_hit"))
        s.check(f"n={n}: K_(1,{n - 1}) allowed and g >= C({n - 1},3)",
                row.get("lower_bound") == "pass" and row.get("h_generator") == comb(n - 1, 3),
                g=row.get("g"), lower_bound=row.get("h_generator"), ratio=row.get("ratio"),
                witnesses=row.get("witnesses"))
    return s.result()


def suite_formats(cfg: Config):
    s = _Suite("formats")
    bad = []
    tested = 0
    for n in range(0, 7):
        for g in graphs_of_order(n):
            for perm in (list(range(n)), list(reversed(range(n)))):
                h = g.relabel(perm)
                tested += 1
                if decode(encode(h)) != h:
                    bad.append(encode_str(h))
    s.check("graph6 round trip, all graphs of order <= 6", not bad, tested=tested, failures=bad)
    s.check("encode(K1) = '@'", encode(complete(1)) == b"@")
    s.check("encode of empty 5-vertex graph = 'D??'", encode(graphs_of_order(5)[0]) == b"D??")
    for name in ("counting", "erdos-pentagon", "rainbow-threshold"):
        a = json.dumps(SUITES[name](cfg), sort_keys=True)
        b = json.dumps(SUITES[name](cfg), sort_keys=True)
        s.check(f"suite {name} repeats byte-identically", a == b)
    return s.result()


SUITES = {
    "counting": suite_counting,
    "homomorphism": suite_homomorphism,
    "turan": suite_turan,
    "gerbner-patkos": suite_star_count_c4_free,
    "erdos-pentagon": suite_pentagon_count,
    "rainbow-threshold": suite_rainbow_threshold,
    "embedders": suite_embedders,
    "evidence": suite_evidence,
    "transfer": suite_transfer,
    "formats": suite_formats,
}


def run_suite(name: str, cfg: Config | None = None) -> list[dict]:
    cfg = cfg or Config()
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return [SUITES[n](cfg) for n in names]
