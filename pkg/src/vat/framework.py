"""Decompositions, generator families, partitions and bounded-window evidence.

Asymptotic statements ("for all sufficiently large n") are checked on an
explicit window of orders; reports say supported / refuted /
inconclusive-budget and never claim more than the window shows.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .budget import Budget
from .canon import canonical_key, canonicalize
from .enumeration import ClassConstraint, TuranFunction, extremal_value, graphs_of_order
from .errors import BudgetExceeded
from .graph import Graph, balanced_blowup, complete_bipartite, odd_cycle_blowup
from .graph6 import encode_str
from .parameters import gamma, hom_exists, is_bipartite, is_k_colorable, p_value
from .rainbow import DEFAULT_EDGE_BUDGET, admits_coloring_without_rainbow
from .search import contains_subgraph

INF = math.inf


def _g6(g: Graph) -> str:
    return encode_str(canonicalize(g))


def _level_json(k):
    return "inf" if k == INF else k


# -- generator families and decompositions ----------------------------------------


@dataclass(frozen=True)
class GeneratorFamily:
    """G_n(i) for the (n, i) pairs where ``available(n, i)`` holds."""

    name: str
    generate: Callable[[int, int], Graph]
    available: Callable[[int, int], bool]
    levels: Callable[[int], list]  # available levels at order n, ascending

    def __call__(self, n: int, i: int) -> Graph:
        return self.generate(n, i)


@dataclass(frozen=True)
class Decomposition:
    name: str
    discard: Callable[[Graph], bool]
    level_of: Callable[[Graph], int]
    generators: Optional[GeneratorFamily] = None

    def level(self, g: Graph) -> Optional[int]:
        """Level of ``g``, or None if ``g`` is discarded."""
        if self.discard(g):
            return None
        return self.level_of(g)


class BlowupDecomposition(Decomposition):
    """Levels from a finite list of base graphs: the least level whose base admits a homomorphism."""

    def __init__(self, name: str, bases: dict):
        self_bases = dict(sorted(bases.items()))

        def level_of(g):
            for i, b in self_bases.items():
                if hom_exists(g, b) is not None:
                    return i
            return None

        gens = GeneratorFamily(
            name=f"{name}-balanced",
            generate=lambda n, i: balanced_blowup(self_bases[i], n).graph(),
            available=lambda n, i: i in self_bases and n >= self_bases[i].order,
            levels=lambda n: [i for i, b in self_bases.items() if n >= b.order],
        )
        super().__init__(name, lambda g: level_of(g) is None, level_of, gens)
        object.__setattr__(self, "bases", self_bases)


def _b1() -> Decomposition:
    gens = GeneratorFamily(
        name="K_{i,n-i}",
        generate=lambda n, i: complete_bipartite(i, n - i),
        available=lambda n, i: 1 <= i and 2 * i <= n,
        levels=lambda n: list(range(1, n // 2 + 1)),
    )
    return Decomposition("b1", lambda g: not is_bipartite(g), p_value, gens)


def is_three_chromatic(g: Graph) -> bool:
    return not is_k_colorable(g, 2) and is_k_colorable(g, 3)


def b2_level(gamma_value: int) -> int:
    """The one place where gamma is translated into a b2 level."""
    return -(gamma_value - 1)


def _b2() -> Decomposition:
    gens = GeneratorFamily(
        name="C_{2j+1}<n>",
        generate=lambda n, i: odd_cycle_blowup(-i, n),
        available=lambda n, i: i <= -1 and n >= 2 * (-i) + 1,
        levels=lambda n: list(range(-((n - 1) // 2), 0)),
    )
    return Decomposition(
        "b2",
        lambda g: not is_three_chromatic(g),
        lambda g: b2_level(gamma(g, max_order=max(g.order, 10))),
        gens,
    )


B1 = _b1()
B2 = _b2()


def builtin_decompositions() -> dict[str, Decomposition]:
    return {"b1": B1, "b2": B2}


# -- partitions ---------------------------------------------------------------------

_MEMO: dict = {}
_MEMO_LOCK = threading.Lock()


@dataclass(frozen=True)
class Partition:
    """Membership in the allowed family; True / False, or None when undecided within budget."""

    name: str
    predicate: Callable[[Graph], bool]
    monotone_claimed: bool = True

    def allowed(self, g: Graph) -> Optional[bool]:
        key = (self.name, canonical_key(g))
        with _MEMO_LOCK:
            if key in _MEMO:
                return _MEMO[key]
        try:
            val = bool(self.predicate(g))
        except BudgetExceeded:
            val = None
        with _MEMO_LOCK:
            return _MEMO.setdefault(key, val)

    def __call__(self, g: Graph) -> Optional[bool]:
        return self.allowed(g)


def clear_membership_cache():
    with _MEMO_LOCK:
        _MEMO.clear()


def forbid_partition(f: Graph) -> Partition:
    return Partition(f"forbid:{_g6(f)}", lambda g: contains_subgraph(g, f) is None)


def rainbow_partition(f: Graph, edge_budget: int = DEFAULT_EDGE_BUDGET) -> Partition:
    def pred(g):
        return admits_coloring_without_rainbow(g, f, edge_budget=edge_budget) is not None

    return Partition(f"rainbow:{_g6(f)}:e{edge_budget}", pred)


ALL = Partition("all", lambda g: True)


def builtin_partitions(f: Graph, edge_budget: int = DEFAULT_EDGE_BUDGET) -> dict[str, Partition]:
    return {"forbid": forbid_partition(f), "rainbow": rainbow_partition(f, edge_budget), "all": ALL}


# -- reports ------------------------------------------------------------------------


@dataclass
class Check:
    condition: str
    tested: int = 0
    passed: bool = True
    counterexample: Optional[str] = None
    unknown: int = 0
    detail: list = field(default_factory=list)


@dataclass
class EvidenceReport:
    partition: str
    decomposition: str
    k: object
    window: list
    checks: list
    verdict: str
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["k"] = _level_json(self.k)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _verdict(checks) -> str:
    if any(not c.passed for c in checks):
        return "refuted"
    if any(c.unknown for c in checks) or any(c.tested == 0 for c in checks):
        return "inconclusive-budget"
    return "supported"


def lemma_containment_check(gf: GeneratorFamily, levels, orders, host_orders=None,
                            pair_node_budget: int = 200_000) -> dict:
    """Check that G_n(k) contains G_m(i) for levels i <= k once n is large.

    ``m`` ranges over ``orders`` and ``n`` over ``host_orders`` (default:
    ``orders``), testing every pair with m <= n. For each (i, k, m) the
    threshold is the least tested n from which containment holds at every
    larger tested n. A triple passes when containment holds at the largest
    available n, fails when it definitely does not, and is untested when
    that search exceeds ``pair_node_budget`` nodes.
    """
    levels = sorted(levels)
    orders = sorted(orders)
    host_orders = orders if host_orders is None else sorted(host_orders)
    rows = []
    summary = []
    for a, i in enumerate(levels):
        for k in levels[a:]:
            for m in orders:
                if not gf.available(m, i):
                    continue
                small = gf(m, i)
                hosts = [n for n in host_orders if n >= m and gf.available(n, k)]
                results = []
                for n in hosts:
                    try:
                        ok = contains_subgraph(gf(n, k), small, Budget(pair_node_budget)) is not None
                    except BudgetExceeded:
                        ok = None
                    results.append((n, ok))
                    rows.append({"i": i, "k": k, "m": m, "n": n, "contained": ok})
                if not results:
                    continue
                threshold = None
                for n, ok in reversed(results):
                    if ok is not True:
                        break
                    threshold = n
                top_n, top = results[-1]
                status = "pass" if top else ("untested" if top is None else "fail")
                entry = {"i": i, "k": k, "m": m, "threshold": threshold, "status": status}
                if status == "fail":
                    entry["counterexample"] = [_g6(gf(top_n, k)), _g6(small)]
                summary.append(entry)
    statuses = [e["status"] for e in summary]
    return {
        "generators": gf.name,
        "passed": bool(summary) and all(st == "pass" for st in statuses),
        "failed": statuses.count("fail"),
        "untested": statuses.count("untested"),
        "pairs": rows,
        "summary": summary,
    }


def _generators_in_window(gf, window, below=None):
    lo, hi = window
    for n in range(lo, hi + 1):
        for i in gf.levels(n):
            if below is None or i < below:
                yield n, i


def very_abstract_evidence(p: Partition, d: Decomposition, k, window, gf: GeneratorFamily | None = None,
                           sample_order: int = 5) -> EvidenceReport:
    """Windowed evidence that the very abstract chromatic number of ``p`` is ``k``."""
    gf = gf or d.generators
    lo, hi = window
    checks = []

    gen = Check("generators below k are allowed" if k != INF else "all generators are allowed")
    for n, i in _generators_in_window(gf, window, None if k == INF else k):
        status = p.allowed(gf(n, i))
        gen.tested += 1
        if status is None:
            gen.unknown += 1
        elif not status:
            gen.passed = False
            gen.counterexample = gen.counterexample or _g6(gf(n, i))
    checks.append(gen)

    if k != INF:
        exc = Check("some G_m(k) in the window is not allowed")
        found = None
        for m in range(lo, hi + 1):
            if not gf.available(m, k):
                continue
            status = p.allowed(gf(m, k))
            exc.tested += 1
            if status is None:
                exc.unknown += 1
            elif not status:
                found = m
                break
        if found is not None:
            exc.unknown = 0
            exc.counterexample = _g6(gf(found, k))
            exc.detail.append({"m": found})
        elif exc.unknown == 0:
            exc.passed = False
        checks.append(exc)

        mono = Check(f"allowed family is subgraph-closed on orders <= {sample_order}")
        for n in range(1, sample_order + 1):
            for g in graphs_of_order(n):
                if p.allowed(g) is not True:
                    continue
                subs = [g.remove_edge(u, v) for u, v in g.edge_list()] + [g.remove_vertex(v) for v in range(n)]
                for s in subs:
                    mono.tested += 1
                    status = p.allowed(s)
                    if status is None:
                        mono.unknown += 1
                    elif not status:
                        mono.passed = False
                        mono.counterexample = mono.counterexample or _g6(g)
        checks.append(mono)

    return EvidenceReport(
        partition=p.name,
        decomposition=d.name,
        k=k,
        window=[lo, hi],
        checks=[asdict(c) for c in checks],
        verdict=_verdict(checks),
    )


def infer_very_abstract_number(p: Partition, d: Decomposition, window, gf: GeneratorFamily | None = None):
    """Least level with an excluded generator in the window, or INF if every generator is allowed.

    Returns None when membership of a deciding generator is unknown.
    """
    gf = gf or d.generators
    lo, hi = window
    levels = sorted({i for n in range(lo, hi + 1) for i in gf.levels(n)})
    for i in levels:
        for m in range(lo, hi + 1):
            if gf.available(m, i):
                status = p.allowed(gf(m, i))
                if status is None:
                    return None
                if not status:
                    return i
    return INF


def _ratio(a, b):
    if a is None or not b:
        return None
    return float(Fraction(a, b))


def niceness_check(d: Decomposition, h: TuranFunction, k: int, window, mode: str = "exact",
                   gf: GeneratorFamily | None = None, max_f_order: int = 5, patterns=None) -> dict:
    """Compare g_B(n, F) with h(G_n(k-1)) for small members F of level k.

    ``mode`` is "exact" (assert equality) or "ratio" (record g / h only).
    """
    if mode not in ("exact", "ratio"):
        raise ValueError(f"mode must be exact or ratio, got {mode!r}")
    gf = gf or d.generators
    lo, hi = window
    if patterns is None:
        patterns = [g for n in range(1, max_f_order + 1) for g in graphs_of_order(n)
                    if d.level(g) == k]
    rows = []
    passed = True
    degenerate = False
    budget_hit = False
    for f in patterns:
        for n in range(lo, hi + 1):
            res = extremal_value(n, h, ClassConstraint(forbidden=[f], discard=d.discard))
            budget_hit |= res.budget_hit
            row = {"F": _g6(f), "n": n, "g": res.value, "witnesses": res.witnesses}
            if not gf.available(n, k - 1):
                row.update(target=None, status="degenerate")
                degenerate = True
            else:
                target = h(gf(n, k - 1))
                row.update(target=target, ratio=_ratio(res.value, target))
                if mode == "exact":
                    ok = res.value == target
                    row["status"] = "pass" if ok else "fail"
                    passed &= ok
                else:
                    row["status"] = "recorded"
            rows.append(row)
    return {
        "decomposition": d.name,
        "h": h.name,
        "k": k,
        "window": [lo, hi],
        "mode": mode,
        "patterns": len(patterns),
        "rows": rows,
        "passed": passed and bool(rows) and not degenerate,
        "degenerate": degenerate,
        "budget_hit": budget_hit,
    }


def transfer_check(p: Partition, d: Decomposition, h: TuranFunction, window, k=None,
                   gf: GeneratorFamily | None = None, exclude_discarded: bool = False,
                   evidence_window=None) -> dict:
    """Lower-bound step of the transfer theorem on a window: g(n, (A, F)) >= h(G_n(k-1)).

    ``k`` is inferred from generator membership when not given.
    """
    gf = gf or d.generators
    lo, hi = window
    out = {"partition": p.name, "decomposition": d.name, "h": h.name, "window": [lo, hi]}
    if k is None:
        k = infer_very_abstract_number(p, d, evidence_window or window, gf)
        if k is None:
            out.update(k=None, status="inconclusive-budget", rows=[], passed=False)
            return out
    out["k"] = _level_json(k)
    if k == INF:
        out.update(status="skipped", rows=[], passed=True,
                   note="very abstract chromatic number is infinite; nothing to transfer")
        return out
    rows = []
    passed = True
    for n in range(lo, hi + 1):
        row = {"n": n}
        if not gf.available(n, k - 1):
            row["status"] = "generator-unavailable"
            rows.append(row)
            continue
        gen = gf(n, k - 1)
        gen_allowed = p.allowed(gen)
        target = h(gen)
        res = extremal_value(n, h, ClassConstraint(
            membership=p.allowed,
            membership_monotone=p.monotone_claimed,
            discard=d.discard if exclude_discarded else None,
            name=p.name,
        ))
        ok = gen_allowed is True and res.value is not None and res.value >= target
        passed &= ok
        row.update(
            generator=_g6(gen),
            generator_allowed=gen_allowed,
            h_generator=target,
            g=res.value,
            ratio=_ratio(res.value, target),
            witnesses=res.witnesses,
            graphs_scanned=res.graphs_scanned,
            budget_hit=res.budget_hit,
            lower_bound="pass" if ok else "fail",
        )
        rows.append(row)
    out.update(status="checked", rows=rows, passed=passed and bool(rows))
    return out
