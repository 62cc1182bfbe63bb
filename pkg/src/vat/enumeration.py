"""Isomorph-free generation of small graphs and brute-force Turán-type maxima."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from .canon import canonical_key, canonicalize
from .counting import count_copies
from .errors import BudgetExceeded
from .graph import Graph
from .graph6 import encode_str
from .search import contains_subgraph

DEFAULT_MAX_N = 8
HARD_MAX_N = 10

_LEVEL_CACHE: dict = {}


def _augment(parents, n, keep):
    """Children on n vertices of each parent (order n-1), deduplicated by canonical key."""
    seen = {}
    for p in parents:
        adj = list(p.adj)
        for nb in range(1 << (n - 1)):
            child_adj = [a | ((nb >> v & 1) << (n - 1)) for v, a in enumerate(adj)]
            child_adj.append(nb)
            child = Graph.from_adjacency(child_adj)
            key = canonical_key(child)
            if key in seen:
                continue
            if keep is not None and not keep(child):
                seen[key] = None
                continue
            seen[key] = canonicalize(child)
    return [g for _, g in sorted(seen.items()) if g is not None]


def graphs_of_order(n: int, keep=None, cache_key=None, max_n: int = DEFAULT_MAX_N) -> list[Graph]:
    """One canonical representative per isomorphism class on n vertices.

    ``keep`` must be hereditary (closed under vertex deletion): children of
    rejected graphs are never built, which changes nothing in the output
    because every kept graph has a kept one-vertex-smaller subgraph.
    Results are memoized under ``cache_key`` (``None`` disables memoization
    when ``keep`` is given).
    """
    if n > min(max_n, HARD_MAX_N):
        raise BudgetExceeded(f"enumeration limited to n <= {min(max_n, HARD_MAX_N)}, got {n}")
    if n < 0:
        raise ValueError("n must be >= 0")
    memo = cache_key if keep is not None else "all"
    if memo is not None and (memo, n) in _LEVEL_CACHE:
        return _LEVEL_CACHE[memo, n]
    if n == 0:
        out = [Graph(0)]
        if keep is not None and not keep(out[0]):
            out = []
    else:
        parents = graphs_of_order(n - 1, keep, cache_key, max_n)
        out = _augment(parents, n, keep)
    if memo is not None:
        _LEVEL_CACHE[memo, n] = out
    return out


def enumerate_graphs(n: int, max_n: int = DEFAULT_MAX_N):
    yield from graphs_of_order(n, max_n=max_n)


# -- Turán-type functions and constraints ------------------------------------


@dataclass(frozen=True)
class TuranFunction:
    name: str
    evaluate: Callable[[Graph], int]

    def __call__(self, g: Graph) -> int:
        return self.evaluate(g)


def edge_count() -> TuranFunction:
    return TuranFunction("edges", lambda g: g.size)


def copy_count(h: Graph) -> TuranFunction:
    return TuranFunction(f"count:{encode_str(h)}", lambda g: count_copies(h, g))


@dataclass
class ClassConstraint:
    """A graph qualifies iff it avoids ``forbidden``, passes ``membership`` and is not discarded.

    ``membership`` may return None for "unknown" (budget); such graphs are
    skipped and flagged. Set ``membership_monotone`` when the predicate is
    closed under taking subgraphs so generation can prune on it.
    """

    forbidden: list = field(default_factory=list)
    membership: Optional[Callable[[Graph], Optional[bool]]] = None
    discard: Optional[Callable[[Graph], bool]] = None
    membership_monotone: bool = False
    name: str = ""

    def forbids(self, g: Graph) -> bool:
        return any(f.order <= g.order and contains_subgraph(g, f) is not None for f in self.forbidden)


@dataclass
class ExtremalResult:
    n: int
    value: Optional[int]
    witnesses: list[str]
    graphs_scanned: int
    budget_hit: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_dict(cls, d) -> ExtremalResult:
        return cls(d["n"], d["value"], list(d["witnesses"]), d["graphs_scanned"], d["budget_hit"])


def _forbidden_tag(constraint):
    return "forbid:" + ",".join(sorted(encode_str(canonicalize(f)) for f in constraint.forbidden))


def qualifying_graphs(n: int, constraint: ClassConstraint, max_n: int = DEFAULT_MAX_N):
    """Yield ``(graph, status)`` with status True/None for qualifying/unknown graphs.

    Subgraph-closed parts of the constraint (forbidden patterns, monotone
    membership) prune generation; the rest filters the final level.
    """
    hereditary = []
    tags = []
    memoize = True
    if constraint.forbidden:
        hereditary.append(lambda g: not constraint.forbids(g))
        tags.append(_forbidden_tag(constraint))
    if constraint.membership is not None and constraint.membership_monotone:
        # unknown (None) is kept: only definite non-members are pruned
        hereditary.append(lambda g: constraint.membership(g) is not False)
        # an anonymous predicate has no stable identity to memoize under
        memoize = bool(constraint.name)
        tags.append("member:" + constraint.name)
    if hereditary:
        keep = lambda g: all(h(g) for h in hereditary)  # noqa: E731
        pool = graphs_of_order(n, keep, cache_key="|".join(tags) if memoize else None, max_n=max_n)
    else:
        pool = graphs_of_order(n, max_n=max_n)
    for g in pool:
        if constraint.discard is not None and constraint.discard(g):
            continue
        status = True
        if constraint.membership is not None:
            status = constraint.membership(g)
            if status is False:
                continue
        yield g, status


def extremal_value(n: int, h: TuranFunction, constraint: ClassConstraint | None = None,
                   max_n: int = DEFAULT_MAX_N) -> ExtremalResult:
    """max h(G) over qualifying n-vertex graphs with all maximizers (canonical graph6)."""
    constraint = constraint or ClassConstraint()
    best = None
    witnesses = []
    scanned = 0
    budget_hit = False
    for g, status in qualifying_graphs(n, constraint, max_n):
        scanned += 1
        if status is None:
            budget_hit = True
            continue
        val = h(g)
        if best is None or val > best:
            best, witnesses = val, [g]
        elif val == best:
            witnesses.append(g)
    return ExtremalResult(
        n=n,
        value=best,
        witnesses=sorted(encode_str(canonicalize(w)) for w in witnesses),
        graphs_scanned=scanned,
        budget_hit=budget_hit,
    )
