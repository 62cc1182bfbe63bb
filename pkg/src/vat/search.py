"""Backtracking embeddings: subgraph containment, injective-hom counting, homomorphisms."""

from __future__ import annotations

from dataclasses import dataclass

from .budget import ensure
from .graph import Graph


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern vertex i -> host vertex ``map[i]``."""

    map: tuple[int, ...]

    def is_valid(self, pattern: Graph, host: Graph) -> bool:
        m = self.map
        if len(m) != pattern.order or len(set(m)) != len(m):
            return False
        if any(not 0 <= x < host.order for x in m):
            return False
        return all(host.has_edge(m[u], m[v]) for u, v in pattern.edges)

    def image_edges(self, pattern: Graph) -> list[tuple[int, int]]:
        m = self.map
        return [(min(m[u], m[v]), max(m[u], m[v])) for u, v in pattern.edge_list()]


def search_order(pattern: Graph) -> list[int]:
    """Greedy order: each next vertex has the most already-placed neighbors.

    Ties go to higher degree, then lower label.
    """
    n = pattern.order
    deg = pattern.degrees()
    placed = 0
    order = []
    conn = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if not placed >> u & 1), key=lambda u: (conn[u], deg[u], -u))
        order.append(v)
        placed |= 1 << v
        a = pattern.adj[v]
        while a:
            low = a & -a
            conn[low.bit_length() - 1] += 1
            a ^= low
    return order


def _plan(pattern: Graph):
    order = search_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    # back[i]: positions of earlier-placed neighbors of order[i]
    back = [[pos[u] for u in pattern.neighbors(v) if pos[u] < i] for i, v in enumerate(order)]
    return order, back


def _injective_search(pattern: Graph, host: Graph, budget, count_all: bool):
    k = pattern.order
    n = host.order
    if k > n:
        return 0, None
    if k == 0:
        return 1, ()
    order, back = _plan(pattern)
    pdeg = [pattern.degree(v) for v in order]
    hdeg = host.degrees()
    hadj = host.adj
    full = (1 << n) - 1
    deg_ok = [0] * k
    for i in range(k):
        m = 0
        for x in range(n):
            if hdeg[x] >= pdeg[i]:
                m |= 1 << x
        deg_ok[i] = m
    img = [0] * k
    total = 0
    found = None
    tick = budget.tick

    def rec(i, used):
        nonlocal total, found
        tick()
        cand = deg_ok[i] & ~used & full
        for j in back[i]:
            cand &= hadj[img[j]]
        if i == k - 1:
            if cand:
                if count_all:
                    total += cand.bit_count()
                else:
                    img[i] = (cand & -cand).bit_length() - 1
                    found = tuple(img)
                    return True
            return False
        while cand:
            low = cand & -cand
            img[i] = low.bit_length() - 1
            if rec(i + 1, used | low):
                return True
            cand ^= low
        return False

    rec(0, 0)
    if count_all:
        return total, None
    if found is None:
        return 0, None
    emb = [0] * k
    for i, v in enumerate(order):
        emb[v] = found[i]
    return 1, tuple(emb)


def contains_subgraph(host: Graph, pattern: Graph, budget=None) -> Embedding | None:
    """Embedding of ``pattern`` as a (not necessarily induced) subgraph of ``host``."""
    _, emb = _injective_search(pattern, host, ensure(budget), count_all=False)
    return None if emb is None else Embedding(emb)


def count_injective_homs(pattern: Graph, host: Graph, budget=None) -> int:
    total, _ = _injective_search(pattern, host, ensure(budget), count_all=True)
    return total


def find_homomorphism(f: Graph, b: Graph, budget=None) -> tuple[int, ...] | None:
    """Edge-preserving map V(f) -> V(b), or None if none exists."""
    budget = ensure(budget)
    k = f.order
    if k == 0:
        return ()
    if b.order == 0:
        return None
    order, back = _plan(f)
    badj = b.adj
    full = (1 << b.order) - 1
    img = [0] * k
    tick = budget.tick

    def rec(i):
        tick()
        if i == k:
            return True
        cand = full
        for j in back[i]:
            cand &= badj[img[j]]
        while cand:
            low = cand & -cand
            img[i] = low.bit_length() - 1
            if rec(i + 1):
                return True
            cand ^= low
        return False

    if not rec(0):
        return None
    phi = [0] * k
    for i, v in enumerate(order):
        phi[v] = img[i]
    return tuple(phi)


def iter_embeddings(pattern: Graph, host: Graph, budget=None):
    """Yield every injective homomorphism pattern -> host as a tuple."""
    budget = ensure(budget)
    k = pattern.order
    if k > host.order:
        return
    if k == 0:
        yield ()
        return
    order, back = _plan(pattern)
    hadj = host.adj
    full = (1 << host.order) - 1
    img = [0] * k
    tick = budget.tick

    def rec(i, used):
        tick()
        if i == k:
            emb = [0] * k
            for t, v in enumerate(order):
                emb[v] = img[t]
            yield tuple(emb)
            return
        cand = full & ~used
        for j in back[i]:
            cand &= hadj[img[j]]
        while cand:
            low = cand & -cand
            img[i] = low.bit_length() - 1
            yield from rec(i + 1, used | low)
            cand ^= low

    yield from rec(0, 0)


def copies_as_edge_sets(pattern: Graph, host: Graph, budget=None) -> list[frozenset]:
    """Distinct copies of ``pattern`` in ``host``, each as a set of host edges."""
    seen = set()
    out = []
    pe = pattern.edge_list()
    for emb in iter_embeddings(pattern, host, budget):
        es = frozenset((min(emb[u], emb[v]), max(emb[u], emb[v])) for u, v in pe)
        if es not in seen:
            seen.add(es)
            out.append(es)
    return out
