"""Canonical labeling for small graphs.

The canonical form is the relabeling whose upper-triangle adjacency bit
string (graph6 column order) is lexicographically smallest. The search
individualizes vertices of the first non-singleton cell of an equitable
color refinement. Branches are pruned only by twin swaps: exchanging two
vertices with the same neighborhood fixes the current node of the search
tree, so those branches produce the same leaves.
"""

from __future__ import annotations

from .graph import Graph


def _refine(adj, colors):
    n = len(colors)
    ncol = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            a = adj[v]
            nb = []
            while a:
                low = a & -a
                nb.append(colors[low.bit_length() - 1])
                a ^= low
            nb.sort()
            sigs.append((colors[v], tuple(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranks[s] for s in sigs]
        if len(ranks) == ncol:
            return colors
        ncol = len(ranks)


def _leaf_key(adj, colors):
    n = len(colors)
    inv = [0] * n
    for v, c in enumerate(colors):
        inv[c] = v
    key = 0
    for j in range(1, n):
        aj = adj[inv[j]]
        for i in range(j):
            key = (key << 1) | (aj >> inv[i] & 1)
    return key


def canonical_labeling(g: Graph) -> tuple[list[int], int]:
    """Return ``(perm, key)``: ``g.relabel(perm)`` is the canonical form.

    ``key`` is the canonical adjacency bit string as an integer; together
    with the order it identifies the isomorphism class.
    """
    n = g.order
    adj = g.adj
    if n == 0:
        return [], 0
    best = None

    def search(colors):
        nonlocal best
        colors = _refine(adj, colors)
        k = max(colors) + 1
        if k == n:
            key = _leaf_key(adj, colors)
            if best is None or key < best[1]:
                best = (colors, key)
            return
        counts = [0] * k
        for c in colors:
            counts[c] += 1
        target = next(c for c in range(k) if counts[c] > 1)
        cell = [v for v in range(n) if colors[v] == target]
        tried = []
        for v in cell:
            bv = 1 << v
            if any((adj[u] & ~bv) == (adj[v] & ~(1 << u)) for u in tried):
                continue
            tried.append(v)
            nxt = [2 * c for c in colors]
            for u in cell:
                if u != v:
                    nxt[u] += 1
            search(nxt)

    search([0] * n)
    return best[0], best[1]


def canonical_key(g: Graph) -> tuple[int, int]:
    """Hashable isomorphism invariant that is also complete: (order, bits)."""
    if g._canon is None:
        g._canon = canonical_labeling(g)
    return (g.order, g._canon[1])


def canonicalize(g: Graph) -> Graph:
    if g._canon is None:
        g._canon = canonical_labeling(g)
    out = g.relabel(g._canon[0])
    out._canon = (list(range(g.order)), g._canon[1])
    return out


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.order == h.order and g.size == h.size and canonical_key(g) == canonical_key(h)
