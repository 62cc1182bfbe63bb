"""Proper edge colorings, rainbow copies and the two greedy rainbow embedders."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .budget import ensure
from .errors import BudgetExceeded, DomainError, ParameterError
from .graph import Graph, balanced_blowup, cycle
from .graph6 import decode, encode_str
from .parameters import bipartition, p_value
from .search import Embedding, copies_as_edge_sets, search_order

DEFAULT_EDGE_BUDGET = 24


@dataclass(frozen=True)
class EdgeColoring:
    """``colors[i]`` is the color of ``graph.edge_list()[i]``."""

    graph: Graph
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if len(self.colors) != self.graph.size:
            raise ParameterError(f"{len(self.colors)} colors for {self.graph.size} edges")

    @classmethod
    def from_map(cls, g: Graph, color_of: dict) -> EdgeColoring:
        return cls(g, tuple(color_of[e] for e in g.edge_list()))

    def color_map(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.graph.edge_list(), self.colors))

    def color(self, u: int, v: int) -> int:
        return self.color_map()[(min(u, v), max(u, v))]

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def is_proper(self) -> bool:
        seen = set()
        for (u, v), c in zip(self.graph.edge_list(), self.colors):
            if (u, c) in seen or (v, c) in seen:
                return False
            seen.add((u, c))
            seen.add((v, c))
        return True

    def normalized(self) -> EdgeColoring:
        """Rename colors to first-appearance order 0, 1, 2, ... along the edge list."""
        rename = {}
        for c in self.colors:
            rename.setdefault(c, len(rename))
        return EdgeColoring(self.graph, tuple(rename[c] for c in self.colors))

    def to_dict(self) -> dict:
        return {"graph": encode_str(self.graph), "colors": list(self.colors)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d) -> EdgeColoring:
        return cls(decode(d["graph"]), tuple(d["colors"]))


@dataclass(frozen=True)
class RainbowCopy:
    pattern: Graph
    embedding: Embedding
    colors: tuple[int, ...]  # per pattern edge, lexicographic pattern edge order

    def to_dict(self) -> dict:
        return {"pattern": encode_str(self.pattern), "map": list(self.embedding.map), "colors": list(self.colors)}


def verify_rainbow_copy(coloring: EdgeColoring, rc: RainbowCopy) -> bool:
    if not rc.embedding.is_valid(rc.pattern, coloring.graph):
        return False
    cmap = coloring.color_map()
    cols = [cmap[e] for e in rc.embedding.image_edges(rc.pattern)]
    return len(set(cols)) == len(cols) and tuple(cols) == rc.colors


def _make_copy(coloring, pattern, emb):
    e = Embedding(tuple(emb))
    cmap = coloring.color_map()
    return RainbowCopy(pattern, e, tuple(cmap[x] for x in e.image_edges(pattern)))


def _edge_search_order(g: Graph) -> list[tuple[int, int]]:
    # vertex by vertex so that small copies are completed early
    pos = {v: i for i, v in enumerate(search_order(g))}
    return sorted(g.edges, key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])))


def _coloring_dfs(g: Graph, edges, budget, copies_at=None):
    """Restricted-growth DFS over proper colorings; yields color lists aligned with ``edges``.

    ``copies_at[i]`` lists copies (as edge-index tuples) whose last edge is i;
    a branch dies as soon as one of them is rainbow.
    """
    m = len(edges)
    cols = [0] * m
    at = [0] * g.order
    tick = budget.tick

    def rec(i, ncol):
        tick()
        if i == m:
            yield list(cols)
            return
        u, v = edges[i]
        banned = at[u] | at[v]
        for c in range(ncol + 1):
            if banned >> c & 1:
                continue
            cols[i] = c
            if copies_at is not None and any(
                len({cols[j] for j in cp}) == len(cp) for cp in copies_at[i]
            ):
                continue
            bit = 1 << c
            at[u] |= bit
            at[v] |= bit
            yield from rec(i + 1, max(ncol, c + 1))
            at[u] ^= bit
            at[v] ^= bit

    yield from rec(0, 0)


def enumerate_proper_colorings(g: Graph, edge_budget: int = DEFAULT_EDGE_BUDGET, budget=None):
    """Every proper edge coloring of ``g`` once up to color renaming.

    Colorings come in restricted-growth form over the lexicographic edge list.
    """
    if g.size > edge_budget:
        raise BudgetExceeded(f"{g.size} edges exceeds the edge budget {edge_budget}")
    budget = ensure(budget)
    edges = g.edge_list()
    for cols in _coloring_dfs(g, edges, budget):
        yield EdgeColoring(g, tuple(cols))


def find_rainbow_copy(coloring: EdgeColoring, f: Graph, budget=None) -> RainbowCopy | None:
    """A copy of ``f`` whose edges carry pairwise distinct colors, if any."""
    budget = ensure(budget)
    g = coloring.graph
    k = f.order
    if k > g.order:
        return None
    if k == 0:
        return RainbowCopy(f, Embedding(()), ())
    cmap = coloring.color_map()
    order = search_order(f)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[u] for u in f.neighbors(v) if pos[u] < i] for i, v in enumerate(order)]
    hadj = g.adj
    full = (1 << g.order) - 1
    img = [0] * k
    used_colors = set()
    tick = budget.tick

    def rec(i, used):
        tick()
        if i == k:
            return True
        cand = full & ~used
        for j in back[i]:
            cand &= hadj[img[j]]
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            cand ^= low
            new = [cmap[(min(x, img[j]), max(x, img[j]))] for j in back[i]]
            if used_colors.isdisjoint(new) and len(set(new)) == len(new):
                img[i] = x
                used_colors.update(new)
                if rec(i + 1, used | low):
                    return True
                used_colors.difference_update(new)
        return False

    if not rec(0, 0):
        return None
    emb = [0] * k
    for i, v in enumerate(order):
        emb[v] = img[i]
    return _make_copy(coloring, f, emb)


def _greedy_coloring(g: Graph, edges) -> dict:
    at = [set() for _ in range(g.order)]
    out = {}
    for u, v in edges:
        c = 0
        while c in at[u] or c in at[v]:
            c += 1
        out[(u, v)] = c
        at[u].add(c)
        at[v].add(c)
    return out


def admits_coloring_without_rainbow(g: Graph, f: Graph, edge_budget: int = DEFAULT_EDGE_BUDGET,
                                    budget=None) -> EdgeColoring | None:
    """A proper coloring of ``g`` with no rainbow ``f``, or None if every proper coloring has one.

    Raises BudgetExceeded when the answer could not be decided.
    """
    budget = ensure(budget)
    copies = copies_as_edge_sets(f, g, budget) if f.size > 0 else []
    if f.size == 0:
        # an edgeless pattern is rainbow as soon as it embeds at all
        if f.order <= g.order:
            return None
        return EdgeColoring.from_map(g, _greedy_coloring(g, g.edge_list())).normalized()
    if not copies:
        return EdgeColoring.from_map(g, _greedy_coloring(g, g.edge_list())).normalized()
    if g.size > edge_budget:
        raise BudgetExceeded(f"{g.size} edges exceeds the edge budget {edge_budget}")
    edges = _edge_search_order(g)
    index = {e: i for i, e in enumerate(edges)}
    copies_at = [[] for _ in edges]
    for cp in copies:
        idx = tuple(sorted(index[e] for e in cp))
        copies_at[idx[-1]].append(idx)
    for cols in _coloring_dfs(g, edges, budget, copies_at):
        return EdgeColoring.from_map(g, dict(zip(edges, cols))).normalized()
    return None


def random_proper_coloring(g: Graph, seed: int) -> EdgeColoring:
    """Greedy coloring along a seed-shuffled edge order (at most 2*maxdeg - 1 colors)."""
    edges = g.edge_list()
    random.Random(seed).shuffle(edges)
    return EdgeColoring.from_map(g, _greedy_coloring(g, edges))


# -- greedy embedders ---------------------------------------------------------


def _complete_bipartite_sides(g: Graph):
    if g.size == 0:
        return [], list(range(g.order))
    try:
        bp = bipartition(g)
    except DomainError:
        raise ParameterError("host is not complete bipartite") from None
    if len(bp.components) != 1:
        raise ParameterError("host is not a connected complete bipartite graph")
    a, b = bp.components[0]
    if g.size != len(a) * len(b):
        raise ParameterError("host is bipartite but not complete bipartite")
    return list(a), list(b)


def greedy_rainbow_embed_bipartite(coloring: EdgeColoring, f: Graph) -> RainbowCopy | None:
    """Greedy rainbow embedding of bipartite ``f`` into a colored K_{p,q}, p = p(f).

    The smaller color class of ``f`` goes onto the p-side; every other vertex
    of ``f`` is then placed on the q-side at the lowest free vertex whose
    edges back to its already placed neighbors avoid all colors used so
    far. Success is guaranteed once q > |E(f)| * p; below that the result may
    be None.
    """
    g = coloring.graph
    small, large = _complete_bipartite_sides(g)
    p = p_value(f)  # DomainError for non-bipartite f
    if len(small) != p:
        if len(large) != p:
            raise ParameterError(f"host sides {len(small)}, {len(large)} but p(f) = {p}")
        small, large = large, small
    cmap = coloring.color_map()
    f_small = bipartition(f).small_side()
    phi = {v: x for v, x in zip(f_small, small)}
    used_hosts = set(phi.values())
    used_colors = set()
    for v in range(f.order):
        if v in phi:
            continue
        nbrs = [phi[u] for u in f.neighbors(v)]
        for y in large:
            if y in used_hosts:
                continue
            new = [cmap[(min(x, y), max(x, y))] for x in nbrs]
            if used_colors.isdisjoint(new):
                phi[v] = y
                used_hosts.add(y)
                used_colors.update(new)
                break
        else:
            return None
    rc = _make_copy(coloring, f, [phi[v] for v in range(f.order)])
    assert verify_rainbow_copy(coloring, rc)
    return rc


def cycle_blowup_parts(g: Graph) -> list[list[int]]:
    """Parts of ``g`` as a blowup of an odd cycle, listed around the cycle.

    Parts are the classes of vertices with identical neighborhoods; the
    walk starts at the part of vertex 0 and first steps to the neighboring
    part with the lower least vertex.
    """
    classes: dict[int, list[int]] = {}
    for v in range(g.order):
        classes.setdefault(g.adj[v], []).append(v)
    parts = sorted(classes.values())
    owner = {v: i for i, part in enumerate(parts) for v in part}
    r = len(parts)
    if r < 3 or r % 2 == 0:
        raise ParameterError(f"host is not a blowup of an odd cycle ({r} twin classes)")
    qadj = []
    for i, part in enumerate(parts):
        nb = sorted({owner[u] for u in g.neighbors(part[0])})
        if len(nb) != 2:
            raise ParameterError("host is not a blowup of an odd cycle (quotient not 2-regular)")
        qadj.append(nb)
        for j in nb:
            if g.size and not all(g.adj[part[0]] >> u & 1 for u in parts[j]):
                raise ParameterError("host is not a blowup (parts not completely joined)")
    walk = [0]
    prev, cur = None, 0
    while True:
        nxt = [j for j in qadj[cur] if j != prev]
        step = nxt[0] if prev is not None else min(qadj[cur])
        if step == 0:
            break
        walk.append(step)
        prev, cur = cur, step
        if len(walk) > r:
            raise ParameterError("host is not a blowup of an odd cycle")
    if len(walk) != r:
        raise ParameterError("host is not a blowup of a single odd cycle")
    return [parts[i] for i in walk]


def greedy_rainbow_embed_cycle_blowup(coloring: EdgeColoring, m: int, parts=None) -> RainbowCopy | None:
    """Greedy part-respecting rainbow embedding of C_{2k+1}<m> (m total vertices).

    Pattern vertices are placed part by part; each goes to the lowest free
    host vertex of its part whose edges to already placed neighbors avoid
    all colors used so far. Guaranteed to succeed when every host part has
    at least m**3 vertices.
    """
    if m < 1:
        raise ParameterError("m must be >= 1")
    g = coloring.graph
    if parts is None:
        parts = cycle_blowup_parts(g)
    r = len(parts)
    spec = balanced_blowup(cycle(r), m)
    pattern = spec.graph()
    cmap = coloring.color_map()
    phi = [None] * m
    used_hosts = set()
    used_colors = set()
    for j, prange in enumerate(spec.parts()):
        for v in prange:
            nbrs = [phi[u] for u in pattern.neighbors(v) if phi[u] is not None]
            for y in parts[j]:
                if y in used_hosts:
                    continue
                new = [cmap[(min(x, y), max(x, y))] for x in nbrs]
                if used_colors.isdisjoint(new):
                    phi[v] = y
                    used_hosts.add(y)
                    used_colors.update(new)
                    break
            else:
                return None
    rc = _make_copy(coloring, pattern, phi)
    assert verify_rainbow_copy(coloring, rc)
    return rc
