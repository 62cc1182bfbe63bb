"""Finite simple graphs on vertices 0..n-1, standard constructors and blowups."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError


class Graph:
    """Immutable simple graph with dense integer vertex labels.

    Adjacency is kept as one bitmask per vertex; most searches in the
    package work directly on ``adj``.
    """

    __slots__ = ("order", "edges", "adj", "_canon")

    def __init__(self, order: int, edges=()):
        if order < 0:
            raise ParameterError(f"negative order {order}")
        norm = set()
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= order:
                raise ParameterError(f"edge ({u}, {v}) out of range for order {order}")
            norm.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.order = order
        self.edges = frozenset(norm)
        self.adj = tuple(adj)
        self._canon = None

    @classmethod
    def from_adjacency(cls, adj) -> Graph:
        n = len(adj)
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self):
        return hash((self.order, self.edges))

    def __repr__(self):
        return f"Graph({self.order}, {self.edge_list()})"

    @property
    def size(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges in lexicographic order; this order indexes edge colorings."""
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        a = self.adj[v]
        return [u for u in range(self.order) if a >> u & 1]

    def relabel(self, perm) -> Graph:
        """Image of the graph under ``v -> perm[v]``."""
        return Graph(self.order, [(perm[u], perm[v]) for u, v in self.edges])

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph(self.order, self.edges | {(min(u, v), max(u, v))})

    def remove_edge(self, u: int, v: int) -> Graph:
        return Graph(self.order, self.edges - {(min(u, v), max(u, v))})

    def remove_vertex(self, v: int) -> Graph:
        shift = lambda x: x - 1 if x > v else x  # noqa: E731
        return Graph(self.order - 1, [(shift(a), shift(b)) for a, b in self.edges if v not in (a, b)])

    def induced(self, vertices) -> Graph:
        vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), [(pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos])

    def disjoint_union(self, other: Graph) -> Graph:
        k = self.order
        return Graph(k + other.order, list(self.edges) + [(a + k, b + k) for a, b in other.edges])

    def complement(self) -> Graph:
        return Graph(self.order, [e for e in combinations(range(self.order), 2) if e not in self.edges])

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.order):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= self.adj[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append([v for v in range(self.order) if comp >> v & 1])
        return comps


# -- constructors ---------------------------------------------------------


def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    if n < 0:
        raise ParameterError("complete graph needs n >= 0")
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle length must be >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices (so ``path(3)`` has two edges)."""
    if n < 0:
        raise ParameterError("path needs n >= 0")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def complete_multipartite(*sizes: int) -> Graph:
    if any(s < 0 for s in sizes):
        raise ParameterError(f"negative part size in {sizes}")
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    n = len(part)
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


def complete_bipartite(s: int, t: int) -> Graph:
    return complete_multipartite(s, t)


def turan_part_sizes(n: int, r: int) -> list[int]:
    if r < 1 or n < 0:
        raise ParameterError(f"turan needs n >= 0 and r >= 1, got ({n}, {r})")
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def turan(n: int, r: int) -> Graph:
    """Balanced complete r-partite graph on n vertices, larger parts first."""
    return complete_multipartite(*turan_part_sizes(n, r))


FAMILIES = {
    "empty": empty,
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "star": star,
    "complete_bipartite": complete_bipartite,
    "complete_multipartite": complete_multipartite,
    "turan": turan,
}

_ARITY = {"empty": 1, "complete": 1, "cycle": 1, "path": 1, "star": 1, "complete_bipartite": 2, "turan": 2}


def construct(family: str, params) -> Graph:
    """Build a named graph, e.g. ``construct("turan", [4, 2])``."""
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise ParameterError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    params = [int(p) for p in params]
    want = _ARITY.get(family)
    if want is not None and len(params) != want:
        raise ParameterError(f"{family} takes {want} parameter(s), got {len(params)}")
    return fn(*params)


# -- blowups --------------------------------------------------------------


@dataclass(frozen=True)
class BlowupSpec:
    base: Graph
    part_sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "part_sizes", tuple(int(s) for s in self.part_sizes))
        if len(self.part_sizes) != self.base.order:
            raise ParameterError(
                f"{len(self.part_sizes)} part sizes for a base of order {self.base.order}"
            )
        if any(s < 0 for s in self.part_sizes):
            raise ParameterError(f"negative part size in {self.part_sizes}")

    @property
    def order(self) -> int:
        return sum(self.part_sizes)

    def parts(self) -> list[range]:
        """Vertex ranges of the realized graph, one per base vertex."""
        out, start = [], 0
        for s in self.part_sizes:
            out.append(range(start, start + s))
            start += s
        return out

    def graph(self) -> Graph:
        owner = [v for v, s in enumerate(self.part_sizes) for _ in range(s)]
        n = len(owner)
        base = self.base
        return Graph(n, [(a, b) for a, b in combinations(range(n), 2) if base.has_edge(owner[a], owner[b])])


def blowup(spec, part_sizes=None) -> Graph:
    """Realize a blowup; accepts a BlowupSpec or ``(base, part_sizes)``."""
    if part_sizes is not None:
        spec = BlowupSpec(spec, tuple(part_sizes))
    return spec.graph()


def balanced_blowup(base: Graph, n: int) -> BlowupSpec:
    """Part sizes t or t+1 summing to n; the lowest base labels get t+1."""
    if n < 0:
        raise ParameterError("balanced blowup needs n >= 0")
    if base.order == 0:
        if n > 0:
            raise ParameterError("cannot blow up the null graph to a positive order")
        return BlowupSpec(base, ())
    q, rem = divmod(n, base.order)
    return BlowupSpec(base, tuple([q + 1] * rem + [q] * (base.order - rem)))


def odd_cycle_blowup(j: int, n: int) -> Graph:
    """Balanced n-vertex blowup of C_{2j+1} (C_3 is the triangle)."""
    return balanced_blowup(cycle(2 * j + 1), n).graph()
