"""Exact solvers for chromatic number, p(F), homomorphisms, gamma(F) and odd girth."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .budget import ensure
from .errors import BudgetExceeded, DomainError
from .graph import Graph, complete, cycle
from .search import find_homomorphism, search_order

DEFAULT_MAX_ORDER = 10


@dataclass(frozen=True)
class Bipartition:
    """side[v] in {0, 1}; inside each component the smaller side is listed first."""

    side: tuple[int, ...]
    components: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def small_side(self) -> list[int]:
        return sorted(v for a, _ in self.components for v in a)


def _odd_cycle_through(g: Graph, parent, u, v):
    # u, v adjacent with equal BFS depth: splice the two tree paths at their meeting point
    pu, pv = [u], [v]
    while pu[-1] != pv[-1]:
        pu.append(parent[pu[-1]])
        pv.append(parent[pv[-1]])
    return pu + pv[-2::-1]


def bipartition(g: Graph) -> Bipartition:
    """Proper 2-coloring per component; DomainError carries an odd cycle otherwise."""
    n = g.order
    side = [-1] * n
    parent = [-1] * n
    comps = []
    for s in range(n):
        if side[s] >= 0:
            continue
        side[s] = 0
        cls = ([s], [])
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.neighbors(u):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    cls[side[w]].append(w)
                    q.append(w)
                elif side[w] == side[u]:
                    cyc = _odd_cycle_through(g, parent, u, w)
                    raise DomainError(f"graph is not bipartite; odd cycle {cyc}", witness=cyc)
        a, b = sorted(cls[0]), sorted(cls[1])
        if len(b) < len(a):
            a, b = b, a
        comps.append((tuple(a), tuple(b)))
    return Bipartition(tuple(side), tuple(comps))


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
    except DomainError:
        return False
    return True


def p_value(f: Graph) -> int:
    """Size of the smallest color class over proper 2-colorings of ``f``.

    Per component this is the smaller side; an isolated vertex counts 0.
    """
    return sum(len(a) if len(a) <= len(b) else len(b) for a, b in bipartition(f).components)


def is_k_colorable(g: Graph, k: int, budget=None) -> bool:
    budget = ensure(budget)
    n = g.order
    if n == 0:
        return True
    if k <= 0:
        return False
    order = search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[u] for u in g.neighbors(v) if pos[u] < i] for i, v in enumerate(order)]
    col = [0] * n
    tick = budget.tick

    def rec(i, used):
        tick()
        if i == n:
            return True
        banned = 0
        for j in back[i]:
            banned |= 1 << col[j]
        # colors beyond used+1 are symmetric to used
        for c in range(min(k, used + 1)):
            if not banned >> c & 1:
                col[i] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
        return False

    return rec(0, 0)


def chromatic_number(g: Graph, budget=None, max_order: int = DEFAULT_MAX_ORDER) -> int:
    if g.order > max_order:
        raise BudgetExceeded(f"chromatic number limited to order <= {max_order}, got {g.order}")
    budget = ensure(budget)
    if g.order == 0:
        return 0
    k = 1
    while not is_k_colorable(g, k, budget):
        k += 1
    return k


def hom_exists(f: Graph, b: Graph, budget=None):
    """A homomorphism f -> b as a vertex map tuple, or None.

    Equivalently: whether f is a subgraph of some blowup of b.
    """
    return find_homomorphism(f, b, budget)


def odd_girth(g: Graph) -> int | None:
    best = None
    n = g.order
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    q.append(w)
        for u, v in g.edges:
            if dist[u] >= 0 and dist[u] == dist[v]:
                length = 2 * dist[u] + 1
                if best is None or length < best:
                    best = length
    return best


def odd_cycle_base(k: int) -> Graph:
    """C_{2k-1}, reading C_3 as K_3."""
    return complete(3) if k == 2 else cycle(2 * k - 1)


def gamma(f: Graph, budget=None, max_order: int = DEFAULT_MAX_ORDER) -> int:
    """Largest k such that f maps homomorphically into C_{2k-1}; f must be 3-chromatic."""
    budget = ensure(budget)
    chi = chromatic_number(f, budget, max_order)
    if chi != 3:
        raise DomainError(f"gamma is defined for 3-chromatic graphs; chromatic number is {chi}")
    og = odd_girth(f)
    upper = (og - 1) // 2 + 1
    k = 2
    while k < upper and hom_exists(f, odd_cycle_base(k + 1), budget) is not None:
        k += 1
    return k
