"""Exact subgraph-copy counts N(H, G) and the closed forms the examples rely on."""

from __future__ import annotations

from math import comb, prod

from .errors import ParameterError
from .graph import Graph
from .search import count_injective_homs


def automorphism_count(h: Graph) -> int:
    if h.order < 1:
        raise ParameterError("automorphism_count needs order >= 1")
    return count_injective_homs(h, h)


def count_copies(h: Graph, g: Graph, budget=None) -> int:
    """Number of distinct subgraphs of ``g`` isomorphic to ``h``."""
    if h.order < 1:
        raise ParameterError("pattern must have at least one vertex")
    homs = count_injective_homs(h, g, budget)
    aut = automorphism_count(h)
    copies, rest = divmod(homs, aut)
    assert rest == 0, (homs, aut)
    return copies


def closed_form_kab(a: int, b: int, s: int, t: int) -> int:
    """N(K_{a,b}, K_{s,t}) for a, b >= 1."""
    if a < 1 or b < 1 or s < 0 or t < 0:
        raise ParameterError(f"need a, b >= 1 and s, t >= 0; got {(a, b, s, t)}")
    if a == b:
        return comb(s, a) * comb(t, a)
    return comb(s, a) * comb(t, b) + comb(s, b) * comb(t, a)


def closed_form_odd_cycle_blowup(k: int, part_sizes) -> int:
    """N(C_{2k+1}, blowup of C_{2k+1} with the given parts): one vertex per part."""
    if k < 1:
        raise ParameterError("k must be >= 1")
    part_sizes = list(part_sizes)
    if len(part_sizes) != 2 * k + 1:
        raise ParameterError(f"expected {2 * k + 1} part sizes, got {len(part_sizes)}")
    if any(s < 0 for s in part_sizes):
        raise ParameterError("negative part size")
    return prod(part_sizes)
