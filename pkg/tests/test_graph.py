import itertools

import pytest
from hypothesis import given, settings, strategies as st

from vat.canon import canonicalize
from vat.enumeration import graphs_of_order
from vat.errors import ParameterError
from vat.graph import (
    BlowupSpec,
    Graph,
    balanced_blowup,
    blowup,
    complete,
    complete_bipartite,
    complete_multipartite,
    construct,
    cycle,
    path,
    star,
    turan,
)
from vat.search import Embedding, contains_subgraph, count_injective_homs, iter_embeddings

from . import oracles


@st.composite
def graphs(draw, max_order=6):
    n = draw(st.integers(0, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_constructor_sizes():
    assert turan(4, 2).size == 4
    assert oracles.isomorphic(turan(4, 2), cycle(4))
    assert complete(1).order == 1 and complete(1).size == 0
    k23 = complete_bipartite(2, 3)
    assert (k23.order, k23.size) == (5, 6)
    assert path(4).size == 3 and star(3).size == 3
    assert complete(0).order == 0


def test_turan_labeling_larger_parts_first():
    g = turan(7, 3)  # parts 3, 2, 2
    assert not g.has_edge(0, 1) and not g.has_edge(1, 2) and g.has_edge(2, 3)
    assert not g.has_edge(3, 4) and g.has_edge(4, 5) and not g.has_edge(5, 6)
    assert g.size == 3 * 2 + 3 * 2 + 2 * 2


@pytest.mark.parametrize("n,r", [(n, r) for n in range(0, 12) for r in range(1, 5)])
def test_turan_balanced(n, r):
    g = turan(n, r)
    assert g.order == n
    # the complement of T(n, r) is a disjoint union of r cliques of near-equal size
    comp = [len(c) for c in g.complement().components()] if n else []
    sizes = sorted(comp, reverse=True)
    if n:
        assert max(sizes) - min(sizes) <= 1
        assert len(sizes) == min(r, n)


def test_construct_errors():
    with pytest.raises(ParameterError):
        construct("cycle", [2])
    with pytest.raises(ParameterError):
        construct("complete_bipartite", [-1, 3])
    with pytest.raises(ParameterError):
        construct("nope", [3])
    with pytest.raises(ParameterError):
        construct("turan", [4])
    assert construct("turan", [4, 2]) == turan(4, 2)
    assert construct("complete_multipartite", [1, 2, 3]) == complete_multipartite(1, 2, 3)


def test_graph_validation():
    with pytest.raises(ParameterError):
        Graph(3, [(0, 0)])
    with pytest.raises(ParameterError):
        Graph(3, [(0, 3)])
    assert Graph(3, [(1, 0), (0, 1)]).size == 1


def test_blowup_examples():
    assert canonicalize(blowup(cycle(5), [1] * 5)) == canonicalize(cycle(5))
    assert blowup(complete(2), [2, 3]) == complete_bipartite(2, 3)
    g = blowup(cycle(3), [2, 2, 2])
    assert g.size == 12
    assert oracles.isomorphic(g, complete_multipartite(2, 2, 2))


def test_blowup_spec_validation():
    with pytest.raises(ParameterError):
        BlowupSpec(cycle(3), (1, 1))
    with pytest.raises(ParameterError):
        BlowupSpec(cycle(3), (1, -1, 1))
    spec = BlowupSpec(cycle(3), (2, 0, 1))
    assert spec.order == 3 and [list(r) for r in spec.parts()] == [[0, 1], [], [2]]


def test_all_ones_blowup_is_base():
    for n in range(1, 7):
        for g in graphs_of_order(n):
            assert canonicalize(blowup(g, [1] * n)) == canonicalize(g)


def test_balanced_blowup_examples():
    assert balanced_blowup(cycle(5), 10).part_sizes == (2, 2, 2, 2, 2)
    assert balanced_blowup(cycle(5), 7).part_sizes == (2, 2, 1, 1, 1)
    assert balanced_blowup(cycle(3), 24).part_sizes == (8, 8, 8)
    with pytest.raises(ParameterError):
        balanced_blowup(Graph(0), 3)
    assert balanced_blowup(Graph(0), 0).part_sizes == ()


@given(st.integers(1, 6), st.integers(0, 60))
def test_balanced_blowup_property(k, n):
    sizes = balanced_blowup(complete(k), n).part_sizes
    assert sum(sizes) == n and len(sizes) == k
    assert max(sizes) - min(sizes) <= 1
    assert list(sizes) == sorted(sizes, reverse=True)


def test_contains_examples():
    assert contains_subgraph(complete(4), cycle(4)) is not None
    assert contains_subgraph(cycle(5), complete(3)) is None
    emb = contains_subgraph(complete_bipartite(3, 3), cycle(6))
    assert emb is not None and emb.is_valid(cycle(6), complete_bipartite(3, 3))


@settings(max_examples=150, deadline=None)
@given(graphs(6), graphs(4))
def test_contains_matches_brute_force(host, pattern):
    emb = contains_subgraph(host, pattern)
    assert (emb is not None) == oracles.has_subgraph(host, pattern)
    if emb is not None:
        assert emb.is_valid(pattern, host)


@settings(max_examples=60, deadline=None)
@given(graphs(5), graphs(3))
def test_embedding_enumeration_consistent(host, pattern):
    embs = list(iter_embeddings(pattern, host))
    assert len(embs) == count_injective_homs(pattern, host)
    assert len(set(embs)) == len(embs)
    assert all(Embedding(e).is_valid(pattern, host) for e in embs)


def test_graph_operations():
    g = cycle(5)
    assert oracles.isomorphic(g.remove_vertex(0), path(4))
    assert g.remove_edge(0, 1).size == 4
    assert g.add_edge(0, 2).size == 6
    assert g.complement().complement() == g
    u = g.disjoint_union(complete(2))
    assert u.order == 7 and u.size == 6 and len(u.components()) == 2
    assert g.induced([0, 1, 2]).size == 2
