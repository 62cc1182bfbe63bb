import pytest
from hypothesis import given, settings

from vat.enumeration import graphs_of_order
from vat.errors import BudgetExceeded, DomainError
from vat.graph import Graph, blowup, complete, complete_bipartite, cycle, empty, path, star
from vat.parameters import (
    bipartition,
    chromatic_number,
    gamma,
    hom_exists,
    odd_girth,
    p_value,
)
from vat.search import contains_subgraph

from . import oracles
from .test_graph import graphs


def test_chromatic_examples():
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(complete_bipartite(3, 3)) == 2
    assert chromatic_number(blowup(cycle(5), [2] * 5)) == 3
    assert chromatic_number(empty(4)) == 1
    assert chromatic_number(empty(0)) == 0
    assert chromatic_number(complete(5)) == 5


def test_chromatic_order_cap():
    with pytest.raises(BudgetExceeded):
        chromatic_number(cycle(11))
    assert chromatic_number(cycle(11), max_order=11) == 3


@settings(max_examples=120, deadline=None)
@given(graphs(6))
def test_chromatic_matches_brute_force(g):
    assert chromatic_number(g) == oracles.chromatic_number(g)


def test_chi_le_k_iff_hom_to_clique():
    for n in range(1, 7):
        for g in graphs_of_order(n):
            chi = chromatic_number(g)
            for k in range(1, 7):
                assert (chi <= k) == (hom_exists(g, complete(k)) is not None)


def test_p_value_examples():
    assert p_value(complete_bipartite(2, 3)) == 2
    assert p_value(cycle(4)) == 2
    assert p_value(path(3).disjoint_union(path(3))) == 2
    assert p_value(empty(3)) == 0
    assert p_value(star(4)) == 1


def test_p_value_non_bipartite_witness():
    with pytest.raises(DomainError) as exc:
        p_value(cycle(5).disjoint_union(complete(2)))
    w = exc.value.witness
    assert len(w) % 2 == 1 and len(w) >= 3
    g = cycle(5)
    assert all(g.has_edge(w[i], w[(i + 1) % len(w)]) for i in range(len(w)))


def test_p_value_matches_two_coloring_oracle():
    for n in range(1, 7):
        for g in graphs_of_order(n):
            if oracles.chromatic_number(g) <= 2:
                assert p_value(g) == oracles.min_two_coloring_class(g)
                side = bipartition(g).side
                assert all(side[u] != side[v] for u, v in g.edges)


def test_p_value_additive():
    bip = [g for n in range(1, 6) for g in graphs_of_order(n) if chromatic_number(g) <= 2]
    for f in bip[::3]:
        for g in bip[::5]:
            assert p_value(f.disjoint_union(g)) == p_value(f) + p_value(g)


def test_hom_examples():
    assert hom_exists(cycle(5), complete(3)) is not None
    assert hom_exists(complete(3), cycle(5)) is None
    for g in (cycle(7), complete_bipartite(2, 3), path(4)):
        phi = hom_exists(g, g)
        assert phi is not None


@settings(max_examples=80, deadline=None)
@given(graphs(5), graphs(4))
def test_hom_matches_brute_force(f, b):
    phi = hom_exists(f, b)
    assert (phi is not None) == oracles.hom_exists(f, b)
    if phi is not None:
        assert all(b.has_edge(phi[u], phi[v]) for u, v in f.edges)


@pytest.mark.parametrize("b", [complete(2), complete(3), cycle(5), cycle(7)], ids=["K2", "K3", "C5", "C7"])
def test_hom_iff_blowup_containment(b):
    for n in range(1, 6):
        for f in graphs_of_order(n):
            via_hom = hom_exists(f, b) is not None
            via_blowup = contains_subgraph(blowup(b, [n] * b.order), f) is not None
            assert via_hom == via_blowup


def test_hom_composition_corpus():
    corpus = [cycle(9), cycle(7), cycle(5), complete(3), complete(4), complete(2), path(5),
              blowup(cycle(5), [2, 1, 1, 1, 1]), complete_bipartite(2, 3)]
    for f in corpus:
        for b in corpus:
            if hom_exists(f, b) is None:
                continue
            for c in corpus:
                if hom_exists(b, c) is not None:
                    assert hom_exists(f, c) is not None


def test_gamma_examples():
    assert gamma(complete(3)) == 2
    assert gamma(cycle(5)) == 3
    assert gamma(cycle(7)) == 4
    assert gamma(blowup(cycle(5), [2] * 5)) == 3


def test_gamma_domain():
    with pytest.raises(DomainError):
        gamma(cycle(4))
    with pytest.raises(DomainError):
        gamma(complete(4))


def test_gamma_monotone_under_subgraphs():
    three = [g for n in range(3, 7) for g in graphs_of_order(n) if chromatic_number(g) == 3]
    gam = {g: gamma(g) for g in three}
    for g in three:
        for u, v in g.edge_list():
            s = g.remove_edge(u, v)
            if chromatic_number(s) == 3:
                assert gamma(s) >= gam[g]
        for v in range(g.order):
            s = g.remove_vertex(v)
            if chromatic_number(s) == 3:
                assert gamma(s) >= gam[g]


def test_gamma_is_largest_hom_to_odd_cycle():
    for g in (g for n in range(3, 7) for g in graphs_of_order(n) if chromatic_number(g) == 3):
        k = gamma(g)
        target = complete(3) if k == 2 else cycle(2 * k - 1)
        assert oracles.hom_exists(g, target)
        assert not oracles.hom_exists(g, cycle(2 * k + 1))


def test_odd_girth():
    assert odd_girth(cycle(5)) == 5
    assert odd_girth(complete(4)) == 3
    assert odd_girth(complete_bipartite(3, 3)) is None
    assert odd_girth(cycle(9).disjoint_union(cycle(7))) == 7
    assert odd_girth(Graph(0)) is None
