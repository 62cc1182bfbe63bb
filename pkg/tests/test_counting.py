import itertools

import pytest
from hypothesis import given, settings, strategies as st

from vat.counting import (
    automorphism_count,
    closed_form_kab,
    closed_form_odd_cycle_blowup,
    count_copies,
)
from vat.errors import ParameterError
from vat.graph import Graph, blowup, complete, complete_bipartite, cycle, path, star
from vat.search import count_injective_homs

from . import oracles
from .test_graph import graphs


def test_examples():
    assert count_copies(path(3), complete(3)) == 3
    assert count_copies(cycle(5), cycle(5)) == 1
    assert count_copies(cycle(5), blowup(cycle(5), [2] * 5)) == 32
    assert automorphism_count(cycle(5)) == 10
    assert automorphism_count(complete(4)) == 24
    assert automorphism_count(path(4)) == 2


def test_closed_form_examples():
    assert closed_form_kab(1, 2, 2, 2) == 4
    assert closed_form_kab(2, 2, 2, 2) == 1
    assert closed_form_kab(1, 3, 1, 5) == 10
    assert closed_form_odd_cycle_blowup(2, [2] * 5) == 32
    assert closed_form_odd_cycle_blowup(1, [3, 3, 3]) == 27
    assert closed_form_odd_cycle_blowup(2, [1] * 5) == 1
    with pytest.raises(ParameterError):
        closed_form_odd_cycle_blowup(2, [1, 1, 1])


def test_kab_against_brute_force_oracle():
    # independent subset-based counting on the small end of the grid
    for a, b in itertools.product(range(1, 3), repeat=2):
        for s, t in itertools.product(range(4), repeat=2):
            want = oracles.count_copies(complete_bipartite(a, b), complete_bipartite(s, t))
            assert closed_form_kab(a, b, s, t) == want


def test_kab_full_grid():
    for a, b in itertools.product(range(1, 4), repeat=2):
        for s, t in itertools.product(range(6), repeat=2):
            assert closed_form_kab(a, b, s, t) == count_copies(complete_bipartite(a, b), complete_bipartite(s, t))


@pytest.mark.parametrize("k", [1, 2])
def test_odd_cycle_blowup_closed_form(k):
    base = cycle(2 * k + 1)
    for sizes in itertools.product(range(4), repeat=2 * k + 1):
        assert count_copies(base, blowup(base, sizes)) == closed_form_odd_cycle_blowup(k, sizes)


@settings(max_examples=100, deadline=None)
@given(graphs(4), graphs(6))
def test_count_matches_oracle(h, g):
    if h.order == 0:
        return
    assert count_copies(h, g) == oracles.count_copies(h, g)
    assert count_copies(h, g) * automorphism_count(h) == count_injective_homs(h, g)


@settings(max_examples=60, deadline=None)
@given(graphs(6), st.data())
def test_count_monotone_under_edge_addition(g, data):
    missing = [(u, v) for u in range(g.order) for v in range(u + 1, g.order) if not g.has_edge(u, v)]
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    bigger = g.add_edge(*e)
    for h in (path(3), complete(3), cycle(4), star(3)):
        assert count_copies(h, bigger) >= count_copies(h, g)


def test_big_integers():
    # product of parts exceeds 64 bits
    assert closed_form_odd_cycle_blowup(3, [10**3] * 7) == 10**21
    assert isinstance(count_copies(complete(2), Graph(2, [(0, 1)])), int)
