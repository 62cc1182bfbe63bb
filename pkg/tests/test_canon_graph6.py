import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from vat.canon import canonical_key, canonicalize, is_isomorphic
from vat.enumeration import graphs_of_order
from vat.errors import Graph6Error
from vat.graph import Graph, complete, complete_bipartite, cycle, empty, path, turan
from vat.graph6 import decode, encode, encode_str

from . import oracles
from .test_graph import graphs


def all_labeled(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def test_canon_examples():
    a = Graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert canonicalize(a) == canonicalize(cycle(4))
    assert canonicalize(complete(3)) != canonicalize(path(3))


def test_eleven_graphs_on_four_vertices():
    forms = {canonicalize(g) for g in all_labeled(4)}
    assert len(forms) == 11
    # independent grouping agrees
    assert len({oracles.min_relabel_key(4, g.edges) for g in all_labeled(4)}) == 11


@pytest.mark.parametrize("n", range(0, 6))
def test_canonical_key_matches_permutation_oracle(n):
    classes = {}
    for g in all_labeled(n):
        classes.setdefault(oracles.min_relabel_key(n, g.edges), set()).add(canonical_key(g))
    # one key per class, and distinct classes never share a key
    assert all(len(keys) == 1 for keys in classes.values())
    assert len({next(iter(k)) for k in classes.values()}) == len(classes)


@settings(max_examples=200, deadline=None)
@given(graphs(8), st.randoms(use_true_random=False))
def test_canonical_form_relabel_invariant(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonicalize(h) == canonicalize(g)
    assert oracles.isomorphic(canonicalize(g), g) if g.order <= 6 else True


@settings(max_examples=100, deadline=None)
@given(graphs(5), graphs(5))
def test_is_isomorphic_matches_oracle(g, h):
    assert is_isomorphic(g, h) == oracles.isomorphic(g, h)


def test_regular_graphs_hard_for_refinement():
    # vertex-transitive / regular inputs force individualization
    pet_outer = [(i, (i + 1) % 5) for i in range(5)]
    pet_inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    petersen = Graph(10, pet_outer + pet_inner + spokes)
    rnd = random.Random(1)
    for _ in range(5):
        perm = list(range(10))
        rnd.shuffle(perm)
        assert canonicalize(petersen.relabel(perm)) == canonicalize(petersen)
    c10 = cycle(10)
    two_c5 = cycle(5).disjoint_union(cycle(5))
    assert canonicalize(c10) != canonicalize(two_c5)
    k33 = complete_bipartite(3, 3)
    prism = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert canonicalize(k33) != canonicalize(prism)


def test_graph6_examples():
    assert encode(complete(1)) == b"@"
    assert encode(empty(5)) == b"D??"
    assert encode(empty(0)) == b"?"
    assert decode(encode(complete_bipartite(2, 3))) == complete_bipartite(2, 3)
    # hand-computed: K3 upper triangle 111 -> 111000 -> 56+63 = 'w'
    assert encode(complete(3)) == b"Bw"
    # C5 as produced by the standard tools: edges 01 12 23 34 04
    assert encode(cycle(5)) == b"Dhc"
    assert decode("Dhc") == cycle(5)


def test_graph6_accepts_header_and_newline():
    assert decode(b">>graph6<<Bw\n") == complete(3)
    assert decode("Bw\n") == complete(3)


def test_graph6_long_header():
    g = path(70)
    s = encode(g)
    assert s[0] == 126 and len(s) == 4 + (70 * 69 // 2 + 5) // 6
    assert decode(s) == g


@pytest.mark.parametrize("n", range(0, 7))
def test_graph6_round_trip_all(n):
    for g in graphs_of_order(n):
        for perm in itertools.islice(itertools.permutations(range(n)), 3):
            h = g.relabel(list(perm))
            assert decode(encode(h)) == h
            assert decode(encode_str(h)) == h


@pytest.mark.parametrize(
    "bad,offset",
    [
        (b"", 0),
        (b"Bw?", 2),  # trailing data
        (b"D?", 2),  # truncated: offset of the first missing byte
        (b"B\x20", 1),  # byte out of range
        (b"Bx", 1),  # nonzero padding bits
        (b"~?", 2),  # truncated long header
    ],
)
def test_graph6_malformed(bad, offset):
    with pytest.raises(Graph6Error) as exc:
        decode(bad)
    assert exc.value.offset == offset
    assert f"byte {offset}" in str(exc.value)


def test_graph6_round_trip_turan():
    for n in range(1, 12):
        g = turan(n, 3)
        assert decode(encode(g)) == g
