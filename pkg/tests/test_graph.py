import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from recolorkit.errors import FormatError, SizeLimit
from recolorkit.graph import (Graph, check_frozen, check_locked, check_proper, chi,
                              chromatic_number, clique_number, color_classes, connected_components,
                              degeneracy, find_comparable_pair, format_coloring, format_graph,
                              is_chordal, is_peo, parse_coloring, parse_graph, random_coloring,
                              universal_vertices)

from conftest import fam, to_nx


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def test_graph_is_symmetric_and_irreflexive():
    g = Graph.from_edges(4, [(0, 1), (1, 0), (2, 3)])
    assert g.m == 2
    assert g.adjacent(1, 0) and g.adjacent(0, 1)
    assert not any(g.adjacent(v, v) for v in range(4))
    with pytest.raises(Exception):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(Exception):
        Graph.from_edges(3, [(0, 5)])


def test_cycle6_basics():
    g = fam("c6")
    assert (g.n, g.m) == (6, 6)
    assert all(g.degree(v) == 2 for v in range(6))


def test_f2_neighbourhoods():
    g = fam("f2")
    v = list(range(6))
    y = [6, 7, 8]
    assert g.nbrs[y[0]] == {v[5], v[0], v[1], v[2]}
    assert g.nbrs[y[1]] == {v[1], v[2], v[3], v[4]}
    assert g.nbrs[y[2]] == {v[3], v[4], v[5], v[0]}
    assert g.is_independent(y)


def test_petersen_labelling_consistency():
    g = fam("petersen")
    assert all(g.degree(v) == 3 for v in range(10)) and g.m == 15
    # v1, v3, v9, v10 independent and v7 adjacent to v2 (1-based)
    assert g.is_independent([0, 2, 8, 9])
    assert g.adjacent(6, 1)


@pytest.mark.parametrize("spec,expected", [("petersen", 3), ("h4star:2", 4), ("h1:1", 3),
                                           ("c6", 2), ("c5", 3), ("k5", 5), ("e3", 1), ("f2", 3)])
def test_chromatic_number_examples(spec, expected):
    assert chi(fam(spec)) == expected


def test_chromatic_number_limit():
    with pytest.raises(SizeLimit):
        chromatic_number(fam("e70"))


@pytest.mark.parametrize("spec,expected", [("c6", 2), ("f2", 4), ("k5", 4), ("e4", 0), ("petersen", 3)])
def test_degeneracy_examples(spec, expected):
    assert degeneracy(fam(spec))[0] == expected


def test_chordality_examples():
    assert is_chordal(fam("k4")) is not None
    assert is_chordal(fam("c5")) is None
    assert is_chordal(fam("cap5")) is None
    peo = is_chordal(fam("join(p4,k1)"))
    assert peo is not None and is_peo(fam("join(p4,k1)"), peo)


def test_components_and_universal():
    assert sorted(map(len, connected_components(fam("union(p2,p3)")))) == [2, 3]
    assert len(connected_components(fam("c6"))) == 1
    assert len(connected_components(fam("e3"))) == 3
    assert universal_vertices(fam("join(c5,k2)")) == [5, 6]
    assert universal_vertices(fam("c6")) == []
    assert universal_vertices(fam("k3")) == [0, 1, 2]


def test_comparable_pair_examples():
    assert find_comparable_pair(fam("p3")) == (0, 2)
    assert find_comparable_pair(fam("c5")) is None
    # a1 is vertex 5 and v2 is vertex 1
    assert find_comparable_pair(fam("apple5")) == (5, 1)


def test_check_proper_and_frozen():
    assert check_proper(fam("c6"), [1, 2, 1, 2, 1, 2], 2)
    assert not check_proper(fam("k2"), [1, 1], 2)
    assert check_proper(fam("petersen"), list(range(1, 11)), 10)
    with pytest.raises(FormatError):
        check_proper(fam("k2"), [1], 2)
    with pytest.raises(FormatError):
        check_proper(fam("k2"), [1, 3], 2)
    assert check_frozen(fam("c6"), [1, 2, 3, 1, 2, 3], 3)
    assert not check_frozen(fam("c6"), [1, 2, 1, 2, 1, 2], 3)
    # F1 with v1=v4=1, v2=v5=2, v3=v6=3, S1=S2={4}
    assert check_frozen(fam("f1"), [1, 2, 3, 1, 2, 3, 4, 4], 4)


def test_check_locked():
    g = fam("union(c6,k1)")
    cols = [1, 2, 3, 1, 2, 3, 1]
    assert not check_frozen(g, cols, 3)
    assert check_locked(g, cols, 3, range(6))
    assert not check_locked(g, cols, 3, range(7))
    assert not check_locked(g, cols, 3, [])


def test_color_classes():
    assert color_classes((1, 2, 1)) == color_classes({0: 5, 1: 7, 2: 5})
    assert color_classes((1, 2, 1)) != color_classes((1, 1, 2))


def test_graph_format_round_trip():
    g = fam("join(union(c6,e1),k2)")
    assert parse_graph(format_graph(g)) == g
    assert parse_graph("c hello\np edge 2 1\ne 1 2\n") == fam("k2")
    for bad in ["", "p edge 2 2\ne 1 2\n", "e 1 2\n", "p edge 2 1\ne 1 3\n", "p edge 2 1\nx\n",
                "p edge 2 1\ne 1 1\n"]:
        with pytest.raises(FormatError):
            parse_graph(bad)


def test_coloring_format_round_trip():
    assert parse_coloring(format_coloring((1, 2, 3), 4), 3) == (4, (1, 2, 3))
    for bad, n in [("", None), ("3 1 a", None), ("2 1 3", None), ("3 1 2", 3), ("0", None)]:
        with pytest.raises(FormatError):
            parse_coloring(bad, n)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_chromatic_number_matches_brute_force(g):
    k, col = chromatic_number(g)
    assert check_proper(g, list(col), max(k, 1)) and (g.n == 0 or max(col) == k)
    assert k >= clique_number(g)
    if g.n:
        for c in range(1, k):
            assert not any(check_proper(g, list(a), c)
                           for a in itertools.product(range(1, c + 1), repeat=g.n))
    assert k <= degeneracy(g)[0] + 1


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_degeneracy_order_certifies(g):
    d, order = degeneracy(g)
    pos = {v: i for i, v in enumerate(order)}
    assert sorted(order) == list(range(g.n))
    assert all(sum(pos[u] > pos[v] for u in g.nbrs[v]) <= d for v in range(g.n))
    if g.n:
        core = nx.k_core(to_nx(g), d)
        assert core.number_of_nodes() > 0


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_chordality_matches_networkx(g):
    peo = is_chordal(g)
    assert (peo is not None) == nx.is_chordal(to_nx(g))
    if peo is not None:
        assert is_peo(g, peo)


@settings(max_examples=40, deadline=None)
@given(graphs(), st.integers(0, 2**32))
def test_format_round_trip_and_random_coloring(g, seed):
    assert parse_graph(format_graph(g)) == g
    k = chi(g)
    col = random_coloring(g, k + 1, random.Random(seed))
    assert check_proper(g, list(col), k + 1)
