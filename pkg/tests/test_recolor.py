import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from recolorkit.errors import (ClassMismatch, NoSpareColor, NotChordal, NotComparable,
                               NotP3Free, NotThreeK1Free, PaletteClash, ThresholdTooLow)
from recolorkit.graph import Graph, chi, color_classes, is_chordal, random_coloring
from recolorkit.oracle import oracle_distance, oracle_path
from recolorkit.paths import make_path
from recolorkit.recolor import (chordal_path, cluster_path, compose_join, compose_union,
                                cycle_path, lift_comparable, renaming_path, three_k1_path)

from conftest import fam


def chi_coloring(g, rng, palette):
    """A chi-coloring with a random labelling from ``palette``."""
    from recolorkit.graph import chromatic_number
    k, col = chromatic_number(g)
    labels = rng.sample(list(palette), k)
    return tuple(labels[c - 1] for c in col)


# -- renaming ----------------------------------------------------------------

def test_renaming_examples():
    g = fam("k2")
    p = renaming_path(g, (1, 2), (2, 1), 3)
    assert [(s.vertex, s.new_color) for s in p.steps] == [(0, 3), (1, 1), (0, 2)]
    assert len(renaming_path(fam("c6"), (1, 2) * 3, (1, 2) * 3, 3)) == 0
    p = renaming_path(fam("e3"), (1, 1, 1), (2, 2, 2), 2)
    assert p.counts() == [1, 1, 1]


def test_renaming_errors():
    with pytest.raises(ClassMismatch):
        renaming_path(fam("p3"), (1, 2, 1), (1, 2, 3), 3)
    with pytest.raises(NoSpareColor):
        renaming_path(fam("k2"), (1, 2), (2, 1), 2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["c6", "petersen", "h3:2", "h5:2,1", "f2", "k4", "blowup:2,1,1,1,1"]),
       st.integers(1, 3), st.integers(0, 2**31))
def test_renaming_at_most_two(spec, extra, seed):
    g = fam(spec)
    rng = random.Random(seed)
    ell = chi(g) + extra
    a = chi_coloring(g, rng, range(1, ell + 1))
    perm = rng.sample(range(1, ell + 1), ell)
    b = tuple(perm[c - 1] for c in a)
    p = renaming_path(g, a, b, ell)
    assert p.end == b and p.max_per_vertex() <= 2


# -- cluster and chordal -----------------------------------------------------

def test_cluster_examples(rng):
    p = cluster_path(fam("k3"), (1, 2, 3), (3, 1, 2), 4)
    assert p.end == (3, 1, 2) and p.max_per_vertex() <= 2
    p = cluster_path(fam("e4"), (1, 2, 1, 2), (2, 1, 2, 1), 2)
    assert p.max_per_vertex() <= 1
    g = fam("union(k2,k2)")
    for a, b in itertools.product([(1, 2, 1, 2), (2, 3, 3, 1), (3, 1, 2, 3)], repeat=2):
        p = cluster_path(g, a, b, 3)
        assert p.end == b and p.max_per_vertex() <= 2
    with pytest.raises(NotP3Free):
        cluster_path(fam("p3"), (1, 2, 1), (1, 2, 1), 3)


def test_chordal_examples():
    g = fam("p4")
    p = chordal_path(g, is_chordal(g), (1, 2, 1, 2), (2, 1, 2, 1), 3)
    assert p.end == (2, 1, 2, 1) and p.max_per_vertex() <= 8
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    rng = random.Random(2)
    for _ in range(20):
        a, b = random_coloring(g, 4, rng), random_coloring(g, 4, rng)
        p = chordal_path(g, is_chordal(g), a, b, 4)
        assert p.end == b and p.max_per_vertex() <= 2 * g.n
    with pytest.raises(NotChordal):
        chordal_path(fam("c5"), list(range(5)), (1, 2, 1, 2, 3), (1, 2, 1, 2, 3), 4)
    with pytest.raises(NoSpareColor):
        chordal_path(fam("k3"), [0, 1, 2], (1, 2, 3), (1, 2, 3), 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.integers(0, 2**31))
def test_chordal_random(n, seed):
    rng = random.Random(seed)
    # random chordal graph: each new vertex attaches to a clique of earlier ones
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        nb = {u} | {w for w in range(v) if (min(u, w), max(u, w)) in edges and rng.random() < 0.6}
        nb = {w for w in nb if all(x == w or (min(x, w), max(x, w)) in edges for x in nb)}
        edges += [(w, v) for w in sorted(nb)]
    g = Graph.from_edges(n, edges)
    peo = is_chordal(g)
    assert peo is not None
    ell = chi(g) + rng.randint(1, 2)
    a, b = random_coloring(g, ell, rng), random_coloring(g, ell, rng)
    p = chordal_path(g, peo, a, b, ell)
    assert p.end == b and p.max_per_vertex() <= 2 * n
    if ell ** n <= 10**5:
        assert oracle_distance(g, a, b, ell) <= len(p)


# -- cycles and 3K1-free -----------------------------------------------------

def test_cycle_examples():
    g = fam("c6")
    rng = random.Random(3)
    for _ in range(30):
        b = random_coloring(g, 4, rng)
        p = cycle_path(g, (1, 2, 3, 1, 2, 3), b, 4)
        assert p.end == b and len(p) <= 24
    g = fam("c5")
    for _ in range(30):
        a, b = random_coloring(g, 4, rng), random_coloring(g, 4, rng)
        assert len(cycle_path(g, a, b, 4)) <= 20
    p = cycle_path(fam("c3"), (1, 2, 3), (2, 3, 1), 4)
    assert p.end == (2, 3, 1)
    with pytest.raises(ThresholdTooLow):
        cycle_path(fam("c6"), (1, 2, 3, 1, 2, 3), (1, 2, 3, 1, 2, 3), 3)


def test_cycle_all_pairs_c6():
    from recolorkit.oracle import iter_colorings
    g = fam("c6")
    cols = list(iter_colorings(g, 4))[::7]
    for a in cols[:12]:
        for b in cols:
            assert len(cycle_path(g, a, b, 4)) <= 24


def test_three_k1_examples():
    rng = random.Random(4)
    g = fam("c5")
    for _ in range(10):
        a, b = random_coloring(g, 4, rng), random_coloring(g, 4, rng)
        assert three_k1_path(g, a, b, 4).end == b
    g = fam("c6").complement()
    ell = chi(g) + 1
    a, b = random_coloring(g, ell, rng), random_coloring(g, ell, rng)
    assert three_k1_path(g, a, b, ell).end == b
    with pytest.raises(NotThreeK1Free):
        three_k1_path(fam("e3"), (1, 1, 1), (1, 1, 1), 2)


# -- composition -------------------------------------------------------------

def test_compose_union_and_join():
    g = fam("union(k1,k1)")
    p1 = cluster_path(fam("k1"), (1,), (2,), 2)
    p2 = cluster_path(fam("k1"), (2,), (1,), 2)
    u = compose_union(g, [([0], p1), ([1], p2)])
    assert u.end == (2, 1) and len(u) == 2
    assert compose_union(g, [([0, 1], cluster_path(g, (1, 2), (1, 2), 2))]).end == (1, 2)

    g = fam("join(c5,k1)")
    c5 = fam("c5")
    a, b = (1, 2, 1, 2, 3), (1, 3, 1, 2, 3)
    steps = [(st.vertex, st.new_color) for st in oracle_path(c5, a, b, 3).steps]
    side1 = make_path(c5, 4, a, steps)   # the C5 side stays inside colors 1..3
    side2 = cluster_path(fam("k1"), (4,), (4,), 4)
    j = compose_join(g, list(range(5)), side1, [5], side2)
    assert j.end == b + (4,)
    with pytest.raises(PaletteClash):
        compose_join(g, list(range(5)), side1, [5], cluster_path(fam("k1"), (4,), (1,), 4))


def test_lift_comparable():
    g = fam("p3")   # u = 0 is comparable to v = 2
    inner = cluster_path(fam("k2"), (2, 1), (1, 2), 3)
    p = lift_comparable(g, 0, 2, inner)
    assert p.end[1:] == (1, 2) and p.end[0] != p.end[1]
    g = fam("apple5")   # a1 = 5, v2 = 1
    rng = random.Random(5)
    c5 = fam("c5")
    for _ in range(20):
        a, b = random_coloring(c5, 4, rng), random_coloring(c5, 4, rng)
        p = lift_comparable(g, 5, 1, oracle_path(c5, a, b, 4))
        assert p.end[:5] == b
    with pytest.raises(NotComparable):
        lift_comparable(fam("c5"), 0, 1, oracle_path(fam("p4"), (1, 2, 1, 2), (1, 2, 1, 2), 3))


def test_lift_untouched_neighbourhood():
    g = fam("p3")
    inner = cluster_path(fam("k2"), (2, 3), (2, 1), 3)   # only the far leaf moves
    p = lift_comparable(g, 0, 2, inner, u_start=1, u_target=3)
    assert p.counts()[0] <= 1 and p.end == (3, 2, 1)
