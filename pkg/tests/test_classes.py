import random

import pytest

from recolorkit.classes import (PETERSEN_I, canonicalize_chi, chi_scaffold_path, frozen_coloring,
                                independent_reduction, normalize_h1, normalize_independent,
                                petersen_sub_path)
from recolorkit.errors import NotEmbeddable, NotExceptional, ParameterError, ThresholdTooLow
from recolorkit.graph import check_frozen, chi, color_classes, degeneracy, random_coloring
from recolorkit.oracle import reconfig
from recolorkit.recolor import cluster_reference, cluster_steps
from recolorkit.structure import recognize

from conftest import fam


def witness(spec):
    g = fam(spec)
    return g, recognize(g)


def classes_of(col, groups):
    return frozenset(frozenset(g) for g in groups) == color_classes(col)


def test_h3_canonical_classes(rng):
    g, w = witness("h3:2")
    v, X = w.part("v"), w.part("X")
    want = [(v[0], v[3]), (v[1], X[0], v[5]), (v[2], X[1], v[4])]
    for _ in range(40):
        p = canonicalize_chi(g, w, random_coloring(g, 4, rng), 4)
        assert classes_of(p.end, want) and p.max_per_vertex() <= 2


def test_h5_single_canonical_classes(rng):
    g, w = witness("h5:1,1")
    v, s1, s2 = w.part("v"), w.part("S1")[0], w.part("S2")[0]
    want = [(v[1], s2), (v[0], v[2]), (v[3], v[5]), (v[4], s1)]
    for _ in range(40):
        p = canonicalize_chi(g, w, random_coloring(g, 5, rng), 5)
        assert classes_of(p.end, want) and p.max_per_vertex() <= 2


def test_f2_canonical_classes(rng):
    g, w = witness("f2")
    v, y = w.part("v"), w.part("y")
    want = [(v[0], v[2], v[4]), (v[1], v[3], v[5]), tuple(y)]
    for _ in range(40):
        p = canonicalize_chi(g, w, random_coloring(g, 6, rng), 6)
        assert classes_of(p.end, want) and p.max_per_vertex() <= 2
    with pytest.raises(ThresholdTooLow):
        canonicalize_chi(g, w, random_coloring(g, 5, rng), 5)


@pytest.mark.parametrize("spec", ["h3:2", "h3:3", "h4:2,1,0", "h4:1,0,1", "h4:2,2,1", "h5:1,1",
                                  "h5:2,2", "h5:1,3", "f2", "h4star:1", "h4star:2"])
def test_chi_canonicalization_fixed_partition(spec, rng):
    g, w = witness(spec)
    k = chi(g)
    ell = max(k + 1, degeneracy(g)[0] + 2) if w.exceptional else k + 1
    seen = set()
    for _ in range(30):
        p = canonicalize_chi(g, w, random_coloring(g, ell, rng), ell)
        assert p.max_per_vertex() <= 2
        assert len(set(p.end)) == k
        seen.add(color_classes(p.end))
    assert len(seen) == 1


def test_canonicalize_chi_rejects_other_kinds(rng):
    g, w = witness("h1:1")
    with pytest.raises(ParameterError):
        canonicalize_chi(g, w, random_coloring(g, 4, rng), 4)


def test_h1_single_normalization():
    g, w = witness("h1:1")
    u, s = w.part("u"), w.part("S")[0]
    col = None
    for start in [random_coloring(g, 4, random.Random(i)) for i in range(200)]:
        if start[s] != start[u[4]]:
            col = start
            break
    p, I = normalize_independent(g, w, col, 4)
    assert set(I) == {u[2], u[3], u[4]}
    assert {st.vertex for st in p.steps} <= {u[2], u[3]}
    assert all(p.end[x] == col[u[4]] for x in I)


def test_h2_single_step():
    g, w = witness("h2:1,1,0,1")
    u, v, x = w.part("u"), w.part("v"), w.part("w")
    rng = random.Random(8)
    for _ in range(200):
        col = random_coloring(g, 4, rng)
        if col[v] == col[x] and col[u] != col[v]:
            break
    p, I = normalize_independent(g, w, col, 4)
    assert [(s.vertex, s.new_color) for s in p.steps] == [(u, col[v])]


def test_petersen_claim_star():
    g, w = witness("petersen")
    emb = dict(zip(w.labels, w.embedding))
    back = {b: a for a, b in emb.items()}
    v = [back[i] for i in range(10)]
    rng = random.Random(9)
    for _ in range(500):
        col = random_coloring(g, 4, rng)
        if col[v[8]] == col[v[9]] and col[v[1]] != col[v[8]]:
            break
    p, I = normalize_independent(g, w, col, 4)
    assert set(I) == {v[i] for i in PETERSEN_I}
    assert {s.vertex for s in p.steps} <= {v[0], v[2]} and p.end[v[8]] == col[v[8]]


@pytest.mark.parametrize("spec,ell,budget", [("h1:1", 4, 1), ("h1:2", 5, 1), ("h2:1,1,0,1", 4, 1),
                                             ("h2:2,1,1,1", 5, 1), ("petersen", 4, 2)])
def test_normalize_independent_budget(spec, ell, budget, rng):
    g, w = witness(spec)
    rest = None
    for _ in range(60):
        col = random_coloring(g, ell, rng)
        p, I = normalize_independent(g, w, col, ell)
        rest = [x for x in range(g.n) if x not in I]
        c = p.end[I[0]]
        assert all(p.end[x] == c for x in I)
        assert all(p.end[x] != c for x in rest)
        assert p.max_per_vertex() <= budget
        assert g.is_independent(I)
    assert chi(g) == chi(g.induced(rest)) + 1


def test_independent_reduction_h1(rng):
    g, w = witness("h1:1")

    def normalize(rec, palette):
        normalize_h1(rec, w, palette)

    def inner(rec, vertices, palette):
        cluster_steps(rec, vertices, cluster_reference(rec.g, vertices, palette), palette)

    I = (w.part("u")[2], w.part("u")[3], w.part("u")[4])
    for _ in range(30):
        a, b = random_coloring(g, 4, rng), random_coloring(g, 4, rng)
        p = independent_reduction(g, I, a, b, 4, normalize, inner)
        assert p.end == b and p.max_per_vertex() <= 8


def test_scaffold_trivial_and_bound(rng):
    g, w = witness("h3:2")
    a = random_coloring(g, 4, rng)
    p = canonicalize_chi(g, w, a, 4)
    q = chi_scaffold_path(g, w, p.end, p.end, 4)
    assert len(q) <= 2 * g.n
    for _ in range(30):
        a, b = random_coloring(g, 4, rng), random_coloring(g, 4, rng)
        assert chi_scaffold_path(g, w, a, b, 4).max_per_vertex() <= 6


def test_petersen_sub_paths(rng):
    pet, w = witness("petersen")
    g, tw = witness("theta:1")
    for _ in range(20):
        a, b = random_coloring(g, 4, rng), random_coloring(g, 4, rng)
        p = petersen_sub_path(g, [tw.embedding[tw.labels.index(i)] for i in range(g.n)], a, b, 4)
        assert p.end == b and p.max_per_vertex() <= 10
    c6 = pet.induced([0, 1, 2, 7, 9, 4])
    emb = [0, 1, 2, 7, 9, 4]
    a, b = random_coloring(c6, 4, rng), random_coloring(c6, 4, rng)
    assert petersen_sub_path(c6, emb, a, b, 4).end == b
    with pytest.raises(NotEmbeddable):
        petersen_sub_path(fam("c4"), [0, 1, 2, 3], (1, 2, 1, 2), (1, 2, 1, 2), 4)


def test_frozen_colorings():
    ell, col = frozen_coloring(recognize(fam("c6")))
    assert ell == 3 and [col[i] for i in range(6)] == [1, 2, 3, 1, 2, 3]
    g, w = witness("h4star:1")
    ell, col = frozen_coloring(w)
    assert ell == 4 and {col[x] for x in w.part("S1")} == {col[x] for x in w.part("S2")} == {4}
    g, w = witness("h4star:2")
    ell, col = frozen_coloring(w)
    assert ell == 5 and {col[x] for x in w.part("S1")} == {col[x] for x in w.part("S2")} == {4, 5}
    v = w.part("v")
    assert [col[x] for x in v] == [1, 2, 3, 1, 2, 3]
    with pytest.raises(NotExceptional):
        frozen_coloring(recognize(fam("h3:2")))


@pytest.mark.parametrize("spec", ["c6", "f2", "h4star:1", "h4star:2", "h4star:3"])
def test_frozen_coloring_is_isolated(spec):
    g, w = witness(spec)
    ell, col = frozen_coloring(w)
    cols = [col[x] for x in range(g.n)]
    assert ell == chi(g) + 1 and check_frozen(g, cols, ell)
    if g.n <= 10:
        r = reconfig(g, ell)
        assert r.degrees[r.index(cols)] == 0
