import random

import pytest

from recolorkit.errors import ParameterError
from recolorkit.families import (F1, FamilySpec, H4Star, build_family, parse_family)
from recolorkit.generate import grow_in_class, random_family_spec, random_in_class
from recolorkit.graph import is_connected
from recolorkit.patterns import in_scope_class, is_isomorphic

from conftest import fam

CLASS_SPECS = ["c5", "c6", "petersen", "cap5", "apple5", "f1", "f2", "theta:1", "h1:1", "h1:3",
               "h2:1,1,0,1", "h2:2,1,1,1", "h3:2", "h4:2,1,0", "h4:1,0,0", "h4star:3",
               "h5:1,1", "h5:2,2", "blowup:2,1,1,1,1", "join(union(c6,e2),k3)"]


@pytest.mark.parametrize("spec", CLASS_SPECS)
def test_class_families_are_in_class(spec):
    assert in_scope_class(fam(spec))


@pytest.mark.parametrize("spec,n,m", [("c6", 6, 6), ("petersen", 10, 15), ("f2", 9, 18),
                                      ("h4star:1", 8, None), ("k4", 4, 6), ("e3", 3, 0),
                                      ("p4", 4, 3), ("join(c5,k2)", 7, 16)])
def test_sizes(spec, n, m):
    g = fam(spec)
    assert g.n == n and (m is None or g.m == m)


def test_f1_is_h4star_1():
    assert build_family(F1) == build_family(H4Star(1))


@pytest.mark.parametrize("text", ["h2:0,1,0,1", "h2:1,0,0,1", "h2:1,1,0,0", "h1:0", "h5:1,0",
                                  "h4:0,1,1", "h4star:0", "c2", "blowup:1,1,1,1,0", "nosuch",
                                  "join(c5)", "join(c5,k2", "h3", "c6x", "h4:1,1"])
def test_invalid_specs_rejected(text):
    with pytest.raises(ParameterError):
        build_family(parse_family(text))


def test_parse_and_str_round_trip():
    for text in CLASS_SPECS:
        spec = parse_family(text)
        assert parse_family(str(spec)) == spec


def test_join_union_layout():
    g = fam("join(c5,k1)")
    assert g.nbrs[5] == set(range(5))
    g = fam("union(c5,e1)")
    assert g.degree(5) == 0


def test_generators_stay_in_class():
    rng = random.Random(7)
    for _ in range(30):
        spec = random_family_spec(rng)
        assert isinstance(spec, FamilySpec)
        _, g = random_in_class(rng, 6, 11)
        assert 6 <= g.n <= 11 and is_connected(g) and in_scope_class(g)
        h = grow_in_class(rng, g, 2)
        assert in_scope_class(h) and h.n >= g.n


def test_relabel_isomorphic():
    g = fam("h5:2,1")
    perm = list(range(g.n))
    random.Random(3).shuffle(perm)
    assert is_isomorphic(g, g.relabel(perm))
