"""Random (P2+P3, C4)-free graphs for experiments and tests."""

from __future__ import annotations

import random

from .families import (APPLE5, CAP5, F1, F2, PETERSEN, BlowupC5, Complete, Cycle, EmptySet,
                       FamilySpec, H1, H2, H3, H4, H4Star, H5, Join, Path, Theta, Union,
                       build_family)
from .graph import Graph, is_connected
from .patterns import in_scope_class


def _base(rng: random.Random) -> FamilySpec:
    r = rng.randint
    makers = [
        lambda: Cycle(rng.choice((5, 6))),
        lambda: Complete(r(1, 4)),
        lambda: Path(r(2, 5)),
        lambda: PETERSEN,
        lambda: CAP5,
        lambda: APPLE5,
        lambda: F1,
        lambda: F2,
        lambda: Theta(r(1, 3)),
        lambda: H1(r(1, 3)),
        lambda: H2(r(1, 2), r(1, 2), r(0, 1), r(1, 2)),
        lambda: H3(r(2, 3)),
        lambda: H4(r(1, 2), r(0, 2), r(0, 1)),
        lambda: H4Star(r(1, 2)),
        lambda: H5(r(1, 2), r(1, 2)),
        lambda: BlowupC5(*(r(1, 2) for _ in range(5))),
    ]
    return rng.choice(makers)()


def random_family_spec(rng: random.Random, ops: int | None = None) -> FamilySpec:
    """A base family wrapped in random joins with cliques and unions with
    edgeless graphs (both operations preserve the class)."""
    spec = _base(rng)
    for _ in range(rng.randint(0, 3) if ops is None else ops):
        if rng.random() < 0.6:
            spec = Join(spec, Complete(rng.randint(1, 2)))
        else:
            spec = Union(spec, EmptySet(rng.randint(1, 2)))
    return spec


def random_in_class(rng: random.Random, n_min: int = 7, n_max: int = 12,
                    connected: bool = True, tries: int = 10000) -> tuple[FamilySpec, Graph]:
    for _ in range(tries):
        spec = random_family_spec(rng)
        g = build_family(spec)
        if not n_min <= g.n <= n_max:
            continue
        if connected and not is_connected(g):
            continue
        if in_scope_class(g):
            return spec, g
    raise RuntimeError("no in-class graph found")


def grow_in_class(rng: random.Random, g: Graph, extra: int, tries: int = 200) -> Graph:
    """Add up to ``extra`` vertices with random neighbourhoods, keeping only
    additions that stay connected and in the class."""
    for _ in range(extra):
        for _ in range(tries):
            nb = [v for v in range(g.n) if rng.random() < 0.4]
            if not nb:
                continue
            h = Graph.from_edges(g.n + 1, g.edges() + [(v, g.n) for v in nb])
            if in_scope_class(h):
                g = h
                break
    return g
