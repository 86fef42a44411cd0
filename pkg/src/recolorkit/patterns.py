"""Induced-subgraph detection, isomorphism search and class membership."""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Sequence

from .families import (APPLE5, CAP5, Cycle, EmptySet, Path, Theta, Union,
                       build_family, Complete)
from .graph import Graph, bits, connected_components


class PatternId(Enum):
    P2P3 = "P2+P3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    FiveCap = "5-cap"
    FiveApple = "5-apple"
    Theta = "theta"
    P3 = "P3"
    TwoK2 = "2K2"
    ThreeK1 = "3K1"


_PATTERN_SPECS = {
    PatternId.P2P3: Union(Path(2), Path(3)),
    PatternId.C4: Cycle(4),
    PatternId.C5: Cycle(5),
    PatternId.C6: Cycle(6),
    PatternId.FiveCap: CAP5,
    PatternId.FiveApple: APPLE5,
    PatternId.Theta: Theta(1),
    PatternId.P3: Path(3),
    PatternId.TwoK2: Union(Complete(2), Complete(2)),
    PatternId.ThreeK1: EmptySet(3),
}


@lru_cache(maxsize=None)
def pattern_graph(pat: PatternId) -> Graph:
    return build_family(_PATTERN_SPECS[pat])


def _search_order(h: Graph) -> list[int]:
    """Pattern vertices ordered so each one (after the first) tends to touch
    an earlier one; this lets adjacency checks prune early."""
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        v = max(remaining, key=lambda x: ((h.rows[x] & placed).bit_count(), h.degree(x), -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def induced_embeddings(g: Graph, h: Graph, exact_degree: bool = False, first_only: bool = False,
                       compat=None):
    """Yield maps ``m`` (tuple, pattern vertex -> g vertex) such that ``m``
    is an isomorphism from ``h`` onto the subgraph of ``g`` it induces.
    ``compat(p, x)`` can veto individual assignments."""
    if h.n > g.n:
        return
    order = _search_order(h)
    # for each step: earlier pattern vertices, split into adjacent / nonadjacent
    earlier = [[order[j] for j in range(i)] for i in range(len(order))]
    gdeg = [g.degree(v) for v in range(g.n)]
    hdeg = [h.degree(v) for v in range(h.n)]
    image = [-1] * h.n
    used = 0

    def rec(i):
        nonlocal used
        if i == len(order):
            yield tuple(image)
            return
        p = order[i]
        need_adj = 0
        need_non = 0
        for q in earlier[i]:
            if h.rows[p] >> q & 1:
                need_adj |= 1 << image[q]
            else:
                need_non |= 1 << image[q]
        cand = g.full_mask & ~used
        if need_adj:
            for x in bits(need_adj):
                cand &= g.rows[x]
        for x in bits(cand):
            if g.rows[x] & need_non:
                continue
            if exact_degree:
                if gdeg[x] != hdeg[p]:
                    continue
            elif gdeg[x] < hdeg[p]:
                continue
            if compat is not None and not compat(p, x):
                continue
            image[p] = x
            used |= 1 << x
            yield from rec(i + 1)
            used &= ~(1 << x)
            image[p] = -1

    for emb in rec(0):
        yield emb
        if first_only:
            return


def find_induced(g: Graph, h: Graph) -> tuple[int, ...] | None:
    return next(induced_embeddings(g, h, first_only=True), None)


def has_induced(g: Graph, pat: PatternId) -> tuple[bool, tuple[int, ...] | None]:
    """Whether ``g`` contains ``pat`` as an induced subgraph, with a witness
    (g-vertices listed in the pattern's canonical numbering)."""
    w = find_induced(g, pattern_graph(pat))
    return w is not None, w


def _invariant(g: Graph):
    return g.n, g.m, tuple(sorted(g.degree(v) for v in range(g.n)))


def twin_classes(g: Graph) -> list[list[int]]:
    """Classes of true twins (equal closed neighbourhoods), ordered by least vertex."""
    by_nbhd: dict[int, list[int]] = {}
    for v in range(g.n):
        by_nbhd.setdefault(g.rows[v] | 1 << v, []).append(v)
    return sorted(by_nbhd.values())


def twin_quotient(g: Graph) -> tuple[Graph, list[list[int]]]:
    classes = twin_classes(g)
    rep = [c[0] for c in classes]
    return g.induced(rep), classes


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Map ``h``-vertex -> ``g``-vertex realising an isomorphism, or None.

    Works on the true-twin quotients with class sizes as weights, so large
    cliques of interchangeable vertices do not blow up the search."""
    if _invariant(g) != _invariant(h):
        return None
    qg, cg = twin_quotient(g)
    qh, ch = twin_quotient(h)
    if qg.n != qh.n or sorted(map(len, cg)) != sorted(map(len, ch)):
        return None
    qmap = next(induced_embeddings(qg, qh, exact_degree=True, first_only=True,
                                   compat=lambda p, x: len(ch[p]) == len(cg[x])), None)
    if qmap is None:
        return None
    iso = [0] * h.n
    for p, x in enumerate(qmap):
        for a, b in zip(ch[p], cg[x]):
            iso[a] = b
    return tuple(iso)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


# -- class membership -------------------------------------------------------

def has_c4(g: Graph) -> bool:
    for a in range(g.n):
        for c in range(a + 1, g.n):
            if g.adjacent(a, c):
                continue
            common = g.rows[a] & g.rows[c]
            for b in bits(common):
                if common & ~g.rows[b] & ~(1 << b):
                    return True
    return False


def has_p2p3(g: Graph) -> bool:
    for x, y in g.edges():
        rest = g.full_mask & ~(g.rows[x] | g.rows[y] | 1 << x | 1 << y)
        for comp in connected_components(g, bits(rest)):
            if not g.is_clique(comp):
                return True
    return False


def in_scope_class(g: Graph) -> bool:
    """(P2+P3, C4)-free."""
    return not has_c4(g) and not has_p2p3(g)


def is_p3_free(g: Graph, within: Sequence[int] | None = None) -> bool:
    comps = connected_components(g, within)
    return all(g.is_clique(c) for c in comps)


def is_three_k1_free(g: Graph, within: Sequence[int] | None = None) -> bool:
    vs = list(range(g.n)) if within is None else sorted(within)
    mask = 0
    for v in vs:
        mask |= 1 << v
    for i, a in enumerate(vs):
        non_a = mask & ~g.rows[a] & ~((1 << (a + 1)) - 1)
        for b in bits(non_a):
            if non_a & ~g.rows[b] & ~((1 << (b + 1)) - 1):
                return False
    return True
