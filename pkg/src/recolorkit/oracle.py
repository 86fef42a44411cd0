"""Brute-force ground truth on the reconfiguration graph R_ell(G).

Proper colorings are enumerated vertex by vertex with numpy (so only
partial proper colorings are ever stored, and the state budget bounds their
number rather than ell**n) and encoded as radix-ell integers,
vertex 0 most significant; sorting by code is lexicographic order.  The
reconfiguration graph is a scipy CSR matrix over state indices.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components, shortest_path

from .errors import ParameterError, SizeLimit
from .graph import Graph, check_proper
from .paths import RecolorPath, make_path

DEFAULT_BUDGET = 10**7
DIAMETER_BUDGET = 10**5


def state_budget() -> int:
    """Bound on the number of (partial) proper colorings the oracle may hold;
    the RECOLOR_BUDGET environment variable overrides it."""
    raw = os.environ.get("RECOLOR_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(float(raw))
    except ValueError:
        raise ParameterError(f"RECOLOR_BUDGET must be a number, got {raw!r}") from None


def _budget_of(budget) -> int:
    return state_budget() if budget is None else budget


def _enumerate(g: Graph, ell: int, budget=None) -> np.ndarray:
    """Proper colorings, grown one vertex at a time; raises SizeLimit as soon
    as a layer of partial proper colorings would exceed ``budget``."""
    if ell < 1:
        raise ParameterError("ell must be positive")
    budget = _budget_of(budget)
    states = np.zeros((1, 0), dtype=np.int8)
    palette = np.arange(1, ell + 1, dtype=np.int8)
    for v in range(g.n):
        k = states.shape[0]
        if k * ell > budget:
            raise SizeLimit(f"more than {budget} partial colorings at vertex {v + 1} (ell={ell})")
        ext = np.empty((k * ell, v + 1), dtype=np.int8)
        ext[:, :v] = np.repeat(states, ell, axis=0)
        ext[:, v] = np.tile(palette, k)
        keep = np.ones(len(ext), dtype=bool)
        for u in g.nbrs[v]:
            if u < v:
                keep &= ext[:, u] != ext[:, v]
        states = ext[keep]
    return states


def enumerate_colorings(g: Graph, ell: int, budget: int | None = None) -> np.ndarray:
    """All proper ell-colorings as rows of an int8 array, in lexicographic order."""
    return _enumerate(g, ell, budget)


def iter_colorings(g: Graph, ell: int, budget: int | None = None):
    for row in enumerate_colorings(g, ell, budget):
        yield tuple(int(x) for x in row)


def _codes(states: np.ndarray, ell: int) -> np.ndarray:
    n = states.shape[1]
    weights = ell ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (states.astype(np.int64) - 1) @ weights


class Reconfig:
    """R_ell(G) materialised as a sparse adjacency matrix."""

    def __init__(self, g: Graph, ell: int, budget: int | None = None):
        self.g, self.ell = g, ell
        self.states = _enumerate(g, ell, budget)
        self.codes = _codes(self.states, ell)
        n, S = g.n, len(self.states)
        weights = ell ** np.arange(n - 1, -1, -1, dtype=np.int64)
        src, dst = [], []
        idx = np.arange(S)
        for v in range(n):
            nb = sorted(g.nbrs[v])
            cur = self.states[:, v]
            for c in range(1, ell + 1):
                ok = cur != c
                for u in nb:
                    ok &= self.states[:, u] != c
                if not ok.any():
                    continue
                s = idx[ok]
                target = self.codes[ok] + (c - cur[ok].astype(np.int64)) * weights[v]
                src.append(s.astype(np.int32))
                dst.append(np.searchsorted(self.codes, target).astype(np.int32))
        if src:
            src_a, dst_a = np.concatenate(src), np.concatenate(dst)
        else:
            src_a = dst_a = np.zeros(0, dtype=np.int32)
        self.adj = csr_matrix((np.ones(len(src_a), dtype=np.int8), (src_a, dst_a)), shape=(S, S))
        self.ncomp, self.labels = connected_components(self.adj, directed=False)

    def __len__(self):
        return len(self.states)

    def index(self, coloring) -> int:
        code = int(_codes(np.asarray([coloring], dtype=np.int8), self.ell)[0])
        i = int(np.searchsorted(self.codes, code))
        if i >= len(self.codes) or self.codes[i] != code:
            raise ParameterError("not a proper coloring of this graph")
        return i

    def state(self, i) -> tuple:
        return tuple(int(x) for x in self.states[i])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.adj.indptr)

    def component_sizes(self) -> list[int]:
        return sorted(np.bincount(self.labels, minlength=self.ncomp).tolist(), reverse=True)

    def bfs(self, i):
        order, pred = breadth_first_order(self.adj, i, directed=False, return_predecessors=True)
        return order, pred

    def distances(self, i) -> np.ndarray:
        return shortest_path(self.adj, unweighted=True, directed=False, indices=i)

    def quotient_component_count(self) -> int:
        """Components counted up to permutation of the colors."""
        first = np.zeros_like(self.states)
        # relabel colors by order of first appearance along the vertex order
        for r in range(len(self.states)):
            seen = {}
            row = self.states[r]
            for j, c in enumerate(row):
                seen.setdefault(int(c), len(seen) + 1)
                first[r, j] = seen[int(c)]
        norm = _codes(first, self.ell)
        best = np.full(self.ncomp, np.iinfo(np.int64).max)
        np.minimum.at(best, self.labels, norm)
        return len(np.unique(best))

    def diameter(self, budget: int = DIAMETER_BUDGET) -> int | None:
        """Exact diameter of the largest component (bounding-diameters
        BFS scheme), or None if that component exceeds ``budget``."""
        sizes = np.bincount(self.labels)
        big = int(np.argmax(sizes))
        if len(self) > budget:
            return None
        members = np.flatnonzero(self.labels == big)
        lo = np.zeros(len(self), dtype=np.int64)
        hi = np.full(len(self), np.iinfo(np.int64).max)
        cand = set(members.tolist())
        best = 0
        pick_high = True
        while cand:
            cl = np.fromiter(cand, dtype=np.int64)
            v = int(cl[np.argmax(hi[cl])]) if pick_high else int(cl[np.argmin(lo[cl])])
            pick_high = not pick_high
            d = self.distances(v)
            dm = d[members]
            ecc = int(dm.max())
            best = max(best, ecc)
            dmi = dm.astype(np.int64)
            lo[members] = np.maximum(lo[members], np.maximum(dmi, ecc - dmi))
            hi[members] = np.minimum(hi[members], ecc + dmi)
            lo[v] = hi[v] = ecc
            best = max(best, int(lo[members].max()))
            cand = {x for x in cand if hi[x] > best and lo[x] != hi[x]}
        return best


@lru_cache(maxsize=32)
def _cached(g: Graph, ell: int, budget):
    return Reconfig(g, ell, budget)


def reconfig(g: Graph, ell: int, budget: int | None = None) -> Reconfig:
    budget = state_budget() if budget is None else budget
    return _cached(g, ell, budget)


@dataclass(frozen=True)
class ReconfigSummary:
    ell: int
    state_count: int
    component_count: int
    frozen_count: int
    diameter: int | None
    component_sizes: tuple
    quotient_components: int | None = None

    @property
    def mixing(self) -> bool:
        return self.component_count <= 1


def build_reconfig(g: Graph, ell: int, budget: int | None = None,
                   diameter_budget: int = DIAMETER_BUDGET, quotient: bool = False) -> ReconfigSummary:
    r = reconfig(g, ell, budget)
    diam = r.diameter(diameter_budget) if len(r) else None
    return ReconfigSummary(
        ell=ell,
        state_count=len(r),
        component_count=int(r.ncomp) if len(r) else 0,
        frozen_count=int((r.degrees == 0).sum()) if g.n else 0,
        diameter=diam,
        component_sizes=tuple(r.component_sizes()),
        quotient_components=r.quotient_component_count() if quotient else None,
    )


def is_mixing(g: Graph, ell: int, budget: int | None = None) -> bool:
    r = reconfig(g, ell, budget)
    return r.ncomp <= 1


def reconfig_diameter(g: Graph, ell: int, budget: int | None = None,
                      diameter_budget: int = DIAMETER_BUDGET) -> int | None:
    """Diameter of R_ell(G); None when R_ell(G) is disconnected."""
    r = reconfig(g, ell, budget)
    if r.ncomp > 1:
        return None
    if len(r) > diameter_budget:
        raise SizeLimit(f"{len(r)} states exceed the diameter budget {diameter_budget}")
    return r.diameter(diameter_budget)


def oracle_distance(g: Graph, start, target, ell: int, budget: int | None = None) -> int | None:
    r = reconfig(g, ell, budget)
    i, j = r.index(start), r.index(target)
    if r.labels[i] != r.labels[j]:
        return None
    return int(r.distances(i)[j])


def oracle_path(g: Graph, start, target, ell: int, budget: int | None = None) -> RecolorPath | None:
    """A shortest path from ``start`` to ``target`` in R_ell(G), or None."""
    r = reconfig(g, ell, budget)
    i, j = r.index(start), r.index(target)
    if r.labels[i] != r.labels[j]:
        return None
    _, pred = r.bfs(i)
    chain = [j]
    while chain[-1] != i:
        chain.append(int(pred[chain[-1]]))
    chain.reverse()
    steps = []
    for a, b in zip(chain, chain[1:]):
        sa, sb = r.states[a], r.states[b]
        (v,) = np.flatnonzero(sa != sb)
        steps.append((int(v), int(sb[v])))
    return make_path(g, ell, tuple(start), steps)


def find_frozen(g: Graph, ell: int, budget: int | None = None) -> list[tuple]:
    """Every frozen ell-coloring (direct scan, no reconfiguration graph)."""
    states = enumerate_colorings(g, ell, budget)
    if not len(states):
        return []
    full = (1 << ell) - 1
    bitsets = np.left_shift(np.int64(1), states.astype(np.int64) - 1)
    frozen = np.ones(len(states), dtype=bool)
    for v in range(g.n):
        seen = bitsets[:, v].copy()
        for u in g.nbrs[v]:
            seen |= bitsets[:, u]
        frozen &= seen == full
    return [tuple(int(x) for x in row) for row in states[frozen]]


def same_component(g: Graph, a, b, ell: int, budget: int | None = None) -> bool:
    for c in (a, b):
        if not check_proper(g, list(c), ell):
            raise ParameterError("colorings must be proper")
    r = reconfig(g, ell, budget)
    return r.labels[r.index(a)] == r.labels[r.index(b)]


def lazy_path(g: Graph, start, target, ell: int, limit: int | None = None,
              weight: float = 2.0) -> RecolorPath | None:
    """Weighted best-first search in R_ell(G) that never enumerates the state
    space; the heuristic counts vertices still off target.  Returns None when
    the search space is exhausted, raises SizeLimit after ``limit`` expansions."""
    limit = state_budget() if limit is None else limit
    start, target = tuple(start), tuple(target)
    for c in (start, target):
        if not check_proper(g, list(c), ell):
            raise ParameterError("colorings must be proper")
    h = lambda s: sum(a != b for a, b in zip(s, target))
    parent = {start: None}
    dist = {start: 0}
    heap = [(weight * h(start), 0, start)]
    expanded = 0
    while heap:
        _, d, s = heapq.heappop(heap)
        if s == target:
            steps = []
            while parent[s] is not None:
                prev, v = parent[s]
                steps.append((v, s[v]))
                s = prev
            return make_path(g, ell, start, steps[::-1])
        if d > dist[s]:
            continue
        expanded += 1
        if expanded > limit:
            raise SizeLimit(f"lazy search gave up after {limit} expansions")
        # recolor vertices that are off target first
        for v in sorted(range(g.n), key=lambda x: s[x] == target[x]):
            blocked = {s[u] for u in g.nbrs[v]}
            for c in range(1, ell + 1):
                if c == s[v] or c in blocked:
                    continue
                t = s[:v] + (c,) + s[v + 1:]
                if d + 1 < dist.get(t, 1 << 60):
                    dist[t] = d + 1
                    parent[t] = (s, v)
                    heapq.heappush(heap, (d + 1 + weight * h(t), d + 1, t))
    return None
