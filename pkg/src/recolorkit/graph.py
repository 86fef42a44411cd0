"""Immutable simple graphs and the basic invariants used everywhere else.

Vertices are ``0..n-1``.  Adjacency is stored as one Python int per vertex
(bit ``u`` of ``rows[v]`` is set iff ``uv`` is an edge), which keeps subset
and neighbourhood tests cheap for the desk-scale graphs this package targets.
Colorings are plain tuples with colors in ``1..ell``; file formats use
1-based vertex indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import FormatError, SizeLimit

CHROMATIC_LIMIT = 64


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("need one adjacency row per vertex")
        for v, row in enumerate(self.rows):
            if row >> self.n:
                raise ValueError(f"row {v} mentions a vertex outside [0, n)")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    @cached_property
    def nbrs(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(bits(r)) for r in self.rows)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``; local vertex ``i`` is ``vertices[i]``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(to_mask(index[u] for u in bits(self.rows[v]) if u in index))
        return Graph(len(vertices), tuple(rows))

    def remove(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        drop = set(vertices)
        keep = [v for v in range(self.n) if v not in drop]
        return self.induced(keep), keep

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = to_mask(perm[u] for u in bits(self.rows[v]))
        return Graph(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = to_mask(vs)
        return all((self.rows[v] | 1 << v) & mask == mask for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = to_mask(vs)
        return all(self.rows[v] & mask == 0 for v in vs)

    def complete_to(self, xs: Iterable[int], ys: Iterable[int]) -> bool:
        ym = to_mask(ys)
        return all(self.rows[x] & ym == ym for x in xs)

    def anticomplete_to(self, xs: Iterable[int], ys: Iterable[int]) -> bool:
        ym = to_mask(ys)
        return all(self.rows[x] & ym == 0 for x in xs)


# -- basic invariants -------------------------------------------------------

def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Components (sorted lists) ordered by least vertex."""
    allowed = g.full_mask if within is None else to_mask(within)
    seen = 0
    comps = []
    for s in bits(allowed):
        if seen >> s & 1:
            continue
        comp_mask = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.rows[v]
            nxt &= allowed & ~comp_mask
            comp_mask |= nxt
            frontier = nxt
        seen |= comp_mask
        comps.append(list(bits(comp_mask)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def universal_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.rows[v] == 0]


def find_comparable_pair(g: Graph) -> tuple[int, int] | None:
    """Lexicographically least ``(u, v)``, u and v nonadjacent, with N(u) ⊆ N(v)."""
    for u in range(g.n):
        ru = g.rows[u]
        for v in range(g.n):
            if v != u and not ru >> v & 1 and ru & g.rows[v] == ru:
                return u, v
    return None


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Smallest-last elimination.  Returns ``(d, order)``; each vertex has at
    most ``d`` neighbours later in ``order``."""
    alive = g.full_mask
    order = []
    d = 0
    for _ in range(g.n):
        v = min(bits(alive), key=lambda x: ((g.rows[x] & alive).bit_count(), x))
        d = max(d, (g.rows[v] & alive).bit_count())
        order.append(v)
        alive &= ~(1 << v)
    return d, order


def is_peo(g: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(g.n)):
        return False
    later = g.full_mask
    for v in order:
        later &= ~(1 << v)
        if not g.is_clique(bits(g.rows[v] & later)):
            return False
    return True


def is_chordal(g: Graph) -> list[int] | None:
    """Perfect elimination order via maximum cardinality search, or None."""
    weight = [0] * g.n
    numbered = 0
    mcs = []
    for _ in range(g.n):
        v = max((x for x in range(g.n) if not numbered >> x & 1), key=lambda x: (weight[x], -x))
        mcs.append(v)
        numbered |= 1 << v
        for u in bits(g.rows[v] & ~numbered):
            weight[u] += 1
    peo = mcs[::-1]
    return peo if is_peo(g, peo) else None


def greedy_clique(g: Graph) -> list[int]:
    best: list[int] = []
    for s in range(g.n):
        clique = [s]
        cand = g.rows[s]
        while cand:
            v = max(bits(cand), key=lambda x: ((g.rows[x] & cand).bit_count(), -x))
            clique.append(v)
            cand &= g.rows[v]
        if len(clique) > len(best):
            best = sorted(clique)
    return best


def clique_number(g: Graph) -> int:
    """Exact clique number (Bron–Kerbosch with pivoting)."""
    best = 0

    def expand(size, cand, excl):
        nonlocal best
        if not cand and not excl:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        pivot = max(bits(cand | excl), key=lambda x: (g.rows[x] & cand).bit_count())
        for v in bits(cand & ~g.rows[pivot]):
            expand(size + 1, cand & g.rows[v], excl & g.rows[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, g.full_mask, 0)
    return best


def _dsatur(g: Graph) -> list[int]:
    col = [0] * g.n
    for _ in range(g.n):
        v = max(
            (x for x in range(g.n) if not col[x]),
            key=lambda x: (len({col[u] for u in g.nbrs[x]} - {0}), g.degree(x), -x),
        )
        used = {col[u] for u in g.nbrs[v]}
        c = 1
        while c in used:
            c += 1
        col[v] = c
    return col


def chromatic_number(g: Graph, limit: int = CHROMATIC_LIMIT) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number and a certificate coloring using exactly that many colors.

    Branch and bound over DSATUR order seeded by a greedy clique.  Graphs with
    more than ``limit`` vertices are refused.
    """
    if g.n > limit:
        raise SizeLimit(f"chromatic_number is limited to {limit} vertices (got {g.n})")
    if g.n == 0:
        return 0, ()
    clique = greedy_clique(g)
    best = _dsatur(g)
    best_k = max(best)
    lower = len(clique)
    if best_k == lower:
        return best_k, tuple(best)

    col = [0] * g.n
    # pre-colour the clique; it fixes the colour symmetry
    for i, v in enumerate(clique):
        col[v] = i + 1

    def search(ncolored, used):
        nonlocal best, best_k
        if best_k == lower:
            return
        if ncolored == g.n:
            best, best_k = col[:], used
            return
        v = max(
            (x for x in range(g.n) if not col[x]),
            key=lambda x: (len({col[u] for u in g.nbrs[x]} - {0}), g.degree(x), -x),
        )
        forbidden = {col[u] for u in g.nbrs[v]}
        for c in range(1, min(used + 1, best_k - 1) + 1):
            if c in forbidden:
                continue
            col[v] = c
            search(ncolored + 1, max(used, c))
            col[v] = 0
            if best_k == lower:
                return

    search(len(clique), len(clique))
    return best_k, tuple(best)


def chi(g: Graph) -> int:
    return chromatic_number(g)[0]


# -- colorings --------------------------------------------------------------

def _check_assignment(g: Graph, colors: Sequence[int], ell: int):
    if len(colors) != g.n:
        raise FormatError(f"coloring has {len(colors)} entries, graph has {g.n} vertices")
    for c in colors:
        if not isinstance(c, int) or isinstance(c, bool) or not 1 <= c <= ell:
            raise FormatError(f"color {c!r} outside [1, {ell}]")


def check_proper(g: Graph, colors: Sequence[int], ell: int) -> bool:
    _check_assignment(g, colors, ell)
    return all(colors[u] != colors[v] for u, v in g.edges())


def check_frozen(g: Graph, colors: Sequence[int], ell: int) -> bool:
    """True iff every closed neighbourhood sees all ``ell`` colors."""
    if not check_proper(g, colors, ell):
        return False
    full = set(range(1, ell + 1))
    return all({colors[v]} | {colors[u] for u in g.nbrs[v]} == full for v in range(g.n))


def check_locked(g: Graph, colors: Sequence[int], ell: int, vertices: Iterable[int]) -> bool:
    """True iff ``vertices`` is nonempty and each of them sees all ``ell`` colors
    inside the set, so their colors are fixed along every recoloring sequence."""
    if not check_proper(g, colors, ell):
        return False
    vs = set(vertices)
    full = set(range(1, ell + 1))
    return bool(vs) and all({colors[v]} | {colors[u] for u in g.nbrs[v] if u in vs} == full
                            for v in vs)


def color_classes(colors: Sequence[int] | dict) -> frozenset:
    """Partition of the vertices induced by a coloring (labels forgotten)."""
    items = colors.items() if isinstance(colors, dict) else enumerate(colors)
    classes: dict[int, list[int]] = {}
    for v, c in items:
        classes.setdefault(c, []).append(v)
    return frozenset(frozenset(vs) for vs in classes.values())


# -- file formats -----------------------------------------------------------

def format_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = None
    m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge" or n is not None:
                raise FormatError(f"line {lineno}: bad problem line {raw!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"line {lineno}: bad problem line {raw!r}") from None
        elif parts[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            try:
                u, v = int(parts[1]), int(parts[2])
            except (ValueError, IndexError):
                raise FormatError(f"line {lineno}: bad edge line {raw!r}") from None
            if len(parts) != 3 or not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise FormatError(f"line {lineno}: bad edge {raw!r}")
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"line {lineno}: unknown line {raw!r}")
    if n is None:
        raise FormatError("missing 'p edge' line")
    g = Graph.from_edges(n, edges)
    if g.m != m or len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)} ({g.m} distinct)")
    return g


def format_coloring(colors: Sequence[int], ell: int) -> str:
    return f"{ell}\n" + " ".join(str(c) for c in colors) + "\n"


def parse_coloring(text: str, n: int | None = None) -> tuple[int, tuple[int, ...]]:
    tokens = text.split()
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise FormatError("coloring file must contain integers only") from None
    if not values:
        raise FormatError("empty coloring file")
    ell, colors = values[0], tuple(values[1:])
    if ell < 1:
        raise FormatError("ell must be positive")
    if n is not None and len(colors) != n:
        raise FormatError(f"coloring has {len(colors)} entries, expected {n}")
    if any(not 1 <= c <= ell for c in colors):
        raise FormatError(f"colors must lie in [1, {ell}]")
    return ell, colors


def random_coloring(g: Graph, ell: int, rng) -> tuple[int, ...]:
    """A random proper ell-coloring (randomised backtracking, so it never
    gets stuck when one exists)."""
    order = list(range(g.n))
    rng.shuffle(order)
    col = [0] * g.n

    def go(i):
        if i == g.n:
            return True
        v = order[i]
        choices = [c for c in range(1, ell + 1) if all(col[u] != c for u in g.nbrs[v])]
        rng.shuffle(choices)
        for c in choices:
            col[v] = c
            if go(i + 1):
                return True
        col[v] = 0
        return False

    if not go(0):
        raise ValueError(f"graph has no proper {ell}-coloring")
    return tuple(col)
