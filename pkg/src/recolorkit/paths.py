"""Recoloring sequences.

A ``RecolorPath`` is a start coloring plus single-vertex steps.  The
``Recorder`` is the mutable workspace the constructions write into: every
``set`` call is checked for properness on the spot, so a construction that
goes wrong fails at the offending step rather than at the end.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FormatError, InternalError
from .graph import Graph, check_proper


@dataclass(frozen=True)
class RecolorStep:
    vertex: int
    new_color: int


@dataclass(frozen=True)
class RecolorPath:
    graph: Graph
    ell: int
    start: tuple
    steps: tuple   # of RecolorStep

    def __post_init__(self):
        self.validate()

    def validate(self):
        g, col = self.graph, list(self.start)
        if not check_proper(g, col, self.ell):
            raise InternalError("start coloring is not proper")
        for i, st in enumerate(self.steps):
            v, c = st.vertex, st.new_color
            if not (0 <= v < g.n and 1 <= c <= self.ell):
                raise InternalError(f"step {i}: vertex {v + 1} / color {c} out of range")
            if col[v] == c:
                raise InternalError(f"step {i}: vertex {v + 1} already has color {c}")
            if any(col[u] == c for u in g.nbrs[v]):
                raise InternalError(f"step {i}: color {c} clashes at vertex {v + 1}")
            col[v] = c
        object.__setattr__(self, "_end", tuple(col))

    @property
    def end(self) -> tuple:
        return self._end

    def __len__(self):
        return len(self.steps)

    def counts(self) -> list[int]:
        """Number of recolorings of each vertex."""
        c = Counter(st.vertex for st in self.steps)
        return [c.get(v, 0) for v in range(self.graph.n)]

    def max_per_vertex(self) -> int:
        return max(self.counts(), default=0)

    def colorings(self):
        col = list(self.start)
        yield tuple(col)
        for st in self.steps:
            col[st.vertex] = st.new_color
            yield tuple(col)

    def reversed(self) -> "RecolorPath":
        cols = list(self.colorings())
        steps = []
        for i in range(len(self.steps) - 1, -1, -1):
            v = self.steps[i].vertex
            steps.append(RecolorStep(v, cols[i][v]))
        return RecolorPath(self.graph, self.ell, self.end, tuple(steps))

    def format(self) -> str:
        lines = [f"path {self.graph.n} {self.ell} {len(self.steps)}"]
        col = list(self.start)
        for st in self.steps:
            lines.append(f"r {st.vertex + 1} {col[st.vertex]} {st.new_color}")
            col[st.vertex] = st.new_color
        lines.append("end")
        return "\n".join(lines) + "\n"


def make_path(g: Graph, ell: int, start: Sequence[int], steps: Iterable[tuple[int, int]]) -> RecolorPath:
    return RecolorPath(g, ell, tuple(start), tuple(RecolorStep(v, c) for v, c in steps))


def parse_path(text: str, g: Graph, start: Sequence[int]) -> RecolorPath:
    """Read the text form back; old colors are cross-checked against the replay."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or rows[0][0] != "path" or len(rows[0]) != 4:
        raise FormatError("missing 'path n ell steps' header")
    try:
        n, ell, k = (int(x) for x in rows[0][1:])
    except ValueError:
        raise FormatError("bad path header") from None
    if n != g.n or rows[-1] != ["end"] or len(rows) != k + 2:
        raise FormatError("path header does not match body")
    col = list(start)
    steps = []
    for row in rows[1:-1]:
        if len(row) != 4 or row[0] != "r":
            raise FormatError(f"bad step line {' '.join(row)!r}")
        v, old, new = (int(x) for x in row[1:])
        if not 1 <= v <= n or col[v - 1] != old:
            raise FormatError(f"step {' '.join(row)!r} disagrees with the replayed coloring")
        col[v - 1] = new
        steps.append((v - 1, new))
    return make_path(g, ell, start, steps)


class Recorder:
    """Working coloring plus the steps taken so far.

    Vertices in ``ignore`` are treated as absent: their colors are neither
    read for properness nor allowed to change.  ``set`` enforces properness
    among the remaining vertices.
    """

    def __init__(self, g: Graph, colors: Sequence[int], ell: int, ignore: Iterable[int] = ()):
        self.g = g
        self.ell = ell
        self.col = list(colors)
        self.ignore = frozenset(ignore)
        self.steps: list[tuple[int, int]] = []

    def child(self, extra_ignore: Iterable[int] = ()) -> "Recorder":
        return Recorder(self.g, self.col, self.ell, self.ignore | set(extra_ignore))

    def __getitem__(self, v):
        return self.col[v]

    def used(self, vertices: Iterable[int]) -> set:
        return {self.col[v] for v in vertices}

    def nbr_colors(self, v: int) -> set:
        return {self.col[u] for u in self.g.nbrs[v] if u not in self.ignore}

    def can_set(self, v: int, c: int) -> bool:
        return c not in self.nbr_colors(v)

    def set(self, v: int, c: int):
        if v in self.ignore:
            raise InternalError(f"vertex {v + 1} is outside this workspace")
        if not 1 <= c <= self.ell:
            raise InternalError(f"color {c} outside [1, {self.ell}]")
        if self.col[v] == c:
            return
        if c in self.nbr_colors(v):
            raise InternalError(f"recoloring vertex {v + 1} to {c} clashes with a neighbour")
        self.col[v] = c
        self.steps.append((v, c))

    def free_color(self, v: int, palette: Sequence[int], avoid: Iterable[int] = (), prefer=None):
        """A palette color not seen in N[v] (nor in ``avoid``); ``prefer``
        first if allowed, else the least one."""
        bad = self.nbr_colors(v) | {self.col[v]} | set(avoid)
        if prefer is not None and prefer in palette and prefer not in bad:
            return prefer
        for c in palette:
            if c not in bad:
                return c
        raise InternalError(f"no free color for vertex {v + 1}")

    def replay(self, steps: Iterable[tuple[int, int]]):
        for v, c in steps:
            self.set(v, c)

    def path(self, start: Sequence[int]) -> RecolorPath:
        return make_path(self.g, self.ell, start, self.steps)


def reverse_steps(start: Sequence[int], steps: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Steps leading from the end of ``steps`` back to ``start``."""
    col = list(start)
    olds = []
    for v, c in steps:
        olds.append((v, col[v]))
        col[v] = c
    return olds[::-1]


def end_of(start: Sequence[int], steps: Iterable[tuple[int, int]]) -> list[int]:
    col = list(start)
    for v, c in steps:
        col[v] = c
    return col
