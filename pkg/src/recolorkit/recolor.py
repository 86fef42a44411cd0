"""Recoloring primitives.

Each primitive comes in two layers: a ``*_steps`` function that writes
into a :class:`Recorder` while only using colors from a given palette, and
a public ``*_path`` function on whole graphs that validates its inputs and
returns a checked :class:`RecolorPath`.  The palette argument is how callers
keep a piece of the graph away from colors held by the rest of it.
"""

from __future__ import annotations

from typing import Sequence

from .errors import (ClassMismatch, InternalError, NoSpareColor, NotChordal, NotComparable,
                     NotMixingAtEll, NotP3Free, NotThreeK1Free, PaletteClash, ParameterError,
                     SizeLimit, ThresholdTooLow)
from .graph import Graph, check_proper, color_classes, connected_components, is_peo
from .patterns import is_p3_free, is_three_k1_free
from .paths import RecolorPath, Recorder, make_path, reverse_steps


def _need_proper(g: Graph, colors, ell, what):
    if len(colors) != g.n or not check_proper(g, list(colors), ell):
        raise ParameterError(f"{what} is not a proper {ell}-coloring")


# -- renaming ---------------------------------------------------------------

def rename_classes(rec: Recorder, classes: Sequence[Sequence[int]], targets: Sequence[int],
                   palette: Sequence[int]):
    """Give each (currently monochromatic) class its target color.

    A class moves straight to its target when no other class holds it;
    when every pending target is held, the least pending class parks on
    the least palette color no class holds.  Each vertex moves at most twice.
    """
    classes = [list(c) for c in classes]
    cur = [rec[c[0]] for c in classes]
    for c, col in zip(classes, cur):
        if any(rec[x] != col for x in c):
            raise InternalError("class is not monochromatic")
    pending = [i for i in range(len(classes)) if cur[i] != targets[i]]

    def move(i, col):
        for x in classes[i]:
            rec.set(x, col)
        cur[i] = col

    while pending:
        held = set(cur)
        ready = next((i for i in pending if targets[i] not in held), None)
        if ready is not None:
            move(ready, targets[ready])
            pending.remove(ready)
            continue
        spare = next((c for c in palette if c not in held), None)
        if spare is None:
            raise NoSpareColor("every palette color is held by a class")
        move(pending[0], spare)


def renaming_path(g: Graph, phi, psi, ell: int) -> RecolorPath:
    """Path between two colorings with the same color classes, each
    vertex recolored at most twice (needs ell above the number of classes)."""
    _need_proper(g, phi, ell, "start")
    _need_proper(g, psi, ell, "target")
    cp, cq = color_classes(phi), color_classes(psi)
    if cp != cq:
        raise ClassMismatch("the two colorings have different color classes")
    if ell <= len(cp):
        raise NoSpareColor(f"ell={ell} leaves no spare color for {len(cp)} classes")
    classes = sorted(sorted(c) for c in cp)
    rec = Recorder(g, phi, ell)
    rename_classes(rec, classes, [psi[c[0]] for c in classes], range(1, ell + 1))
    return rec.path(phi)


# -- cluster graphs ---------------------------------------------------------

def cluster_steps(rec: Recorder, vertices: Sequence[int], target, palette: Sequence[int]):
    """Recolor a P3-free piece clique by clique; ``target`` maps vertex -> color."""
    for comp in connected_components(rec.g, vertices):
        rename_classes(rec, [[x] for x in comp], [target[x] for x in comp], palette)


def cluster_reference(g: Graph, vertices: Sequence[int], palette: Sequence[int]) -> dict:
    """Each clique gets the first palette colors in vertex order."""
    ref = {}
    for comp in connected_components(g, vertices):
        for i, x in enumerate(sorted(comp)):
            ref[x] = palette[i]
    return ref


def cluster_path(g: Graph, phi, psi, ell: int) -> RecolorPath:
    if not is_p3_free(g):
        raise NotP3Free("graph has an induced P3")
    _need_proper(g, phi, ell, "start")
    _need_proper(g, psi, ell, "target")
    rec = Recorder(g, phi, ell)
    for comp in connected_components(g):
        if len(comp) >= ell:
            raise NoSpareColor(f"a clique of size {len(comp)} needs ell > {len(comp)}")
    cluster_steps(rec, range(g.n), psi, range(1, ell + 1))
    return rec.path(phi)


# -- chordal graphs ---------------------------------------------------------

def chordal_reference(g: Graph, peo: Sequence[int], palette: Sequence[int]) -> dict:
    """Greedy coloring along the reversed elimination order (uses omega colors)."""
    ref: dict = {}
    for v in reversed(peo):
        taken = {ref[u] for u in g.nbrs[v] if u in ref}
        ref[v] = next(c for c in palette if c not in taken)
    return ref


def _next_use(steps, start, nb, color):
    for j in range(start, len(steps)):
        x, c = steps[j]
        if c == color and x in nb:
            return j
    return len(steps) + 1


def chordal_steps(rec: Recorder, peo: Sequence[int], target, palette: Sequence[int]):
    """Reach ``target`` on the vertices of ``peo`` (a perfect elimination
    order of the piece they induce).  The first vertex is simplicial: solve
    the rest without it, then replay, dodging whenever a neighbour is about
    to take its color."""
    if not peo:
        return
    v, rest = peo[0], list(peo[1:])
    child = rec.child([v])
    chordal_steps(child, rest, target, palette)
    steps = child.steps
    nb = rec.g.nbrs[v] & set(rest)
    for i, (x, c) in enumerate(steps):
        if x in nb and c == rec[v]:
            bad = rec.nbr_colors(v) | {rec[v], c}
            options = [d for d in palette if d not in bad]
            if not options:
                raise InternalError(f"no dodge color for simplicial vertex {v + 1}")
            key = lambda d: (_next_use(steps, i + 1, nb, d), d == target[v], -d)
            rec.set(v, max(options, key=key))
        rec.set(x, c)
    rec.set(v, target[v])


def chordal_path(g: Graph, peo: Sequence[int], phi, psi, ell: int) -> RecolorPath:
    if not is_peo(g, peo):
        raise NotChordal("the given order is not a perfect elimination order")
    _need_proper(g, phi, ell, "start")
    _need_proper(g, psi, ell, "target")
    omega = max((1 + sum(1 for u in g.nbrs[v] if list(peo).index(u) > i)
                 for i, v in enumerate(peo)), default=0)
    if ell <= omega:
        raise NoSpareColor(f"ell={ell} does not exceed the clique number {omega}")
    rec = Recorder(g, phi, ell)
    chordal_steps(rec, list(peo), psi, range(1, ell + 1))
    path = rec.path(phi)
    if path.max_per_vertex() > 2 * g.n:
        raise InternalError("chordal path exceeds 2n recolorings at a vertex")
    return path


# -- cycles -----------------------------------------------------------------

def cyclic_order(g: Graph, vertices: Sequence[int]) -> list[int]:
    vs = set(vertices)
    start = min(vs)
    order = [start]
    prev = None
    while True:
        nxt = min(u for u in g.nbrs[order[-1]] if u in vs and u != prev)
        if nxt == start:
            break
        prev = order[-1]
        order.append(nxt)
    if len(order) != len(vs):
        raise ParameterError("vertices do not induce a cycle")
    return order


def cycle_steps(rec: Recorder, order: Sequence[int], target, palette: Sequence[int]):
    """Sweep around the cycle setting each vertex to its target, first
    pushing a not-yet-fixed neighbour off that color if it holds it."""
    k = len(order)
    for i in range(k):
        v, want = order[i], target[order[i]]
        ahead = [order[(i + 1) % k]] if i + 1 < k else []
        if i == 0 and k > 2:
            ahead.append(order[-1])
        for w in ahead:
            if rec[w] == want:
                rec.set(w, rec.free_color(w, palette, avoid=(want,), prefer=target[w]))
        rec.set(v, want)


def cycle_path(g: Graph, phi, psi, ell: int) -> RecolorPath:
    if g.n < 3 or any(g.degree(v) != 2 for v in range(g.n)) or len(connected_components(g)) != 1:
        raise ParameterError("cycle_path needs a cycle")
    if ell < 4:
        raise ThresholdTooLow("cycle recoloring needs ell >= 4")
    _need_proper(g, phi, ell, "start")
    _need_proper(g, psi, ell, "target")
    rec = Recorder(g, phi, ell)
    cycle_steps(rec, cyclic_order(g, range(g.n)), psi, range(1, ell + 1))
    path = rec.path(phi)
    if len(path) > 4 * g.n:
        raise InternalError("cycle path longer than 4n")
    return path


# -- 3K1-free graphs and other small pieces: breadth-first search ------------

def oracle_steps(rec: Recorder, vertices: Sequence[int], target, palette: Sequence[int],
                 budget: int | None = None):
    """Shortest path inside the piece induced by ``vertices`` using only
    ``palette`` (colors are renumbered 1..k for the search)."""
    from .oracle import lazy_path, oracle_path

    vs = sorted(vertices)
    pal = list(palette)
    code = {c: i + 1 for i, c in enumerate(pal)}
    sub = rec.g.induced(vs)
    try:
        start = tuple(code[rec[x]] for x in vs)
        goal = tuple(code[target[x]] for x in vs)
    except KeyError:
        raise InternalError("piece uses a color outside its palette") from None
    try:
        path = oracle_path(sub, start, goal, len(pal), budget)
    except SizeLimit:
        path = lazy_path(sub, start, goal, len(pal), budget)
    if path is None:
        raise NotMixingAtEll("the two colorings lie in different components")
    for st in path.steps:
        rec.set(vs[st.vertex], pal[st.new_color - 1])


def three_k1_path(g: Graph, phi, psi, ell: int, budget: int | None = None) -> RecolorPath:
    if not is_three_k1_free(g):
        raise NotThreeK1Free("graph has three pairwise nonadjacent vertices")
    _need_proper(g, phi, ell, "start")
    _need_proper(g, psi, ell, "target")
    rec = Recorder(g, phi, ell)
    oracle_steps(rec, range(g.n), psi, range(1, ell + 1), budget)
    return rec.path(phi)


# -- union, join and comparable vertices ------------------------------------

def compose_union(g: Graph, parts: Sequence[tuple[Sequence[int], RecolorPath]]) -> RecolorPath:
    """Concatenate paths on vertex-disjoint pieces with no edges between them.

    ``parts`` pairs each piece's vertex list (local i -> vertex) with a path
    on ``g.induced(vertices)``."""
    if not parts:
        raise ParameterError("nothing to compose")
    ell = max(p.ell for _, p in parts)
    start = [0] * g.n
    seen = set()
    for vs, p in parts:
        for i, x in enumerate(vs):
            start[x] = p.start[i]
        seen |= set(vs)
    if seen != set(range(g.n)):
        raise ParameterError("pieces do not cover the graph")
    steps = [(vs[st.vertex], st.new_color) for vs, p in parts for st in p.steps]
    return make_path(g, ell, start, steps)


def compose_join(g: Graph, left: Sequence[int], path1: RecolorPath,
                 right: Sequence[int], path2: RecolorPath) -> RecolorPath:
    """Run the left path, then the right one; the two sides must never
    share a color along the way."""
    if path1.ell != path2.ell:
        raise ParameterError("side paths use different ell")
    cols1 = [set(c) for c in path1.colorings()]
    cols2 = [set(c) for c in path2.colorings()]
    for c in cols1:
        if c & cols2[0]:
            raise PaletteClash("join sides share a color during the left path")
    for c in cols2:
        if c & cols1[-1]:
            raise PaletteClash("join sides share a color during the right path")
    return compose_union(g, [(left, path1), (right, path2)])


def lift_replay(rec: Recorder, u: int, v: int, steps):
    """Replay steps of g-u on a workspace that includes ``u``; ``u`` hides in
    ``v``'s color whenever a neighbour is about to take its color."""
    nu = rec.g.nbrs[u]
    for x, c in steps:
        if x in nu and c == rec[u]:
            rec.set(u, rec[v])
        rec.set(x, c)


def lift_comparable(g: Graph, u: int, v: int, inner: RecolorPath,
                    u_start: int | None = None, u_target: int | None = None) -> RecolorPath:
    """Lift a path on g-u (vertices renumbered in increasing order) to g.

    ``u`` starts at ``u_start`` (default: least color legal for it) and
    ends at ``u_target`` when that is legal at the end, else at the final
    color of ``v``."""
    if u == v or g.adjacent(u, v) or not g.nbrs[u] <= g.nbrs[v]:
        raise NotComparable(f"vertices {u + 1}, {v + 1} are not comparable")
    rest = [x for x in range(g.n) if x != u]
    start = [0] * g.n
    for i, x in enumerate(rest):
        start[x] = inner.start[i]
    taken = {start[x] for x in g.nbrs[u]}
    if u_start is None:
        u_start = next(c for c in range(1, inner.ell + 1) if c not in taken)
    start[u] = u_start
    _need_proper(g, start, inner.ell, "lifted start")
    rec = Recorder(g, start, inner.ell)
    lift_replay(rec, u, v, [(rest[st.vertex], st.new_color) for st in inner.steps])
    final = u_target if u_target is not None and rec.can_set(u, u_target) else rec[v]
    rec.set(u, final)
    return rec.path(start)


# -- canonicalize, rename, canonicalize backwards ---------------------------

def scaffold_steps(g: Graph, phi, psi, ell: int, canon, vertices: Sequence[int]) -> list:
    """Steps phi -> psi on ``vertices`` via a canonicalizer ``canon(rec)``
    that maps any coloring to one with fixed color classes."""
    palette = range(1, ell + 1)
    rec, back = Recorder(g, phi, ell), Recorder(g, psi, ell)
    canon(rec)
    canon(back)
    mine = color_classes({x: rec[x] for x in vertices})
    if mine != color_classes({x: back[x] for x in vertices}):
        raise InternalError("canonical colorings disagree on their classes")
    classes = sorted(sorted(c) for c in mine)
    rename_classes(rec, classes, [back[c[0]] for c in classes], palette)
    rec.replay(reverse_steps(psi, back.steps))
    return rec.steps
