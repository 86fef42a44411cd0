"""Class-specific recoloring routines for the named cores.

Every routine here *canonicalizes*: it recolors the core, inside a given
palette, to a chi-coloring whose color classes are fixed by the witness
alone (the colors themselves may vary).  Two canonical colorings of the
same core therefore differ by a renaming.

Reference vertices (the ``x``, ``x'``, ``s1``, ``s1'`` of the class
descriptions) are always the first members of their groups in witness order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .errors import (InternalError, NotEmbeddable, NotExceptional, ParameterError, SizeLimit,
                     ThresholdTooLow)
from .families import PETERSEN, build_family
from .graph import Graph, check_proper, chi, chromatic_number, degeneracy, is_chordal
from .patterns import induced_embeddings
from .paths import Recorder, make_path
from .recolor import (chordal_reference, chordal_steps, cluster_reference, cluster_steps,
                      cycle_steps, oracle_steps, rename_classes, scaffold_steps)
from .structure import ClassWitness

# Petersen vertices (0-based) forming the independent set I = {v1, v3, v9, v10}.
PETERSEN_I = (0, 2, 8, 9)


def _dodge(rec: Recorder, x: int, palette, avoid=()):
    """Move ``x`` to the least palette color unused around it and not in ``avoid``."""
    rec.set(x, rec.free_color(x, palette, avoid=avoid))


def _try_free(rec: Recorder, x: int, palette, avoid=()):
    bad = rec.nbr_colors(x) | {rec[x]} | set(avoid)
    return next((c for c in palette if c not in bad), None)


def _need_palette(palette, k, kind):
    if len(palette) < k:
        raise ThresholdTooLow(f"{kind} needs at least {k} colors here, has {len(palette)}")


# -- chi-colorings in at most two recolorings per vertex ---------------------

def canon_h3(rec: Recorder, w: ClassWitness, palette):
    v, X = w.part("v"), w.part("X")
    x, x2 = X[0], X[1]
    cx = rec[x]
    if rec[v[2]] == cx:
        _dodge(rec, v[2], palette)
    rec.set(v[1], cx)
    if rec[v[4]] == cx:
        _dodge(rec, v[4], palette)
    rec.set(v[5], cx)
    rec.set(v[2], rec[x2])
    rec.set(v[4], rec[x2])
    rec.set(v[3], rec[v[0]])


def canon_h4(rec: Recorder, w: ClassWitness, palette):
    v = w.part("v")
    S1, S2, S3 = w.part("S1"), w.part("S2"), w.part("S3")
    if len(S1) < len(S2):
        v = (v[3], v[2], v[1], v[0], v[5], v[4])
        S1, S2 = S2, S1
    if w.kind == "H4Star":
        _need_palette(palette, len(S2) + 4, "H4*")
    c2, c3 = rec[v[1]], rec[v[2]]
    if rec[v[4]] == c2:
        _dodge(rec, v[4], palette)
    rec.set(v[5], c2)
    rec.set(v[3], c2)
    rec.set(v[4], c3)
    rec.set(v[0], c3)
    blocked = {c2, c3} | rec.used(S3)
    inner = [c for c in palette if c not in blocked]
    rename_classes(rec, [[b] for b in S2], [rec[a] for a in S1[:len(S2)]], inner)


def canon_h5(rec: Recorder, w: ClassWitness, palette):
    v = w.part("v")
    S1, S2 = w.part("S1"), w.part("S2")
    if len(S1) == 1 and len(S2) > 1:
        v = (v[4], v[3], v[2], v[1], v[0], v[5])
        S1, S2 = S2, S1
    if len(S2) == 1:
        cs2 = rec[S2[0]]
        if rec[v[0]] == cs2:
            _dodge(rec, v[0], palette)
        rec.set(v[1], cs2)
        c1 = rec[v[0]]
        if rec[v[3]] == c1:
            _dodge(rec, v[3], palette)
        rec.set(v[2], c1)
        rec.set(v[3], rec[v[5]])
        rec.set(v[4], rec[S1[0]])
        return
    cs1, cs2 = rec[S1[0]], rec[S2[0]]
    if rec[v[1]] == cs2:
        _dodge(rec, v[1], palette)
    rec.set(v[0], cs2)
    if rec[v[3]] == cs1:
        _dodge(rec, v[3], palette)
    rec.set(v[4], cs1)
    rec.set(v[1], rec[S2[1]])
    rec.set(v[3], rec[S1[1]])
    rec.set(v[2], rec[v[5]])


def canon_f2(rec: Recorder, w: ClassWitness, palette):
    _need_palette(palette, 6, "F2")
    v, y = w.part("v"), w.part("y")
    a, b, cy = rec[v[0]], rec[v[1]], rec[y[0]]
    for x in (v[3], y[1]):
        if rec[x] == a:
            _dodge(rec, x, palette)
    rec.set(v[2], a)
    for x in (v[4], y[2]):
        if rec[x] == b:
            _dodge(rec, x, palette)
    rec.set(v[5], b)
    rec.set(v[3], b)
    rec.set(v[4], a)
    rec.set(y[1], cy)
    rec.set(y[2], cy)


def canon_c6(rec: Recorder, w: ClassWitness, palette):
    _need_palette(palette, 4, "C6")
    v = w.part("v")
    cycle_steps(rec, v, {x: palette[i % 2] for i, x in enumerate(v)}, palette)


# -- independent-set reductions ---------------------------------------------

def normalize_h1(rec: Recorder, w: ClassWitness, palette):
    """Make I monochromatic in a color absent from the rest; returns I."""
    u, S = w.part("u"), w.part("S")
    u1, u2, u3, u4, u5, u6 = u
    if len(S) == 1:
        s = S[0]
        if rec[s] != rec[u5]:
            rec.set(u3, rec[u5])
            rec.set(u4, rec[u5])
        else:
            c = next(c for c in palette if c not in rec.used((u1, u2, u5)))
            if rec[u6] == c:
                rec.set(u6, rec[u2])
            for x in (u3, u4, u5):
                rec.set(x, c)
        return (u3, u4, u5)
    I = (u3, u4, u6)
    base = rec.used((u1, u2, u5))
    spare = [c for c in palette if c in rec.used(I) and c not in base]
    if spare:
        for x in I:
            rec.set(x, spare[0])
        return I
    c3 = rec[u5]
    if c3 in rec.used(I) or c3 not in rec.used(S):
        _dodge(rec, u5, palette, avoid=(rec[u1], rec[u2], c3))
        for x in I:
            rec.set(x, c3)
        return I
    # u3 has u1's color, u4 has u2's color and S holds u5's color
    c1 = rec[u1]
    _dodge(rec, u1, palette, avoid=(rec[u2], c3))
    for x in I:
        rec.set(x, c1)
    return I


def normalize_h2(rec: Recorder, w: ClassWitness, palette):
    u, v, x = w.part("u"), w.part("v"), w.part("w")
    S1, S2, S3, S4 = (w.part(f"S{k}") for k in range(1, 5))
    c1, c2 = rec[v], rec[x]
    I = (u, v, x)
    if c1 == c2:
        rec.set(u, c1)
        return I
    if c1 not in rec.used(S4):
        rec.set(u, c1)
        rec.set(x, c1)
        return I
    if c2 not in rec.used(S1):
        rec.set(u, c2)
        rec.set(v, c2)
        return I
    rest = [y for y in w.labels if y != u]
    free = [c for c in palette if c not in rec.used(rest)]
    if free:
        for y in I:
            rec.set(y, free[0])
        return I
    s4 = next(y for y in S4 if rec[y] == c1)
    c = _try_free(rec, s4, palette, avoid=rec.used(S3 + S4 + (u, x)))
    if c is not None:
        rec.set(s4, c)
        rec.set(x, c1)
        rec.set(u, c1)
        return I
    s1 = next(y for y in S1 if rec[y] == c2)
    c = _try_free(rec, s1, palette, avoid=rec.used(S1 + S2 + (u, v)))
    if c is None:
        raise InternalError("H2 normalization found no free color")
    rec.set(s1, c)
    rec.set(v, c2)
    rec.set(u, c2)
    return I


def _inner_canon(rec: Recorder, I, vertices, palette, use_oracle: bool):
    """Canonicalize the piece left after removing I, avoiding I's color."""
    s = rec[I[0]]
    if any(rec[y] != s for y in I) or s in rec.used(vertices):
        raise InternalError("independent set is not normalized")
    inner = [c for c in palette if c != s]
    rest = sorted(vertices)
    sub = rec.g.induced(rest)
    if not use_oracle:
        cluster_steps(rec, rest, cluster_reference(rec.g, rest, inner), inner)
        return
    peo = is_chordal(sub)
    if peo is None:
        raise InternalError("inner piece is expected to be chordal")
    peo = [rest[i] for i in peo]
    ref = chordal_reference(rec.g, peo, inner)
    try:
        oracle_steps(rec, rest, ref, inner)
    except SizeLimit:
        chordal_steps(rec, peo, ref, inner)


def canon_h1(rec: Recorder, w: ClassWitness, palette):
    I = normalize_h1(rec, w, palette)
    _inner_canon(rec, I, [y for y in w.labels if y not in I], palette, use_oracle=False)


def canon_h2(rec: Recorder, w: ClassWitness, palette):
    I = normalize_h2(rec, w, palette)
    _inner_canon(rec, I, [y for y in w.labels if y not in I], palette, use_oracle=True)


# -- Petersen and its induced subgraphs --------------------------------------

@lru_cache(maxsize=None)
def petersen_graph() -> Graph:
    return build_family(PETERSEN)


@lru_cache(maxsize=None)
def _petersen_moves() -> dict:
    """For each pair inside I, an automorphism fixing I setwise and sending
    (v9, v10) onto that pair."""
    P = petersen_graph()
    moves = {}
    Iset = set(PETERSEN_I)
    for tau in induced_embeddings(P, P, exact_degree=True):
        if {tau[i] for i in PETERSEN_I} != Iset:
            continue
        pair = tuple(sorted((tau[8], tau[9])))
        moves.setdefault(pair, tau)
    return moves


def _petersen_star(rec: Recorder, tau, palette):
    """With v9, v10 (under ``tau``) sharing a color, give it to v1 and v3."""
    V = lambda i: tau[i - 1]
    c3 = rec[V(9)]
    if rec[V(2)] == c3:
        c = _try_free(rec, V(2), palette)
        if c is not None:
            rec.set(V(2), c)
        else:
            k = rec[V(7)]
            rec.set(V(7), rec[V(1)])
            rec.set(V(2), k)
    rec.set(V(1), c3)
    rec.set(V(3), c3)


def normalize_petersen(rec: Recorder, palette):
    """Petersen graph on vertices 0..9 (``rec`` is over the Petersen graph)."""
    cols = [rec[i] for i in PETERSEN_I]
    pair = next(((a, b) for i, a in enumerate(PETERSEN_I) for b in PETERSEN_I[i + 1:]
                 if rec[a] == rec[b]), None)
    if pair is None:
        rec.set(7, cols[0])
        rec.set(4, cols[1])
        rec.set(9, cols[2])
        tau = tuple(range(10))
    else:
        tau = _petersen_moves()[pair]
    _petersen_star(rec, tau, palette)
    return PETERSEN_I


def canon_petersen(rec: Recorder, palette):
    _need_palette(palette, 4, "Petersen")
    I = normalize_petersen(rec, palette)
    _inner_canon(rec, I, [y for y in range(10) if y not in I], palette, use_oracle=False)


def extend_to_petersen(colors: dict, palette) -> list:
    """Greedy extension of a coloring of embedded vertices to all of Petersen."""
    P = petersen_graph()
    col = [colors.get(i, 0) for i in range(10)]
    for i in range(10):
        if not col[i]:
            taken = {col[j] for j in P.nbrs[i]}
            col[i] = next(c for c in palette if c not in taken)
    return col


def canon_petersen_sub(rec: Recorder, w: ClassWitness, palette):
    _need_palette(palette, 4, "Petersen subgraph")
    to_pet = dict(zip(w.labels, w.embedding))
    back = {p: x for x, p in to_pet.items()}
    col = extend_to_petersen({p: rec[x] for x, p in to_pet.items()}, palette)
    prec = Recorder(petersen_graph(), col, rec.ell)
    canon_petersen(prec, palette)
    for p, c in prec.steps:
        if p in back:
            rec.set(back[p], c)


# -- blowups of C5: breadth-first search -------------------------------------

def canon_blowup(rec: Recorder, w: ClassWitness, palette):
    vs = sorted(w.labels)
    k, ref = chromatic_number(rec.g.induced(vs))
    if len(palette) <= k:
        raise ThresholdTooLow("blowup of C5 needs a spare color")
    oracle_steps(rec, vs, {x: palette[ref[i] - 1] for i, x in enumerate(vs)}, palette)


CANONICALIZERS = {
    "C6Core": canon_c6,
    "F2Core": canon_f2,
    "H4Star": canon_h4,
    "H1": canon_h1,
    "H2": canon_h2,
    "H3": canon_h3,
    "H4": canon_h4,
    "H5": canon_h5,
    "BlowupC5": canon_blowup,
    "PetersenSub": canon_petersen_sub,
}


def canonicalize_core(rec: Recorder, w: ClassWitness, palette: Sequence[int]):
    CANONICALIZERS[w.kind](rec, w, list(palette))


# -- frozen colorings --------------------------------------------------------

def frozen_coloring(w: ClassWitness) -> tuple[int, dict]:
    """(ell, coloring as vertex -> color) for an exceptional core, frozen at ell = chi + 1."""
    if w.kind == "C6Core":
        cols, ell = (1, 2, 3, 1, 2, 3), 3
    elif w.kind == "F2Core":
        cols, ell = (1, 2, 3, 1, 2, 3, 4, 4, 4), 4
    elif w.kind == "H4Star":
        p = w.params[0]
        clique = tuple(range(4, p + 4))
        cols, ell = (1, 2, 3, 1, 2, 3) + clique + clique, p + 3
    else:
        raise NotExceptional(f"{w.kind} has no frozen chi+1 coloring")
    return ell, dict(zip(w.labels, cols))


# -- whole-graph entry points -----------------------------------------------

def _start(g: Graph, phi, ell):
    if len(phi) != g.n or not check_proper(g, list(phi), ell):
        raise ParameterError(f"not a proper {ell}-coloring")
    return Recorder(g, phi, ell)


def _threshold(g: Graph, w: ClassWitness, ell: int):
    if w.exceptional:
        rho = degeneracy(g)[0]
        if ell < rho + 2:
            raise ThresholdTooLow(f"{w.kind} needs ell >= {rho + 2}")
    elif ell <= chi(g):
        raise ThresholdTooLow(f"{w.kind} needs ell > chi")


def canonicalize_chi(g: Graph, w: ClassWitness, phi, ell: int):
    """Path from ``phi`` to a chi-coloring with the witness's fixed classes
    (at most two recolorings per vertex)."""
    if w.kind not in ("H3", "H4", "H5", "F2Core", "H4Star"):
        raise ParameterError(f"no direct chi-canonicalization for {w.kind}")
    _threshold(g, w, ell)
    rec = _start(g, phi, ell)
    canonicalize_core(rec, w, range(1, ell + 1))
    return rec.path(phi)


def normalize_independent(g: Graph, w: ClassWitness, phi, ell: int):
    """Path making the designated independent set I monochromatic in a
    color absent from G - I.  Returns (path, I)."""
    _threshold(g, w, ell)
    rec = _start(g, phi, ell)
    palette = list(range(1, ell + 1))
    if w.kind == "H1":
        I = normalize_h1(rec, w, palette)
    elif w.kind == "H2":
        I = normalize_h2(rec, w, palette)
    elif w.kind == "PetersenSub" and len(w.labels) == 10:
        _need_palette(palette, 4, "Petersen")
        to_pet = dict(zip(w.labels, w.embedding))
        back = {p: x for x, p in to_pet.items()}
        prec = Recorder(petersen_graph(), [rec[back[p]] for p in range(10)], ell)
        normalize_petersen(prec, palette)
        rec.replay((back[p], c) for p, c in prec.steps)
        I = tuple(back[p] for p in PETERSEN_I)
    else:
        raise ParameterError(f"no independent-set normalization for {w.kind}")
    return rec.path(phi), I


def independent_reduction(g: Graph, I, phi, psi, ell: int, normalize, inner_solver):
    """Path phi -> psi: ``normalize(rec, palette)`` makes I monochromatic in a
    color absent elsewhere, ``inner_solver(rec, vertices, palette)`` brings
    G - I to fixed classes without that color; then rename and undo."""
    palette = list(range(1, ell + 1))
    rest = [x for x in range(g.n) if x not in set(I)]

    def canon(rec):
        normalize(rec, palette)
        s = rec[I[0]]
        if any(rec[y] != s for y in I) or s in rec.used(rest):
            raise InternalError("independent set is not normalized")
        inner_solver(rec, rest, [c for c in palette if c != s])

    return make_path(g, ell, phi, scaffold_steps(g, phi, psi, ell, canon, range(g.n)))


def chi_scaffold_path(g: Graph, w: ClassWitness, phi, psi, ell: int, canonicalizer=None):
    """canonicalize(phi) + renaming + reverse(canonicalize(psi))."""
    _threshold(g, w, ell)
    _start(g, phi, ell)
    _start(g, psi, ell)
    canon = canonicalizer or canonicalize_core
    palette = list(range(1, ell + 1))
    steps = scaffold_steps(g, phi, psi, ell, lambda rec: canon(rec, w, palette), range(g.n))
    return make_path(g, ell, phi, steps)


def petersen_sub_path(g: Graph, embedding, phi, psi, ell: int):
    """Path for an induced subgraph of the Petersen graph given its embedding
    (``embedding[i]`` is the Petersen vertex of vertex i)."""
    P = petersen_graph()
    emb = tuple(embedding)
    if len(emb) != g.n or len(set(emb)) != g.n or not all(0 <= e < 10 for e in emb) or any(
            g.adjacent(a, b) != P.adjacent(emb[a], emb[b]) for a in range(g.n) for b in range(a + 1, g.n)):
        raise NotEmbeddable("not an induced embedding into the Petersen graph")
    if ell < 4:
        raise ThresholdTooLow("Petersen subgraphs need ell >= 4")
    w = ClassWitness("PetersenSub", (), tuple(range(g.n)), emb)
    return chi_scaffold_path(g, w, phi, psi, ell)
