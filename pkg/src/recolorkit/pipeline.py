"""Recolorability decision and the top-level path builder.

A connected component is handled through its decomposition certificate.
Both endpoint colorings are canonicalized (driven by the certificate) to
chi-colorings with the same fixed classes, the first is renamed onto the
second, and the second canonicalization is run backwards:

    phi --canon--> phi* --rename--> psi* --canon^-1--> psi

Chordal components, bare 6-cycles and C5 blowups skip the detour and go
straight to the target.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .classes import canonicalize_core, frozen_coloring
from .errors import InternalError, NotInClass, NotMixingAtEll, ParameterError, ThresholdTooLow
from .graph import Graph, check_proper, chi, chromatic_number, connected_components, degeneracy
from .patterns import in_scope_class
from .paths import RecolorPath, Recorder, make_path
from .recolor import (chordal_reference, chordal_steps, cycle_steps, lift_replay, oracle_steps,
                      scaffold_steps)
from .structure import (Chordal, ClassWitness, Comparable, Core, JoinPeel, UnionPeel, decompose)


class Verdict(enum.Enum):
    RECOLORABLE = "recolorable"
    NOT_RECOLORABLE = "not recolorable"


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    certificates: tuple                 # (component vertices, certificate) pairs
    core: ClassWitness | None = None    # exceptional core, labels in the input graph
    p: int = 0                          # clique vertices joined above the core
    q: int = 0                          # isolated vertices beside the core
    witness_ell: int | None = None
    witness: dict = field(default_factory=dict)   # frozen coloring of the core
    blocking_ell: int | None = None
    blocking: tuple | None = None       # coloring of the whole graph at chi + 1
    locked: tuple = ()                  # vertices that never change from ``blocking``

    @property
    def recolorable(self) -> bool:
        return self.verdict is Verdict.RECOLORABLE

@lru_cache(maxsize=256)
def _certificate(h: Graph):
    return decompose(h, check_partitions=False)


def _relabel(cert, vs):
    """Certificate of g.induced(vs) with labels mapped back to g."""
    m = lambda t: tuple(vs[x] for x in t)
    if isinstance(cert, Chordal):
        return Chordal(m(cert.vertices), m(cert.peo))
    if isinstance(cert, Comparable):
        return Comparable(m(cert.vertices), vs[cert.u], vs[cert.v], _relabel(cert.inner, vs))
    if isinstance(cert, JoinPeel):
        return JoinPeel(m(cert.vertices), m(cert.clique), _relabel(cert.inner, vs))
    if isinstance(cert, UnionPeel):
        return UnionPeel(m(cert.vertices), m(cert.isolated), _relabel(cert.inner, vs))
    w = cert.witness
    return Core(m(cert.vertices), ClassWitness(w.kind, w.params, m(w.labels), w.embedding,
                                               m(w.theta) if w.theta is not None else None))


def component_certificates(g: Graph) -> list[tuple[tuple, object]]:
    out = []
    for comp in connected_components(g):
        vs = tuple(sorted(comp))
        out.append((vs, _relabel(_certificate(g.induced(vs)), vs)))
    return out


def exceptional_core(cert):
    """Follow the certificate chain (peels and comparable removals) to its
    leaf; return (core, p, q) if the leaf is an exceptional core, else None."""
    p = q = 0
    while True:
        if isinstance(cert, JoinPeel):
            p += len(cert.clique)
        elif isinstance(cert, UnionPeel):
            q += len(cert.isolated)
        elif not isinstance(cert, Comparable):
            break
        cert = cert.inner
    if isinstance(cert, Core) and cert.witness.exceptional:
        return cert, p, q
    return None


def blocking_coloring(cert) -> tuple[int, dict, list]:
    """(ell, coloring, locked) for a chain ending in an exceptional core.

    The core gets its frozen coloring, every peeled clique gets fresh colors,
    isolated vertices get color 1 and a removed vertex u copies its partner v.
    The core together with the cliques then sees every color at every vertex,
    so none of those vertices can ever be recolored.
    """
    if isinstance(cert, Core):
        ell, col = frozen_coloring(cert.witness)
        return ell, dict(col), list(cert.vertices)
    ell, col, locked = blocking_coloring(cert.inner)
    if isinstance(cert, JoinPeel):
        for x in cert.clique:
            ell += 1
            col[x] = ell
        locked += list(cert.clique)
    elif isinstance(cert, UnionPeel):
        for x in cert.isolated:
            col[x] = 1
    elif isinstance(cert, Comparable):
        col[cert.u] = col[cert.v]
    else:
        raise InternalError(f"chain does not end in an exceptional core: {cert!r}")
    return ell, col, locked


def decide_recolorable(g: Graph) -> Decision:
    """A component whose chain ends in an exceptional core is stuck at
    chi(component) + 1 and mixes for every larger ell.  The whole graph is
    therefore stuck exactly when such a component attains chi(g)."""
    if not in_scope_class(g):
        raise NotInClass("graph contains an induced P2+P3 or C4")
    certs = tuple(component_certificates(g))
    target = chi(g) + 1
    for vs, cert in certs:
        hit = exceptional_core(cert)
        if hit is None:
            continue
        ell, col, locked = blocking_coloring(cert)
        if ell != target:
            continue
        core, p, q = hit
        for ws, _ in certs:
            if ws != vs:
                _, sub = chromatic_number(g.induced(ws))
                col.update(zip(ws, sub))
        fell, fcol = frozen_coloring(core.witness)
        return Decision(Verdict.NOT_RECOLORABLE, certs, core.witness, p, q, fell, fcol,
                        ell, tuple(col[x] for x in range(g.n)), tuple(sorted(locked)))
    return Decision(Verdict.RECOLORABLE, certs)


# -- canonicalization driven by a certificate -------------------------------

def canonicalize(rec: Recorder, cert, palette):
    """Recolor the certificate's vertices (inside ``palette``) to a
    chi-coloring whose classes depend only on the certificate."""
    palette = list(palette)
    if isinstance(cert, Chordal):
        chordal_steps(rec, list(cert.peo), chordal_reference(rec.g, cert.peo, palette), palette)
    elif isinstance(cert, JoinPeel):
        held = rec.used(cert.clique)
        canonicalize(rec, cert.inner, [c for c in palette if c not in held])
    elif isinstance(cert, UnionPeel):
        canonicalize(rec, cert.inner, palette)
        c = rec[min(cert.inner.vertices)]
        for x in cert.isolated:
            rec.set(x, c)
    elif isinstance(cert, Comparable):
        child = rec.child([cert.u])
        canonicalize(child, cert.inner, palette)
        lift_replay(rec, cert.u, cert.v, child.steps)
        rec.set(cert.u, rec[cert.v])
    elif isinstance(cert, Core):
        canonicalize_core(rec, cert.witness, palette)
    else:
        raise InternalError(f"unknown certificate node {cert!r}")


def _component_steps(g: Graph, cert, phi, psi, ell):
    palette = list(range(1, ell + 1))
    rec = Recorder(g, phi, ell)
    if isinstance(cert, Chordal):
        chordal_steps(rec, list(cert.peo), psi, palette)
        return rec.steps
    if isinstance(cert, Core) and cert.witness.kind == "C6Core":
        if ell < 4:
            raise ThresholdTooLow("a 6-cycle needs ell >= 4")
        cycle_steps(rec, cert.witness.part("v"), psi, palette)
        return rec.steps
    if isinstance(cert, Core) and cert.witness.kind == "BlowupC5":
        oracle_steps(rec, cert.vertices, psi, palette)
        return rec.steps
    return scaffold_steps(g, phi, psi, ell, lambda r: canonicalize(r, cert, palette), cert.vertices)


def recolor_path(g: Graph, phi, psi, ell: int, force_oracle: bool = False,
                 budget: int | None = None) -> RecolorPath:
    """A path from ``phi`` to ``psi`` in R_ell(g)."""
    for name, col in (("start", phi), ("target", psi)):
        if len(col) != g.n or not check_proper(g, list(col), ell):
            raise ParameterError(f"{name} is not a proper {ell}-coloring")
    if not in_scope_class(g):
        raise NotInClass("graph contains an induced P2+P3 or C4")
    if ell <= chi(g):
        raise ThresholdTooLow(f"ell={ell} does not exceed the chromatic number")
    decision = decide_recolorable(g)
    if not decision.recolorable and ell < degeneracy(g)[0] + 2:
        if not force_oracle:
            raise NotMixingAtEll(f"not recolorable and ell={ell} is below degeneracy + 2")
        from .oracle import oracle_path
        path = oracle_path(g, tuple(phi), tuple(psi), ell, budget)
        if path is None:
            raise NotMixingAtEll("the colorings lie in different components")
        return path
    steps = []
    for vs, cert in decision.certificates:
        steps += _component_steps(g, cert, phi, psi, ell)
    return make_path(g, ell, phi, steps)
