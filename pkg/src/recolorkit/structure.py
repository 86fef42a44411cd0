"""Structure of connected (P2+P3, C4)-free graphs.

Partitions around an induced C5 or C6 (with every structural property
asserted), recognizers for the named building blocks, and a decomposer that
emits a checkable certificate.  Certificates always speak in the vertex
labels of the graph handed to ``decompose``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import (ComparablePairPresent, DecompositionFailure, NotConnected,
                     NotInClass, ParameterError, PropertyViolation)
from .families import (FamilySpec, H1, H2, H3, H4, H4Star, H5, PETERSEN, F2,
                       BlowupC5, Cycle, Theta, build_family)
from .graph import (Graph, connected_components, find_comparable_pair,
                    is_chordal, is_peo, isolated_vertices, universal_vertices)
from .patterns import (PatternId, find_induced, find_isomorphism, has_induced,
                       in_scope_class, twin_quotient)

EXCEPTIONAL = ("C6Core", "F2Core", "H4Star")
CORE_ORDER = ("C6Core", "F2Core", "H4Star", "H1", "H2", "H3", "H4", "H5", "BlowupC5", "PetersenSub")


@lru_cache(maxsize=None)
def _family(spec: FamilySpec) -> Graph:
    return build_family(spec)


def _need(cond, name, detail=""):
    if not cond:
        raise PropertyViolation(name, detail)


# -- C5 partition -----------------------------------------------------------

@dataclass(frozen=True)
class C5Partition:
    C: tuple
    A: tuple
    B: tuple
    D: tuple
    Z: frozenset
    T: frozenset


def c5_partition(g: Graph, C: Sequence[int], check_class: bool = True) -> C5Partition:
    """Partition V(g) - C by neighbourhood on the induced 5-cycle ``C``
    (given in cyclic order) and assert properties O1-O8."""
    C = tuple(C)
    if len(C) != 5 or len(set(C)) != 5:
        raise ParameterError("C must list five distinct vertices")
    for i in range(5):
        for j in range(i + 1, 5):
            if g.adjacent(C[i], C[j]) != ((j - i) % 5 in (1, 4)):
                raise ParameterError(f"{[c + 1 for c in C]} does not induce a C5 in this order")
    if check_class and not in_scope_class(g):
        raise NotInClass("graph contains P2+P3 or C4")

    idx = {frozenset([C[i]]): ("A", i) for i in range(5)}
    idx.update({frozenset([C[i], C[(i + 1) % 5]]): ("B", i) for i in range(5)})
    idx.update({frozenset([C[(i - 1) % 5], C[i], C[(i + 1) % 5]]): ("D", i) for i in range(5)})
    A = [set() for _ in range(5)]
    B = [set() for _ in range(5)]
    D = [set() for _ in range(5)]
    Z, T = set(), set()
    cset = set(C)
    for u in range(g.n):
        if u in cset:
            continue
        nc = frozenset(g.nbrs[u] & cset)
        if not nc:
            T.add(u)
        elif nc == cset:
            Z.add(u)
        elif nc in idx:
            kind, i = idx[nc]
            {"A": A, "B": B, "D": D}[kind][i].add(u)
        else:
            raise PropertyViolation("C5-cover", f"vertex {u + 1} sees {sorted(x + 1 for x in nc)} on C")

    Aall = set().union(*A)
    Ball = set().union(*B)
    Dall = set().union(*D)
    for i in range(5):
        nx, pv = (i + 1) % 5, (i - 1) % 5
        _need(len(A[i] | B[i]) <= 1 and len(A[nx] | B[i]) <= 1, "O1", f"i={i + 1}")
        _need(g.anticomplete_to(A[i], A[pv] | A[nx] | D[pv] | D[nx]), "O2", f"i={i + 1}")
        _need(g.complete_to(A[i], D[i]), "O3", f"A{i + 1} not complete to D{i + 1}")
        if A[i]:
            _need(not (D[(i - 2) % 5] | D[(i + 2) % 5]), "O3", f"A{i + 1} nonempty")
        _need(g.is_clique(D[i]), "O4", f"D{i + 1} not a clique")
        _need(g.anticomplete_to(D[i], D[(i + 2) % 5]), "O4", f"D{i + 1}, D{(i + 2) % 5 + 1}")
    _need(g.is_clique(Z) and g.complete_to(Z, cset | Dall), "O5")
    _need(g.is_independent(T) and g.anticomplete_to(T, Aall | Ball | Dall), "O6")
    if T:
        _need(find_comparable_pair(g) is not None, "O7")
    if not has_induced(g, PatternId.FiveCap)[0]:
        _need(not Ball, "O8", "B nonempty without a 5-cap")
        for i in range(5):
            _need(g.complete_to(D[i], D[(i + 1) % 5]), "O8", f"D{i + 1} not complete to D{(i + 1) % 5 + 1}")
    fz = lambda sets: tuple(frozenset(s) for s in sets)
    return C5Partition(C, fz(A), fz(B), fz(D), frozenset(Z), frozenset(T))


# -- C6 partition -----------------------------------------------------------

@dataclass(frozen=True)
class C6Partition:
    C: tuple
    X: tuple   # X1, X2, X3
    Y: tuple   # Y1..Y6
    Z: frozenset
    T: frozenset


def c6_partition(g: Graph, C: Sequence[int], strict: bool = True, check_class: bool = True) -> C6Partition:
    """Partition V(g) - C by neighbourhood on the induced 6-cycle ``C``.

    All claims that hold in any (P2+P3, C4)-free graph are asserted.  The
    claims that need the absence of comparable pairs are asserted when there
    is none; with ``strict`` a comparable pair raises ComparablePairPresent.
    """
    C = tuple(C)
    if len(C) != 6 or len(set(C)) != 6:
        raise ParameterError("C must list six distinct vertices")
    for i in range(6):
        for j in range(i + 1, 6):
            if g.adjacent(C[i], C[j]) != ((j - i) % 6 in (1, 5)):
                raise ParameterError(f"{[c + 1 for c in C]} does not induce a C6 in this order")
    if check_class and not in_scope_class(g):
        raise NotInClass("graph contains P2+P3 or C4")
    comparable = find_comparable_pair(g)
    if strict and comparable is not None:
        raise ComparablePairPresent(f"vertices {comparable[0] + 1} and {comparable[1] + 1} are comparable")

    v = lambda i: C[(i - 1) % 6]   # 1-based, cyclic
    cset = set(C)
    xkey = {frozenset([v(i), v(i + 3)]): i for i in (1, 2, 3)}
    ykey = {frozenset(cset - {v(i - 1), v(i - 2)}): i for i in range(1, 7)}
    X = {i: set() for i in (1, 2, 3)}
    Y = {i: set() for i in range(1, 7)}
    Z, T = set(), set()
    for u in range(g.n):
        if u in cset:
            continue
        nc = frozenset(g.nbrs[u] & cset)
        if not nc:
            T.add(u)
        elif nc == cset:
            Z.add(u)
        elif nc in xkey:
            X[xkey[nc]].add(u)
        elif nc in ykey:
            Y[ykey[nc]].add(u)
        else:
            raise PropertyViolation("C6-nei", f"vertex {u + 1} sees {sorted(x + 1 for x in nc)} on C")

    Xi = lambda i: X[(i - 1) % 3 + 1]
    Yi = lambda i: Y[(i - 1) % 6 + 1]
    Xall = set().union(*X.values())
    Yall = set().union(*Y.values())
    for i in range(1, 7):
        _need(g.is_clique(Xi(i) | Yi(i) | Z), "C6-XYZT", f"i={i}")
        _need(g.complete_to(Yi(i), Yi(i - 1) | Yi(i + 1) | Yi(i + 3)), "C6-Y", f"i={i}")
        _need(g.anticomplete_to(Yi(i), Yi(i - 2) | Yi(i + 2)), "C6-Y", f"i={i}")
        if Yi(i) and Yi(i + 1):
            _need(not (Yi(i + 3) | Yi(i - 2)), "C6-Yi+3", f"i={i}")
            sub = sorted(cset | Yall)
            w = recognize(g.induced(sub), kinds=("H4Star", "H4"))
            _need(w is not None, "C6-Yi-Yi+1", f"i={i}")
        if len(Yi(i)) >= 2:
            _need(not Yi(i - 2) or not Yi(i + 2), "C6-Yigeq2", f"i={i}")
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i < j:
                _need(g.anticomplete_to(X[i], X[j]), "C6-Xi", f"X{i}, X{j}")
        if len(X[i]) >= 2:
            _need(not (Xi(i + 1) | Xi(i + 2)), "C6-Xi2", f"i={i}")
    _need(not Xall or not Yall, "C6-XorY")
    _need(g.is_independent(T) and g.anticomplete_to(T, Yall), "C6-T")
    for t in T:
        if g.nbrs[t] & Xall:
            _need(g.complete_to([t], Xall), "C6-T-X", f"t={t + 1}")
    if comparable is None:
        _need(g.complete_to(T, Z), "C6-T-Z")
        _need(g.complete_to(T, Xall), "C6-TZX")
        if any(Xall <= X[i] for i in (1, 2, 3)):
            _need(not T, "C6-T-Xi")
    return C6Partition(C, tuple(frozenset(X[i]) for i in (1, 2, 3)),
                       tuple(frozenset(Y[i]) for i in range(1, 7)), frozenset(Z), frozenset(T))


# -- class witnesses --------------------------------------------------------

@dataclass(frozen=True)
class ClassWitness:
    """``labels[i]`` is the graph vertex playing canonical vertex ``i`` of
    ``build_family(spec)``.  For PetersenSub, ``labels`` lists the vertices,
    ``embedding[i]`` is the Petersen vertex of ``labels[i]`` and ``theta``
    lists an induced theta graph in canonical order."""
    kind: str
    params: tuple
    labels: tuple
    embedding: tuple | None = None
    theta: tuple | None = None

    @property
    def spec(self) -> FamilySpec | None:
        return _spec_of(self.kind, self.params)

    @property
    def exceptional(self) -> bool:
        return self.kind in EXCEPTIONAL

    def part(self, name: str) -> tuple:
        """Named vertex groups of the witness (e.g. ``"S1"``, ``"v"``)."""
        return _parts(self)[name]


def _spec_of(kind, params):
    return {
        "C6Core": lambda: Cycle(6),
        "F2Core": lambda: F2,
        "H4Star": lambda: H4Star(*params),
        "H1": lambda: H1(*params),
        "H2": lambda: H2(*params),
        "H3": lambda: H3(*params),
        "H4": lambda: H4(*params),
        "H5": lambda: H5(*params),
        "BlowupC5": lambda: BlowupC5(*params),
        "PetersenSub": lambda: None,
    }[kind]()


def _parts(w: ClassWitness) -> dict:
    L = w.labels
    out = {}
    if w.kind in ("C6Core", "F2Core", "H3", "H4", "H4Star", "H5"):
        out["v"] = L[:6]
    if w.kind == "F2Core":
        out["y"] = L[6:9]
    elif w.kind == "H1":
        out["u"], out["S"] = L[:6], L[6:]
    elif w.kind == "H2":
        out["u"], out["v"], out["w"] = L[0], L[1], L[2]
        pos = 3
        for k, size in enumerate(w.params, 1):
            out[f"S{k}"] = L[pos:pos + size]
            pos += size
    elif w.kind == "H3":
        out["X"] = L[6:]
    elif w.kind in ("H4", "H4Star", "H5"):
        sizes = {"H4": w.params, "H4Star": (w.params[0], w.params[0], 0), "H5": w.params}[w.kind]
        pos = 6
        for k, size in enumerate(sizes, 1):
            out[f"S{k}"] = L[pos:pos + size]
            pos += size
    elif w.kind == "BlowupC5":
        pos = 0
        for k, size in enumerate(w.params, 1):
            out[f"bag{k}"] = L[pos:pos + size]
            pos += size
    return out


def _h2_params(n):
    for s1 in range(n - 3, 0, -1):
        for s2 in range(n - 3 - s1, 0, -1):
            for s4 in range(n - 3 - s1 - s2, 0, -1):
                s3 = n - 3 - s1 - s2 - s4
                yield (s1, s2, s3, s4)


def _h4_params(n):
    k = n - 6
    for s1 in range(k, 0, -1):
        for s2 in range(min(s1, k - s1), -1, -1):
            yield (s1, s2, k - s1 - s2)
    for s1 in range(1, k + 1):
        for s2 in range(s1 + 1, k - s1 + 1):
            yield (s1, s2, k - s1 - s2)


def _candidates(kind, n):
    if kind == "C6Core":
        return [()] if n == 6 else []
    if kind == "F2Core":
        return [()] if n == 9 else []
    if kind == "H4Star":
        return [((n - 6) // 2,)] if n >= 8 and n % 2 == 0 else []
    if kind == "H1":
        return [(n - 6,)] if n >= 7 else []
    if kind == "H2":
        return list(_h2_params(n)) if n >= 6 else []
    if kind == "H3":
        return [(n - 6,)] if n >= 8 else []   # |X| = 1 is the theta graph, handled as PetersenSub
    if kind == "H4":
        return list(_h4_params(n)) if n >= 7 else []
    if kind == "H5":
        return [(s1, n - 6 - s1) for s1 in range(n - 7, 0, -1)] if n >= 8 else []
    return []


def _recognize_blowup(g: Graph) -> ClassWitness | None:
    q, classes = twin_quotient(g)
    if q.n != 5 or any(q.degree(x) != 2 for x in range(5)) or len(connected_components(q)) != 1:
        return None
    order = [0]
    prev = None
    cur = 0
    while len(order) < 5:
        nxt = sorted(x for x in q.nbrs[cur] if x != prev)
        if prev is None:
            nxt = [min(q.nbrs[cur], key=lambda x: classes[x][0])]
        prev, cur = cur, nxt[0]
        order.append(cur)
    bags = [classes[x] for x in order]
    return ClassWitness("BlowupC5", tuple(len(b) for b in bags), tuple(v for b in bags for v in b))


def _recognize_petersen_sub(g: Graph) -> ClassWitness | None:
    if not 7 <= g.n <= 10:
        return None
    emb = find_induced(_family(PETERSEN), g)
    if emb is None:
        return None
    theta = find_induced(g, _family(Theta(1)))
    if theta is None:
        return None
    return ClassWitness("PetersenSub", (), tuple(range(g.n)), tuple(emb), tuple(theta))


def recognize(g: Graph, kinds: Sequence[str] = CORE_ORDER) -> ClassWitness | None:
    """First matching class in ``kinds`` (default: the fixed test order)."""
    for kind in kinds:
        if kind == "BlowupC5":
            w = _recognize_blowup(g)
        elif kind == "PetersenSub":
            w = _recognize_petersen_sub(g)
        else:
            w = None
            for params in _candidates(kind, g.n):
                try:
                    h = _family(_spec_of(kind, params))
                except ParameterError:
                    continue
                iso = find_isomorphism(g, h)
                if iso is not None:
                    w = ClassWitness(kind, params, iso)
                    break
        if w is not None:
            return w
    return None


def validate_witness(g: Graph, w: ClassWitness, vertices: Sequence[int] | None = None) -> bool:
    """Check every adjacency clause of ``w`` against the subgraph of ``g``
    induced by ``vertices`` (default: all of g)."""
    vs = sorted(range(g.n) if vertices is None else vertices)
    try:
        if w.kind == "PetersenSub":
            if sorted(w.labels) != vs or not 7 <= len(vs) <= 10:
                return False
            if w.embedding is None or w.theta is None or len(w.embedding) != len(vs):
                return False
            pet = _family(PETERSEN)
            if len(set(w.embedding)) != len(vs) or not all(0 <= e < 10 for e in w.embedding):
                return False
            for i, a in enumerate(w.labels):
                for j, b in enumerate(w.labels):
                    if i < j and g.adjacent(a, b) != pet.adjacent(w.embedding[i], w.embedding[j]):
                        return False
            th = _family(Theta(1))
            if len(w.theta) != 7 or len(set(w.theta)) != 7 or not set(w.theta) <= set(vs):
                return False
            return all(g.adjacent(w.theta[i], w.theta[j]) == th.adjacent(i, j)
                       for i in range(7) for j in range(i + 1, 7))
        if w.kind == "H3" and w.params and w.params[0] < 2:
            return False
        h = _family(w.spec)
        if sorted(w.labels) != vs or len(w.labels) != h.n:
            return False
        return all(g.adjacent(w.labels[i], w.labels[j]) == h.adjacent(i, j)
                   for i in range(h.n) for j in range(i + 1, h.n))
    except (ParameterError, KeyError, TypeError, IndexError):
        return False


# -- certificates -----------------------------------------------------------

@dataclass(frozen=True)
class Chordal:
    vertices: tuple
    peo: tuple


@dataclass(frozen=True)
class Comparable:
    vertices: tuple
    u: int
    v: int
    inner: "Certificate"


@dataclass(frozen=True)
class JoinPeel:
    vertices: tuple
    clique: tuple
    inner: "Certificate"


@dataclass(frozen=True)
class UnionPeel:
    vertices: tuple
    isolated: tuple
    inner: "Certificate"


@dataclass(frozen=True)
class Core:
    vertices: tuple
    witness: ClassWitness


Certificate = Chordal | Comparable | JoinPeel | UnionPeel | Core


def find_cycle(g: Graph, k: int) -> tuple | None:
    pat = {5: PatternId.C5, 6: PatternId.C6}[k]
    return has_induced(g, pat)[1]


def _lift(w: ClassWitness, vs: Sequence[int]) -> ClassWitness:
    m = lambda t: tuple(vs[x] for x in t) if t is not None else None
    return ClassWitness(w.kind, w.params, m(w.labels), w.embedding, m(w.theta))


def decompose(g: Graph, check_partitions: bool = True) -> Certificate:
    """Certificate for a connected (P2+P3, C4)-free graph.

    Each level tries, in order: chordal, peel the universal vertices, peel
    isolated vertices, peel one vertex of a comparable pair, named core.
    With ``check_partitions`` the C5 and C6 partitions (and all their
    asserted properties) are computed on the input and on every core.
    """
    if g.n == 0 or len(connected_components(g)) != 1:
        raise NotConnected("decompose needs a connected graph")
    if not in_scope_class(g):
        raise NotInClass("graph contains P2+P3 or C4")
    if check_partitions:
        _run_partitions(g, strict=False)
    return _decompose(g, tuple(range(g.n)), check_partitions)


def _run_partitions(h: Graph, strict: bool):
    c5 = find_cycle(h, 5)
    if c5 is not None:
        c5_partition(h, c5, check_class=False)
    c6 = find_cycle(h, 6)
    if c6 is not None:
        c6_partition(h, c6, strict=strict, check_class=False)


def _decompose(g: Graph, vs: tuple, check: bool) -> Certificate:
    h = g.induced(vs)
    peo = is_chordal(h)
    if peo is not None:
        return Chordal(vs, tuple(vs[x] for x in peo))
    univ = universal_vertices(h)
    if univ:
        rest = tuple(vs[x] for x in range(h.n) if x not in set(univ))
        return JoinPeel(vs, tuple(vs[x] for x in univ), _decompose(g, rest, check))
    iso = isolated_vertices(h)
    if iso:
        rest = tuple(vs[x] for x in range(h.n) if x not in set(iso))
        if len(connected_components(g, rest)) != 1:
            raise DecompositionFailure(f"remainder {[x + 1 for x in rest]} is disconnected")
        return UnionPeel(vs, tuple(vs[x] for x in iso), _decompose(g, rest, check))
    pair = find_comparable_pair(h)
    if pair is not None:
        u, v = pair
        rest = tuple(x for x in vs if x != vs[u])
        return Comparable(vs, vs[u], vs[v], _decompose(g, rest, check))
    if check:
        _run_partitions(h, strict=True)
    w = recognize(h)
    if w is None:
        raise DecompositionFailure(f"no structure found for the core on {[x + 1 for x in vs]}")
    return Core(vs, _lift(w, vs))


def validate_certificate(g: Graph, cert: Certificate, vertices: Sequence[int] | None = None) -> bool:
    vs = tuple(sorted(range(g.n) if vertices is None else vertices))
    if tuple(sorted(cert.vertices)) != vs or not vs:
        return False
    vset = set(vs)
    if isinstance(cert, Chordal):
        if sorted(cert.peo) != list(vs):
            return False
        local = {x: i for i, x in enumerate(vs)}
        return is_peo(g.induced(vs), [local[x] for x in cert.peo])
    if isinstance(cert, JoinPeel):
        k = set(cert.clique)
        rest = vset - k
        if not k or not k <= vset or not rest:
            return False
        if not g.is_clique(k) or not g.complete_to(k, rest):
            return False
        return validate_certificate(g, cert.inner, rest)
    if isinstance(cert, UnionPeel):
        q = set(cert.isolated)
        rest = vset - q
        if not q or not q <= vset or not rest:
            return False
        if not g.is_independent(q) or not g.anticomplete_to(q, rest):
            return False
        return validate_certificate(g, cert.inner, rest)
    if isinstance(cert, Comparable):
        u, v = cert.u, cert.v
        if u not in vset or v not in vset or u == v or g.adjacent(u, v):
            return False
        if not (g.nbrs[u] & vset) <= (g.nbrs[v] & vset):
            return False
        return validate_certificate(g, cert.inner, vset - {u})
    if isinstance(cert, Core):
        return validate_witness(g, cert.witness, vs)
    return False


def walk(cert: Certificate):
    """Nodes from the root down."""
    while True:
        yield cert
        if isinstance(cert, (Chordal, Core)):
            return
        cert = cert.inner


# -- text form --------------------------------------------------------------

def _fmt(vs):
    return ",".join(str(x + 1) for x in vs)


def format_certificate(cert: Certificate) -> str:
    lines = []
    for depth, node in enumerate(walk(cert)):
        pad = "  " * depth
        if isinstance(node, Chordal):
            lines.append(f"{pad}Chordal peo={_fmt(node.peo)}")
        elif isinstance(node, JoinPeel):
            lines.append(f"{pad}JoinPeel({len(node.clique)}) clique={_fmt(node.clique)}")
        elif isinstance(node, UnionPeel):
            lines.append(f"{pad}UnionPeel({len(node.isolated)}) isolated={_fmt(node.isolated)}")
        elif isinstance(node, Comparable):
            lines.append(f"{pad}Comparable u={node.u + 1} v={node.v + 1}")
        else:
            w = node.witness
            text = f"{pad}Core({w.kind})"
            if w.params:
                text += " params=" + ",".join(map(str, w.params))
            text += f" labels={_fmt(w.labels)}"
            if w.kind == "PetersenSub":
                text += f" embedding={_fmt(w.embedding)} theta={_fmt(w.theta)}"
            lines.append(text)
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    rows = [ln for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ParameterError("empty certificate")

    def fields(parts):
        out = {}
        for p in parts:
            key, _, val = p.partition("=")
            out[key] = tuple(int(x) - 1 for x in val.split(",")) if val else ()
        return out

    nodes = []
    for ln in rows:
        head, *rest = ln.split()
        f = fields(rest)
        nodes.append((head, f))
    head, f = nodes[-1]
    if not head.startswith(("Chordal", "Core(")):
        raise ParameterError("certificate must end in Chordal or Core")
    if head == "Chordal":
        cert: Certificate = Chordal(tuple(sorted(f["peo"])), f["peo"])
    else:
        kind = head[5:-1]
        params = tuple(x + 1 for x in f.get("params", ()))
        w = ClassWitness(kind, params, f["labels"],
                         f.get("embedding"), f.get("theta"))
        cert = Core(tuple(sorted(w.labels)), w)
    for head, f in reversed(nodes[:-1]):
        inner_vs = set(cert.vertices)
        if head.startswith("JoinPeel"):
            vs = tuple(sorted(inner_vs | set(f["clique"])))
            cert = JoinPeel(vs, f["clique"], cert)
        elif head.startswith("UnionPeel"):
            vs = tuple(sorted(inner_vs | set(f["isolated"])))
            cert = UnionPeel(vs, f["isolated"], cert)
        elif head.startswith("Comparable"):
            (u,), (v,) = f["u"], f["v"]
            cert = Comparable(tuple(sorted(inner_vs | {u})), u, v, cert)
        else:
            raise ParameterError(f"unknown certificate node {head!r}")
    return cert
