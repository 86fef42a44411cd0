"""Named graph families and their canonical vertex numbering.

Numbering convention: cycle vertices first in cyclic order, then the
remaining named vertices, then cliques in the order the class definition
lists them.  ``Join``/``Union`` place the left operand first.

=========  ===============================================================
Cycle      v1..vk
Petersen   outer v1..v5, inner v6..v10; spokes vi-v(i+5), inner
           v(i+5)-v((i+2 mod 5)+5)
Cap5       C5 v1..v5, b1 ~ v1, v2
Apple5     C5 v1..v5, a1 ~ v1
F2         C6 v1..v6, y1 ~ {v6,v1,v2,v3}, y2 ~ {v2..v5}, y3 ~ {v4,v5,v6,v1}
H1         u1..u6, S
H2         u, v, w, S1, S2, S3, S4
H3/Theta   v1..v6, X
H4         v1..v6, S1, S2, S3      (H4Star(p) = H4(p, p, 0), F1 = H4Star(1))
H5         v1..v6, S1, S2
BlowupC5   bag1..bag5
=========  ===============================================================
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParameterError
from .graph import Graph

_ARITY = {
    "cycle": 1, "complete": 1, "empty": 1, "path": 1, "petersen": 0, "theta": 1,
    "cap5": 0, "apple5": 0, "f1": 0, "f2": 0, "h1": 1, "h2": 4, "h3": 1, "h4": 3,
    "h4star": 1, "h5": 2, "blowup": 5, "join": 2, "union": 2,
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise ParameterError(f"unknown family {self.kind!r}")
        if len(self.params) != _ARITY[self.kind]:
            raise ParameterError(f"{self.kind} takes {_ARITY[self.kind]} parameters, got {len(self.params)}")

    def __str__(self):
        if self.kind in ("join", "union"):
            return f"{self.kind}({self.params[0]},{self.params[1]})"
        short = {"cycle": "c", "complete": "k", "empty": "e", "path": "p"}
        if self.kind in short:
            return f"{short[self.kind]}{self.params[0]}"
        if not self.params:
            return self.kind
        return f"{self.kind}:" + ",".join(str(p) for p in self.params)


def Cycle(k): return FamilySpec("cycle", (k,))
def Complete(p): return FamilySpec("complete", (p,))
def EmptySet(q): return FamilySpec("empty", (q,))
def Path(k): return FamilySpec("path", (k,))
def Theta(x=1): return FamilySpec("theta", (x,))
def H1(s): return FamilySpec("h1", (s,))
def H2(s1, s2, s3, s4): return FamilySpec("h2", (s1, s2, s3, s4))
def H3(x): return FamilySpec("h3", (x,))
def H4(s1, s2, s3): return FamilySpec("h4", (s1, s2, s3))
def H4Star(p): return FamilySpec("h4star", (p,))
def H5(s1, s2): return FamilySpec("h5", (s1, s2))
def BlowupC5(*bags): return FamilySpec("blowup", tuple(bags))
def Join(a, b): return FamilySpec("join", (a, b))
def Union(a, b): return FamilySpec("union", (a, b))


PETERSEN = FamilySpec("petersen")
CAP5 = FamilySpec("cap5")
APPLE5 = FamilySpec("apple5")
F1 = FamilySpec("f1")
F2 = FamilySpec("f2")


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def add(self, k):
        vs = list(range(self.n, self.n + k))
        self.n += k
        return vs

    def clique(self, k):
        vs = self.add(k)
        self.complete(vs, vs)
        return vs

    def complete(self, xs, ys):
        self.edges += [(x, y) for x in xs for y in ys if x != y]

    def cycle(self, k):
        vs = self.add(k)
        for i in range(k):
            self.edges.append((vs[i], vs[(i + 1) % k]))
        return vs

    def graph(self):
        return Graph.from_edges(self.n, self.edges)


def _need(cond, msg):
    if not cond:
        raise ParameterError(msg)


def _ints(spec, lo):
    for p in spec.params:
        _need(isinstance(p, int) and not isinstance(p, bool) and p >= lo,
              f"{spec.kind}: parameters must be integers >= {lo}, got {spec.params}")


def build_family(spec: FamilySpec) -> Graph:
    kind, ps = spec.kind, spec.params
    b = _Builder()
    if kind == "cycle":
        _ints(spec, 3)
        b.cycle(ps[0])
    elif kind == "complete":
        _ints(spec, 0)
        b.clique(ps[0])
    elif kind == "empty":
        _ints(spec, 0)
        b.add(ps[0])
    elif kind == "path":
        _ints(spec, 1)
        vs = b.add(ps[0])
        b.edges += list(zip(vs, vs[1:]))
    elif kind == "petersen":
        b.cycle(5)
        b.add(5)
        for i in range(5):
            b.edges.append((i, i + 5))
            b.edges.append((i + 5, (i + 2) % 5 + 5))
    elif kind in ("cap5", "apple5"):
        v = b.cycle(5)
        (x,) = b.add(1)
        b.complete([x], v[:2] if kind == "cap5" else v[:1])
    elif kind == "f1":
        return build_family(H4Star(1))
    elif kind == "f2":
        v = b.cycle(6)
        y = b.add(3)
        b.complete([y[0]], [v[5], v[0], v[1], v[2]])
        b.complete([y[1]], v[1:5])
        b.complete([y[2]], [v[3], v[4], v[5], v[0]])
    elif kind == "h1":
        _ints(spec, 1)
        u = b.add(6)
        s = b.clique(ps[0])
        for i, j in [(1, 2), (2, 3), (4, 1), (1, 5), (2, 5), (5, 6)]:
            b.edges.append((u[i - 1], u[j - 1]))
        b.complete(s, [u[2], u[3], u[5]])
    elif kind == "h2":
        _ints(spec, 0)
        _need(ps[0] >= 1 and ps[1] >= 1 and ps[3] >= 1, "h2: S1, S2, S4 must be nonempty")
        u, v, w = b.add(3)
        s1, s2, s3, s4 = (b.clique(k) for k in ps)
        b.complete(s2, s1 + s3)
        b.complete(s3, s4)
        b.complete([u], s1 + s4)
        b.complete([v], s1 + s2 + s3)
        b.complete([w], s2 + s3 + s4)
    elif kind in ("h3", "theta"):
        _ints(spec, 1)
        v = b.cycle(6)
        x = b.clique(ps[0])
        b.complete(x, [v[0], v[3]])
    elif kind in ("h4", "h4star"):
        if kind == "h4star":
            _ints(spec, 1)
            ps = (ps[0], ps[0], 0)
        else:
            _ints(spec, 0)
            _need(ps[0] >= 1, "h4: S1 must be nonempty")
        v = b.cycle(6)
        s1, s2, s3 = (b.clique(k) for k in ps)
        b.complete(s1, [v[0], v[1], v[2], v[5]])
        b.complete(s2, v[1:5])
        b.complete(s3, v[0:4])
        b.complete(s3, s1 + s2)
    elif kind == "h5":
        _ints(spec, 1)
        v = b.cycle(6)
        s1, s2 = b.clique(ps[0]), b.clique(ps[1])
        b.complete(s1, [v[0], v[1], v[2], v[5]])
        b.complete(s2, v[2:6])
        b.complete(s1, s2)
    elif kind == "blowup":
        _ints(spec, 1)
        bags = [b.clique(k) for k in ps]
        for i in range(5):
            b.complete(bags[i], bags[(i + 1) % 5])
    elif kind in ("join", "union"):
        left, right = (build_family(p) for p in ps)
        off = left.n
        edges = left.edges() + [(u + off, v + off) for u, v in right.edges()]
        if kind == "join":
            edges += [(u, v + off) for u in range(left.n) for v in range(right.n)]
        return Graph.from_edges(left.n + right.n, edges)
    return b.graph()


# -- string grammar ---------------------------------------------------------

_SHORT = re.compile(r"^([ckep])(\d+)$")
_SHORT_KIND = {"c": "cycle", "k": "complete", "e": "empty", "p": "path"}


def parse_family(text: str) -> FamilySpec:
    """Parse ``name[:a,b,...]``, ``c6``/``k2``/``e3``/``p4``, ``join(x,y)``, ``union(x,y)``."""
    pos, spec = _parse(text.replace(" ", "").lower(), 0)
    if pos != len(text.replace(" ", "")):
        raise ParameterError(f"trailing input in family spec {text!r}")
    return spec


def _parse(s, pos):
    m = re.compile(r"[a-z0-9]+").match(s, pos)
    if not m:
        raise ParameterError(f"expected a family name at offset {pos} in {s!r}")
    name, pos = m.group(0), m.end()
    if name in ("join", "union"):
        if s[pos:pos + 1] != "(":
            raise ParameterError(f"{name} needs '('")
        pos, a = _parse(s, pos + 1)
        if s[pos:pos + 1] != ",":
            raise ParameterError(f"{name} needs two operands")
        pos, b = _parse(s, pos + 1)
        if s[pos:pos + 1] != ")":
            raise ParameterError(f"{name} needs ')'")
        return pos + 1, FamilySpec(name, (a, b))
    short = _SHORT.match(name)
    if short and name not in _ARITY:
        return pos, FamilySpec(_SHORT_KIND[short.group(1)], (int(short.group(2)),))
    args: tuple = ()
    if s[pos:pos + 1] == ":":
        m = re.compile(r"\d+(,\d+)*").match(s, pos + 1)
        if not m:
            raise ParameterError(f"bad arguments for {name}")
        args = tuple(int(x) for x in m.group(0).split(","))
        pos = m.end()
    return pos, FamilySpec(name, args)


FAMILY_HELP = """family specs:
  c<k> k<p> e<q> p<k>        cycle, complete, edgeless, path
  petersen cap5 apple5 f1 f2
  theta:x h1:s h2:s1,s2,s3,s4 h3:x h4:s1,s2,s3 h4star:p h5:s1,s2
  blowup:b1,b2,b3,b4,b5      blowup of C5
  join(a,b) union(a,b)       e.g. join(union(c6,e2),k3)"""
