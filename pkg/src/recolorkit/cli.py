"""Command-line front end: ``recolorkit <command> ...``.

Exit status: 0 success, 1 failed check or unexpected error, 2 usage or
input-format error, 3 graph outside the class, 4 oracle budget exceeded,
5 no path guaranteed at the requested ell (or graph not recolorable for
``decide``).
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from .errors import (FormatError, NotInClass, NotMixingAtEll, ParameterError, RecolorError,
                     SizeLimit, ThresholdTooLow)
from .families import FAMILY_HELP, build_family, parse_family
from .graph import (Graph, check_frozen, check_locked, chi, degeneracy, format_coloring,
                    format_graph, parse_coloring, parse_graph, random_coloring)
from .structure import format_certificate, validate_certificate

EXIT_FAIL, EXIT_USAGE, EXIT_CLASS, EXIT_SIZE, EXIT_MIXING = 1, 2, 3, 4, 5


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _coloring(path: str, g: Graph):
    return parse_coloring(_read(path), g.n)


def _budget(args):
    if getattr(args, "budget", None) is not None:
        if args.budget < 1:
            raise ParameterError("--budget must be positive")
        os.environ["RECOLOR_BUDGET"] = str(args.budget)


def _colors(cols) -> str:
    return " ".join(str(c) for c in cols)


# -- commands ---------------------------------------------------------------

def cmd_gen(args) -> int:
    g = build_family(parse_family(args.spec))
    _write(f"c {args.spec}\n" + format_graph(g), args.output)
    return 0


def cmd_analyze(args) -> int:
    from .pipeline import component_certificates
    from .patterns import in_scope_class
    g = _graph(args.graph)
    if not in_scope_class(g):
        raise NotInClass("graph contains an induced P2+P3 or C4")
    out = []
    for vs, cert in component_certificates(g):
        out.append(f"component {','.join(str(x + 1) for x in vs)}")
        out.append(format_certificate(cert).rstrip("\n"))
    _write("\n".join(out) + "\n", args.output)
    return 0


def cmd_decide(args) -> int:
    """``recolorable`` or ``frozen <ell>`` plus the core's frozen coloring;
    everything else goes on ``c`` comment lines."""
    from .pipeline import decide_recolorable
    g = _graph(args.graph)
    d = decide_recolorable(g)
    if d.recolorable:
        lines = ["recolorable"]
    else:
        labels = ",".join(str(x + 1) for x in d.core.labels)
        lines = [f"frozen {d.witness_ell}",
                 _colors(d.witness[x] for x in d.core.labels),
                 f"c core {d.core.kind} vertices {labels} p={d.p} q={d.q}",
                 f"c stuck {d.blocking_ell}-coloring {_colors(d.blocking)}",
                 f"c locked vertices {','.join(str(x + 1) for x in d.locked)}"]
        if check_frozen(g, list(d.blocking), d.blocking_ell):
            lines.append("c the stuck coloring is frozen on the whole graph")
    lines.append(f"c chi {chi(g)} degeneracy {degeneracy(g)[0]}")
    for vs, cert in d.certificates:
        lines.append(f"c component {','.join(str(x + 1) for x in vs)}")
        lines += ["c " + ln for ln in format_certificate(cert).splitlines()]
    _write("\n".join(lines) + "\n", args.output)
    return 0 if d.recolorable else EXIT_MIXING


def cmd_path(args) -> int:
    from .pipeline import recolor_path
    _budget(args)
    g = _graph(args.graph)
    _, phi = _coloring(args.start, g)
    _, psi = _coloring(args.target, g)
    path = recolor_path(g, phi, psi, args.ell, force_oracle=args.force_oracle)
    _write(path.format(), args.output)
    print(f"c length {len(path)} max-per-vertex {path.max_per_vertex()}", file=sys.stderr)
    return 0


def cmd_frozen(args) -> int:
    """A frozen (chi+1)-coloring of the whole graph, or 'none'."""
    from .pipeline import decide_recolorable
    from .oracle import find_frozen
    g = _graph(args.graph)
    d = decide_recolorable(g)
    ell = chi(g) + 1
    found = None
    if not d.recolorable and check_frozen(g, list(d.blocking), ell):
        found = d.blocking
    else:
        _budget(args)
        try:
            hits = find_frozen(g, ell)
            found = hits[0] if hits else None
        except SizeLimit:
            if d.recolorable:
                raise
    if found is not None:
        _write(format_coloring(found, ell), args.output)
        return 0
    text = "none\n"
    if not d.recolorable:
        text += (f"c stuck {ell}-coloring {_colors(d.blocking)}\n"
                 f"c locked vertices {','.join(str(x + 1) for x in d.locked)}\n")
    _write(text, args.output)
    return 0


# -- verify -----------------------------------------------------------------

class _Report:
    def __init__(self):
        self.failed = 0

    def __call__(self, name: str, ok: bool, details: str = ""):
        if not ok:
            self.failed += 1
        print(f"CHECK {name} {'pass' if ok else 'fail'} {details}".rstrip())


def replay_path_text(g: Graph, text: str, start) -> tuple[bool, str]:
    """Re-check a path file line by line without the path classes."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("c")]
    try:
        n, ell, k = (int(x) for x in rows[0][1:4])
    except (IndexError, ValueError):
        return False, "bad header"
    if rows[0][0] != "path" or n != g.n or rows[-1] != ["end"] or len(rows) != k + 2:
        return False, "header does not match body"
    col = list(start)
    if len(col) != n or any(not 1 <= c <= ell for c in col):
        return False, "start coloring does not fit"
    if any(col[u] == col[v] for u, v in g.edges()):
        return False, "start coloring is not proper"
    for i, row in enumerate(rows[1:-1], 1):
        try:
            v, old, new = int(row[1]) - 1, int(row[2]), int(row[3])
        except (IndexError, ValueError):
            return False, f"step {i} unreadable"
        if row[0] != "r" or not 0 <= v < n or col[v] != old or old == new or not 1 <= new <= ell:
            return False, f"step {i} inconsistent"
        if any(col[u] == new for u in g.nbrs[v]):
            return False, f"step {i} creates a conflict at vertex {v + 1}"
        col[v] = new
    return True, f"{k} steps end at {_colors(col)}"


def cmd_verify(args) -> int:
    from .oracle import find_frozen, is_mixing, oracle_distance
    from .patterns import in_scope_class
    from .pipeline import decide_recolorable, recolor_path
    _budget(args)
    g = _graph(args.graph)
    check = _Report()

    if args.replay:
        if not args.start:
            raise ParameterError("--replay needs --start")
        _, start = _coloring(args.start, g)
        ok, detail = replay_path_text(g, _read(args.replay), start)
        if ok and args.target:
            _, psi = _coloring(args.target, g)
            ok = detail.endswith(_colors(psi))
            detail += "" if ok else " (not the target)"
        check("replay", ok, detail)
        return EXIT_FAIL if check.failed else 0

    inside = in_scope_class(g)
    check("in-class", inside, f"n={g.n} m={g.m}")
    if not inside:
        return EXIT_FAIL
    d = decide_recolorable(g)
    check("certificate", all(validate_certificate(g, c, vs) for vs, c in d.certificates),
          f"{len(d.certificates)} component(s)")
    k = chi(g)
    rho = degeneracy(g)[0]
    ell = args.ell if args.ell is not None else k + 1
    if ell <= k:
        raise ThresholdTooLow(f"--ell must exceed chi = {k}")
    if not d.recolorable:
        core = sorted(d.core.labels)
        core_ok = check_frozen(g.induced(core), [d.witness[x] for x in core], d.witness_ell)
        check("witness", core_ok and check_locked(g, list(d.blocking), d.blocking_ell, d.locked),
              f"{d.core.kind} stuck at ell={d.blocking_ell}")
    try:
        mixing = is_mixing(g, k + 1)
        check("decision", mixing == d.recolorable,
              f"decider={'yes' if d.recolorable else 'no'} oracle at ell={k + 1}: {'mixing' if mixing else 'not mixing'}")
        frozen = find_frozen(g, ell)
        check("frozen-blocks", not frozen or not is_mixing(g, ell), f"{len(frozen)} frozen at ell={ell}")
        oracle_ok = True
    except SizeLimit as exc:
        check("decision", True, f"oracle skipped ({exc})")
        oracle_ok = False

    if not d.recolorable and ell < rho + 2:
        check("paths", True, f"skipped: not recolorable and ell={ell} < degeneracy+2")
        return EXIT_FAIL if check.failed else 0
    rng = random.Random(args.seed)
    worst_len = worst_vertex = 0
    bad = []
    for t in range(args.trials):
        phi, psi = random_coloring(g, ell, rng), random_coloring(g, ell, rng)
        path = recolor_path(g, phi, psi, ell)
        ok, detail = replay_path_text(g, path.format(), phi)
        if not ok or path.end != tuple(psi):
            bad.append(f"trial {t}: {detail}")
            continue
        worst_len = max(worst_len, len(path))
        worst_vertex = max(worst_vertex, path.max_per_vertex())
        if oracle_ok:
            dist = oracle_distance(g, phi, psi, ell)
            if dist is None or dist > len(path):
                bad.append(f"trial {t}: oracle distance {dist} vs length {len(path)}")
    check("paths", not bad, "; ".join(bad[:3]) if bad else
          f"{args.trials} trials at ell={ell}, longest {worst_len}, max per vertex {worst_vertex}")
    check("length-bound", worst_len <= 2 * g.n * g.n, f"{worst_len} <= {2 * g.n * g.n}")
    check("per-vertex-bound", worst_vertex <= 2 * g.n, f"{worst_vertex} <= {2 * g.n}")
    return EXIT_FAIL if check.failed else 0


# -- parser -----------------------------------------------------------------

def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recolorkit",
        description="Recoloring tools for (P2+P3, C4)-free graphs.",
        epilog=FAMILY_HELP + "\n\nRECOLOR_BUDGET overrides the oracle state budget (default 1e7).",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write the graph of a family spec",
                       epilog=FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("spec")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="print the structure certificate")
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decide", help="decide recolorability (status 5 when not recolorable)")
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("path", help="build a recoloring path between two colorings")
    p.add_argument("graph")
    p.add_argument("start")
    p.add_argument("target")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--force-oracle", action="store_true",
                   help="search the reconfiguration graph when no path is guaranteed")
    p.add_argument("--budget", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("frozen", help="print a frozen (chi+1)-coloring or 'none'")
    p.add_argument("graph")
    p.add_argument("--budget", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_frozen)

    p = sub.add_parser("verify", help="cross-check the constructions against the oracle")
    p.add_argument("graph")
    p.add_argument("--ell", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--replay", metavar="PATHFILE", help="only re-validate a path file")
    p.add_argument("--start", help="start coloring for --replay")
    p.add_argument("--target", help="expected end coloring for --replay")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get("RECOLOR_BUDGET")
    try:
        return args.func(args)
    except (FormatError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotInClass as exc:
        print(f"not in class: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except SizeLimit as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (NotMixingAtEll, ThresholdTooLow) as exc:
        print(f"no path guaranteed: {exc}", file=sys.stderr)
        return EXIT_MIXING
    except RecolorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        if saved is None:
            os.environ.pop("RECOLOR_BUDGET", None)
        else:
            os.environ["RECOLOR_BUDGET"] = saved


def main(argv=None):
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
    sys.exit(code)
