"""Tree documents, JSON reports and Graphviz output.

A tree document is line based::

    saito-tree v1
    # the cusp
    vertex 0 parents=- n=0
    vertex 1 parents=0 n=0
    vertex 2 parents=0,1 n=1

Records appear in insertion order, so a two-parent record is checked against
the edges that exist when it is read.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from .dicriticity import saito
from .errors import (DuplicateId, EmptyTree, ForwardReference, ParseError,
                     Rule2EdgeMissing, TreeError)
from .tree import Numbering, ResolutionTree, check_numbering, multiplicities, valuations

HEADER = "saito-tree v1"
REPORT_FORMAT = "saito-report v1"

_RECORD = re.compile(r"vertex\s+(\d+)\s+parents=(-|\d+(?:,\d+)?)\s+n=(\d+)")


def parse_tree(text: str) -> tuple[ResolutionTree, Numbering]:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0][1] != HEADER:
        raise ParseError(f"expected header {HEADER!r}", lines[0][0] if lines else 1)
    parents: list[tuple[int, ...]] = []
    n: list[int] = []
    where: list[int] = []
    for lineno, ln in lines[1:]:
        m = _RECORD.fullmatch(ln)
        if not m:
            raise ParseError(f"malformed record {ln!r}", lineno)
        vid = int(m.group(1))
        if vid < len(parents):
            raise DuplicateId(f"vertex {vid} declared twice", lineno)
        if vid > len(parents):
            raise ParseError(f"expected vertex {len(parents)}, got {vid}", lineno)
        ps = () if m.group(2) == "-" else tuple(int(x) for x in m.group(2).split(","))
        for p in ps:
            if p >= vid:
                raise ForwardReference(f"vertex {vid} refers to undeclared vertex {p}", lineno)
        if vid == 0 and ps:
            raise ParseError("vertex 0 is the root and has no parents", lineno)
        if vid > 0 and not ps:
            raise ParseError(f"vertex {vid} needs at least one parent", lineno)
        parents.append(ps)
        n.append(int(m.group(3)))
        where.append(lineno)
    if not parents:
        raise EmptyTree("document declares no vertices")
    try:
        tree = ResolutionTree.from_parents(parents)
    except Rule2EdgeMissing:
        for k in range(2, len(parents) + 1):
            try:
                ResolutionTree.from_parents(parents[:k])
            except Rule2EdgeMissing as exc:
                raise Rule2EdgeMissing(f"line {where[k - 1]}: {exc}") from None
        raise
    except TreeError as exc:
        raise ParseError(str(exc)) from None
    return tree, tuple(n)


def serialize_tree(tree: ResolutionTree, n: Sequence[int], comment: Optional[str] = None) -> str:
    n = check_numbering(tree, n)
    out = [HEADER]
    if comment:
        out += [f"# {ln}" for ln in comment.splitlines()]
    for s, ps in enumerate(tree.parents):
        p = ",".join(map(str, ps)) if ps else "-"
        out.append(f"vertex {s} parents={p} n={n[s]}")
    return "\n".join(out) + "\n"


# -- reports -------------------------------------------------------------------

def rational(x) -> str:
    """Exact text form, ``"p/q"`` or ``"k"``."""
    return str(Fraction(x))


def analysis_report(tree: ResolutionTree, n: Sequence[int], *, profile: bool = True,
                    moduli=None, gluing=None) -> dict[str, Any]:
    """Self-contained JSON-ready description of the Saito data of ``(tree, n)``."""
    n = check_numbering(tree, n)
    D, eps = saito(tree, n)
    rep: dict[str, Any] = {
        "format": REPORT_FORMAT,
        "tree": {"parents": [list(p) for p in tree.parents], "numbering": list(n)},
        "multiplicities": list(multiplicities(tree)),
        "valuations": list(valuations(tree, n)),
        "dicriticity": list(D),
        "configuration": list(eps),
    }
    if profile:
        from .analysis import saito_valuation_profile
        pr = saito_valuation_profile(tree, n)
        rep["saito_number"] = pr.saito_number
        rep["saito_valuations"] = list(pr.per_vertex)
    if moduli is not None:
        rep["moduli"] = {
            "levels": [{"level": c.level_index, "numbering": list(c.numbering), "value": c.value}
                       for c in moduli.levels],
            "total": moduli.total,
        }
        if moduli.tjurina is not None:
            t = moduli.tjurina
            rep["moduli"]["tjurina"] = {"mu": t.mu, "modularity": t.modularity, "tau": t.tau}
    if gluing is not None:
        rep["gluing"] = {
            "white": {str(s): {"self_int_magnitude": m.self_int_magnitude,
                               "free": [rational(w) for w in m.free],
                               "edges": {str(t): rational(w) for t, w in m.edges.items()}}
                      for s, m in gluing.white.items()},
            "black": {str(s): {"tangency_count": b.tangency_count}
                      for s, b in gluing.black.items()},
        }
    return rep


def dump_report(rep: dict[str, Any]) -> str:
    return json.dumps(rep, indent=2, ensure_ascii=False) + "\n"


def validate_report(rep: dict[str, Any]) -> bool:
    """Recompute the core fields of a report from its tree echo."""
    if rep.get("format") != REPORT_FORMAT:
        return False
    tree = ResolutionTree.from_parents(rep["tree"]["parents"])
    fresh = analysis_report(tree, rep["tree"]["numbering"], profile="saito_number" in rep)
    return all(rep[k] == v for k, v in fresh.items())


# -- graphviz ------------------------------------------------------------------

def emit_dot(tree: ResolutionTree, n: Sequence[int], D: Sequence[int],
             eps: Sequence[int], name: str = "saito") -> str:
    """Graphviz graph with white (invariant) and black (dicritical) vertices."""
    out = [f"graph {name} {{", "  node [shape=record, style=filled];"]
    for s in tree.vertices:
        colour = 'fillcolor=white, fontcolor=black' if D[s] else 'fillcolor=black, fontcolor=white'
        out.append(f'  {s} [label="{s} | n={n[s]} | ε={eps[s]}", {colour}];')
    for a, b in sorted(tree.edges):
        out.append(f"  {a} -- {b};")
    out.append("}")
    return "\n".join(out) + "\n"


def format_table(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    rows = [[str(x) for x in r] for r in rows]
    widths = [max([len(h), *(len(r[i]) for r in rows)]) for i, h in enumerate(headers)]
    line = lambda cells: "  ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip()  # noqa: E731
    return "\n".join([line(headers), line(["-" * w for w in widths]), *map(line, rows)]) + "\n"
