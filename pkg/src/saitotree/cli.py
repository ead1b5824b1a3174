"""Command line interface.

Exit status: 0 on success, 1 when a computation or input fails, 2 on usage
errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from . import io, selftest
from .analysis import gluing_data, saito_valuation_profile
from .curves import builtin_family, milnor_number, tree_from_char_exponents
from .dicriticity import saito
from .errors import SaitoError
from .moduli import generic_moduli_dimension
from .tree import multiplicities, valuations

TREE_COMMANDS = ("dicriticity", "saito-number", "profile", "gluing", "moduli", "tjurina", "dot")


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _table(tree, n, extra: Sequence[str] = ()) -> str:
    D, eps = saito(tree, n)
    nu, rho = valuations(tree, n), multiplicities(tree)
    rows = [(s, ",".join(map(str, ps)) or "-", n[s], nu[s], rho[s], D[s], eps[s])
            for s, ps in enumerate(tree.parents)]
    text = io.format_table(("vertex", "parents", "n", "nu", "rho", "white", "eps"), rows)
    return text + "".join(f"{ln}\n" for ln in extra)


def analyse(command: str, text: str, fmt: str, seed: int = 0,
            modularity: Optional[int] = None) -> str:
    """Run one tree subcommand on a tree document and render the result."""
    tree, n = io.parse_tree(text)
    if command == "dot" or fmt == "dot":
        D, eps = saito(tree, n)
        return io.emit_dot(tree, n, D, eps)
    moduli = gluing = None
    extra: list[str] = []
    if command in ("moduli", "tjurina"):
        moduli = generic_moduli_dimension(tree, n, modularity=modularity)
        for lvl, v in moduli.level_totals().items():
            extra.append(f"level {lvl}: {v}")
        extra.append(f"total dimension {moduli.total}")
        if moduli.tjurina is not None:
            t = moduli.tjurina
            extra.append(f"mu {t.mu}, modularity {t.modularity}, tau {t.tau}")
    if command == "gluing":
        gluing = gluing_data(tree, n, seed=seed)
        for s, m in gluing.white.items():
            free = " ".join(map(io.rational, m.free)) or "-"
            edges = " ".join(f"{t}:{io.rational(w)}" for t, w in m.edges.items()) or "-"
            extra.append(f"white {s}: p={m.self_int_magnitude} free={free} edges={edges}")
        for s, b in gluing.black.items():
            extra.append(f"black {s}: tangency={b.tangency_count}")
    if command in ("saito-number", "profile"):
        pr = saito_valuation_profile(tree, n)
        extra.append(f"saito number {pr.saito_number}")
        if command == "profile":
            extra.append("valuations " + " ".join(map(str, pr.per_vertex)))
    if fmt == "json":
        rep = io.analysis_report(tree, n, profile=command != "dicriticity",
                                 moduli=moduli, gluing=gluing)
        if command == "tjurina" or command == "moduli":
            rep["milnor"] = milnor_number(tree, n).mu
        return io.dump_report(rep)
    return _table(tree, n, extra)


def _batch_one(args):
    path, command, fmt, seed, modularity = args
    try:
        text = Path(path).read_text(encoding="utf-8")
        return path, analyse(command, text, fmt, seed, modularity), None
    except SaitoError as exc:
        return path, None, str(exc)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="saitotree",
                                 description="Saito dicriticity of numbered resolution trees.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in TREE_COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", default="-", help="tree document, or - for stdin")
        p.add_argument("--format", choices=("json", "table", "dot"), default="table")
        p.add_argument("--seed", type=int, default=0, help="seed for gluing retries")
        p.add_argument("--batch", metavar="DIR", help="process every *.tree file in DIR")
        p.add_argument("--jobs", type=int, default=1)
        if name == "tjurina":
            p.add_argument("--modularity", type=int, required=True)
    p = sub.add_parser("from-charexp", help="tree document of an irreducible branch")
    p.add_argument("exponents", type=int, nargs="+")
    p = sub.add_parser("family", help="tree document of a built-in family")
    p.add_argument("name")
    p.add_argument("params", type=int, nargs="*")
    sub.add_parser("selftest")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "from-charexp":
            tree, n = tree_from_char_exponents(*args.exponents)
            sys.stdout.write(io.serialize_tree(tree, n))
        elif args.command == "family":
            tree, n = builtin_family(args.name, args.params)
            sys.stdout.write(io.serialize_tree(tree, n))
        elif args.command == "selftest":
            results = selftest.run()
            for name, ok in results.items():
                print(f"{'PASS' if ok else 'FAIL'}  {name}")
            return 0 if all(results.values()) else 1
        elif args.batch:
            return _run_batch(args)
        else:
            sys.stdout.write(analyse(args.command, _read(args.input), args.format, args.seed,
                                     getattr(args, "modularity", None)))
    except UsageError as exc:
        print(f"saitotree: {exc}", file=sys.stderr)
        return 2
    except SaitoError as exc:
        print(f"saitotree: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


def _run_batch(args) -> int:
    folder = Path(args.batch)
    if not folder.is_dir():
        raise UsageError(f"{folder} is not a directory")
    fmt = "json" if args.format == "table" else args.format
    jobs = [(str(p), args.command, fmt, args.seed, getattr(args, "modularity", None))
            for p in sorted(folder.glob("*.tree"))]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_batch_one, jobs))
    else:
        results = [_batch_one(j) for j in jobs]
    failed = 0
    out = {}
    for path, text, err in results:
        if err is not None:
            failed += 1
            print(f"saitotree: {path}: {err}", file=sys.stderr)
            out[path] = {"error": err}
        else:
            out[path] = json.loads(text) if fmt == "json" else text
    json.dump(out, sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
