"""Known values the library must reproduce; run with ``saitotree selftest``."""
from __future__ import annotations

from typing import Callable

from .analysis import saito_number, saito_valuation_profile
from .curves import builtin_family, milnor_number, tree_from_char_exponents
from .dicriticity import configuration, saito_bruteforce, saito_inductive
from .moduli import generic_moduli_dimension
from .tree import build_tree, multiplicities, valuations


def _four_vertex() -> bool:
    T, n = builtin_family("example1")
    return (valuations(T, n) == (7, 2, 3, 2) and multiplicities(T) == (1, 1, 1, 2)
            and configuration(T, n, (1, 0, 1, 0)) == (1, 1, 2, 0))


def _cusp() -> bool:
    T, n = builtin_family("cusp")
    return saito_inductive(T, n) == saito_bruteforce(T, n) == ((1, 1, 0), (1, 1, 0))


def _single_vertex() -> bool:
    T = build_tree()
    want = {0: ((1,), (1,)), 1: ((1,), (1,)), 2: ((1,), (2,))}
    return all(saito_inductive(T, (k,)) == v for k, v in want.items()) and all(
        saito_inductive(T, (k,)) == ((0,), ((k + 1) // 2,)) for k in range(3, 51))


def _r_cusps() -> bool:
    return all(generic_moduli_dimension(*builtin_family("r_cusps", [r])).total
               == ((r - 1) * (3 * r - 5) + 1) // 2 for r in (2, 4, 6, 8, 10))


def _branch_9_12_17() -> bool:
    T, n = tree_from_char_exponents(9, 12, 17)
    rep = generic_moduli_dimension(T, n, modularity=29)
    return milnor_number(T, n).mu == 98 and rep.total == 11 and rep.tjurina.tau == 80


def _double_cusp() -> bool:
    T, n = builtin_family("double_cusp")
    pr = saito_valuation_profile(T, n)
    return (pr.configuration == (1, 1, 1, 0, 0) and pr.dicriticity[0] == 1
            and saito_number(T, n) == 2 and pr.per_vertex == (2, 1, 1, 1, 1))


CHECKS: dict[str, Callable[[], bool]] = {
    "four-vertex pipeline": _four_vertex,
    "cusp dicriticity": _cusp,
    "single vertex law": _single_vertex,
    "r-cusps moduli totals": _r_cusps,
    "(9;12,17) invariants": _branch_9_12_17,
    "double cusp": _double_cusp,
}


def run() -> dict[str, bool]:
    out = {}
    for name, check in CHECKS.items():
        try:
            out[name] = bool(check())
        except Exception:  # a crash is a failed check here
            out[name] = False
    return out
