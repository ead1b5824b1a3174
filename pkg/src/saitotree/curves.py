"""Numbered trees from curve descriptors, and the Milnor number."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Sequence, Union

from .errors import InvalidCharacteristic, OddR, SmoothCurve, UnknownFamily
from .tree import Numbering, ResolutionTree, check_numbering, valuations


@dataclass(frozen=True)
class ExplicitTree:
    tree: ResolutionTree
    numbering: Numbering


@dataclass(frozen=True)
class Irreducible:
    exponents: tuple[int, ...]  # (b0, b1, ..., bg)


@dataclass(frozen=True)
class Family:
    name: str
    params: tuple[int, ...] = ()


CurveDescriptor = Union[ExplicitTree, Irreducible, Family]


class MilnorResult(NamedTuple):
    mu: int
    branch_count: int


def _check_exponents(b0: int, betas: Sequence[int]) -> None:
    if b0 == 1:
        raise SmoothCurve("b0 = 1 describes a smooth branch")
    if b0 < 2:
        raise InvalidCharacteristic(f"b0 must be at least 2, got {b0}")
    if not betas:
        raise InvalidCharacteristic("at least one characteristic exponent is required")
    prev, e = b0, b0
    for b in betas:
        if b <= prev:
            raise InvalidCharacteristic(f"exponents must increase strictly: {b} after {prev}")
        g = gcd(e, b)
        if g == e:
            raise InvalidCharacteristic(f"exponent {b} does not lower the gcd {e}")
        prev, e = b, g
    if e != 1:
        raise InvalidCharacteristic(f"gcd chain stops at {e}, not 1")


def multiplicity_sequence(b0: int, *betas: int) -> tuple[int, ...]:
    """Multiplicities of the infinitely near points of the branch.

    Runs Euclid on ``(b1, b0)``, then on ``(b_i - b_{i-1}, e_{i-1})``; each
    quotient ``q`` of a division by ``d`` contributes ``d`` repeated ``q`` times.
    """
    _check_exponents(b0, betas)
    out: list[int] = []
    prev, e = 0, b0
    for b in betas:
        a, d = b - prev, e
        while d:
            q, r = divmod(a, d)
            out += [d] * q
            a, d = d, r
        prev, e = b, a
    return tuple(out)


def tree_from_multiplicities(mult: Sequence[int]) -> ResolutionTree:
    """Proximity structure of a single branch from its multiplicity sequence.

    Point ``i`` is proximate to ``i - 1``; the points proximate to ``i`` are the
    shortest run ``i+1, ..., i+k`` whose multiplicities add up to ``m_i``.
    """
    N = len(mult)
    parents: list[set[int]] = [set() for _ in range(N)]
    for i in range(N - 1):
        acc, j = 0, i + 1
        while j < N and acc < mult[i]:
            acc += mult[j]
            parents[j].add(i)
            j += 1
        if acc != mult[i]:
            raise InvalidCharacteristic(f"multiplicity {mult[i]} at point {i} is not a proximity sum")
    return ResolutionTree.from_parents(sorted(p) for p in parents)


def tree_from_char_exponents(b0: int, *betas: int) -> tuple[ResolutionTree, Numbering]:
    mult = multiplicity_sequence(b0, *betas)
    tree = tree_from_multiplicities(mult)
    n = tuple(int(i == len(mult) - 1) for i in range(len(mult)))
    assert valuations(tree, n) == mult
    return tree, n


_CUSP = ((), (0,), (0, 1))
_FAMILIES = {
    "cusp": (_CUSP, (0, 0, 1)),
    # the two cusps are separated after one blow-up
    "double_cusp": (((), (0,), (0,), (0, 2), (0, 1)), (0, 0, 0, 1, 1)),
    "example1": (((), (0,), (0,), (0, 2)), (0, 2, 1, 2)),
}


def builtin_family(name: str, params: Sequence[int] = ()) -> tuple[ResolutionTree, Numbering]:
    params = tuple(int(p) for p in params)
    if name == "r_cusps":
        if len(params) != 1 or params[0] < 1:
            raise UnknownFamily("r_cusps takes one positive parameter r")
        (r,) = params
        if r % 2:
            raise OddR(f"r_cusps is only set up for even r, got {r}")
        return ResolutionTree(_CUSP), (0, 0, r)
    if name not in _FAMILIES:
        raise UnknownFamily(f"unknown family {name!r}; known: {', '.join(family_names())}")
    if params:
        raise UnknownFamily(f"family {name!r} takes no parameters")
    parents, n = _FAMILIES[name]
    return ResolutionTree(parents), n


def family_names() -> list[str]:
    return sorted([*_FAMILIES, "r_cusps"])


def resolve(desc: CurveDescriptor) -> tuple[ResolutionTree, Numbering]:
    if isinstance(desc, ExplicitTree):
        return desc.tree, check_numbering(desc.tree, desc.numbering)
    if isinstance(desc, Irreducible):
        return tree_from_char_exponents(*desc.exponents)
    if isinstance(desc, Family):
        return builtin_family(desc.name, desc.params)
    raise TypeError(f"not a curve descriptor: {desc!r}")


def milnor_number(tree: ResolutionTree, n: Sequence[int]) -> MilnorResult:
    nu = valuations(tree, n)
    r = sum(n)
    return MilnorResult(sum(v * (v - 1) for v in nu) - r + 1, r)
