"""Generic dimension of the moduli space by blowing up the root repeatedly.

Each level contributes a number computed from the Saito data of every
numbered tree present at that level; blowing up the root splits the tree
into components, each of which picks up one extra branch (the new
exceptional divisor) at the vertex that touched the root.

The per-level contribution is a pluggable :data:`LevelRule`.  The shipped
default, :func:`radial_split_rule`, depends only on the root valuation ``nu``,
the Saito number ``s`` and the root colour; with ``T(k) = (k-1)(k-2)/2`` it is
``T(s) + T(nu - s)``, except for radial germs (``nu`` even, dicritical root)
where the first term becomes ``T(s + 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .analysis import saito_number
from .dicriticity import Dicriticity, saito
from .errors import NegativeResult, UnsupportedInstance
from .tree import Numbering, ResolutionTree, bump, check_numbering, split_at_root, valuations


@dataclass(frozen=True)
class BlowupStep:
    components: tuple[tuple[ResolutionTree, Numbering], ...]


def blowup_root(tree: ResolutionTree, n: Sequence[int]) -> BlowupStep:
    n = check_numbering(tree, n)
    comps = []
    for comp in split_at_root(tree):
        local = tuple(n[v] for v in comp.vertices)
        comps.append((comp.tree, bump(local, comp.attach)))
    return BlowupStep(tuple(comps))


@dataclass(frozen=True)
class LevelContribution:
    level_index: int
    value: int
    numbering: Numbering
    dicriticity: Dicriticity
    configuration: tuple[int, ...]


LevelRule = Callable[[ResolutionTree, Numbering], int]


def _tri(k: int) -> int:
    return (k - 1) * (k - 2) // 2 if k > 2 else 0


def radial_split_rule(tree: ResolutionTree, n: Numbering) -> int:
    nu = valuations(tree, n)[0]
    if nu == 0:
        raise UnsupportedInstance("the curve does not pass through the root", (tree.parents, n))
    s = saito_number(tree, n)
    white_root = saito(tree, n).dicriticity[0]
    radial = nu % 2 == 0 and not white_root
    return _tri(s + 1 if radial else s) + _tri(nu - s)


def level_contribution(tree: ResolutionTree, n: Sequence[int], rule: Optional[LevelRule] = None,
                       level_index: int = 1) -> LevelContribution:
    n = check_numbering(tree, n)
    rule = rule or radial_split_rule
    D, eps = saito(tree, n)
    value = rule(tree, n)
    if value < 0:
        raise UnsupportedInstance(f"level rule returned {value}", (tree.parents, n, D, eps))
    return LevelContribution(level_index, value, n, D, eps)


@dataclass(frozen=True)
class TjurinaReport:
    mu: int
    modularity: int
    tau: int


@dataclass(frozen=True)
class ModuliReport:
    levels: tuple[LevelContribution, ...]
    total: int
    tjurina: Optional[TjurinaReport] = None

    def level_totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.levels:
            out[c.level_index] = out.get(c.level_index, 0) + c.value
        return out


def generic_moduli_dimension(tree: ResolutionTree, n: Sequence[int],
                             rule: Optional[LevelRule] = None,
                             modularity: Optional[int] = None) -> ModuliReport:
    """Sum the level contributions until every vertex has been blown up."""
    n = check_numbering(tree, n)
    pending = [(tree, n)]
    contribs: list[LevelContribution] = []
    level = 1
    while pending:
        nxt = []
        for t, m in pending:
            try:
                contribs.append(level_contribution(t, m, rule, level))
            except UnsupportedInstance as exc:
                exc.snapshot = {"level": level, "parents": t.parents, "numbering": m}
                raise
            nxt.extend(blowup_root(t, m).components)
        pending = nxt
        level += 1
    total = sum(c.value for c in contribs)
    tj = None
    if modularity is not None:
        from .curves import milnor_number
        mu = milnor_number(tree, n).mu
        tj = TjurinaReport(mu, modularity, generic_tjurina(mu, modularity, total))
    return ModuliReport(tuple(contribs), total, tj)


def generic_tjurina(mu: int, modularity: int, dim: int) -> int:
    if min(mu, modularity, dim) < 0:
        raise ValueError("inputs must be non-negative")
    tau = mu - modularity + dim
    if tau < 0:
        raise NegativeResult(f"mu - modularity + dim = {tau} is negative")
    return tau
