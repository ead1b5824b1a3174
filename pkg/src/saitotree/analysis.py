"""Saito numbers, per-vertex valuations and foliation gluing data.

Everything is derived from the Saito dicriticity of a numbered tree.  The
gluing data is a concrete assignment of Camacho-Sad indices: at every white
(invariant) vertex the indices along the divisor add up to the negated
self-intersection, and across a white-white edge the two indices are
reciprocal.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .dicriticity import Dicriticity, delta_counts, saito, white_components
from .errors import DegenerateAssignment, InternalInconsistency
from .tree import (ResolutionTree, check_numbering, multiplicities,
                   self_intersection, valuations)

log = logging.getLogger(__name__)


def _valuation2(nu: int, delta: int, white: int) -> int:
    # twice (nu + delta)/2 - (1 - white if nu + delta even else 1/2)
    k = nu + delta
    return k - (2 * (1 - white) if k % 2 == 0 else 1)


def saito_number(tree: ResolutionTree, n: Sequence[int]) -> int:
    """Valuation of a Saito vector field of the curve (root of the profile)."""
    n = check_numbering(tree, n)
    D, eps = saito(tree, n)
    twice = _valuation2(valuations(tree, n)[0], 0, D[0])
    assert twice % 2 == 0
    s = twice // 2
    total = sum(r * e for r, e in zip(multiplicities(tree), eps))
    if total != s + 1:
        raise InternalInconsistency(f"sum rho*eps = {total} but Saito number + 1 = {s + 1}")
    return s


@dataclass(frozen=True)
class SaitoProfile:
    saito_number: int
    per_vertex: tuple[int, ...]
    dicriticity: Dicriticity
    configuration: tuple[int, ...]


def saito_valuation_profile(tree: ResolutionTree, n: Sequence[int]) -> SaitoProfile:
    n = check_numbering(tree, n)
    D, eps = saito(tree, n)
    nu = valuations(tree, n)
    delta = delta_counts(tree, D)
    per = []
    for s in tree.vertices:
        twice = _valuation2(nu[s], delta[s], D[s])
        if twice % 2:
            raise InternalInconsistency(f"valuation at vertex {s} is not an integer")
        per.append(twice // 2)
    return SaitoProfile(saito_number(tree, n), tuple(per), D, eps)


def check_upper_bound(tree: ResolutionTree, n: Sequence[int], s: int) -> bool:
    return s <= valuations(tree, n)[0] // 2


# -- gluing ------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantModel:
    """White vertex: Camacho-Sad indices of the foliation along the component."""

    self_int_magnitude: int
    free: tuple[Fraction, ...]
    edges: dict[int, Fraction] = field(default_factory=dict)

    def index_sum(self) -> Fraction:
        return sum(self.free, Fraction(0)) + sum(self.edges.values(), Fraction(0))


@dataclass(frozen=True)
class DicriticalModel:
    tangency_count: int


@dataclass(frozen=True)
class GluingData:
    white: dict[int, InvariantModel]
    black: dict[int, DicriticalModel]

    def residuals(self) -> dict:
        """Exact defects of every constraint; all zero for valid data."""
        cs = {s: m.index_sum() - m.self_int_magnitude for s, m in self.white.items()}
        recip = {}
        for s, m in self.white.items():
            for t, lam in m.edges.items():
                if s < t:
                    recip[(s, t)] = lam * self.white[t].edges[s] - 1
        return {"camacho_sad": cs, "reciprocity": recip}

    def is_valid(self) -> bool:
        r = self.residuals()
        weights = [w for m in self.white.values() for w in (*m.free, *m.edges.values())]
        return (all(v == 0 for v in r["camacho_sad"].values())
                and all(v == 0 for v in r["reciprocity"].values())
                and all(w != 0 for w in weights)
                and all(b.tangency_count >= 0 for b in self.black.values()))


def _glue_component(tree, comp, eps, p, pick) -> dict[int, InvariantModel]:
    root = next(s for s in sorted(comp) if eps[s] > 0)
    order, up = [root], {root: None}
    for x in order:
        for y in tree.neighbors(x):
            if y in comp and y not in up:
                up[y] = x
                order.append(y)
    # lam[s][t]: index at s of the edge s-t
    lam: dict[int, dict[int, Fraction]] = {s: {} for s in comp}
    free: dict[int, tuple[Fraction, ...]] = {}
    for s in reversed(order):
        for t in tree.neighbors(s):
            if up.get(t) == s:
                lam[s][t] = 1 / lam[t][s]
        parent = up[s]
        known = sum(lam[s].values(), Fraction(0))
        if parent is not None:
            lam[s][parent] = pick() if eps[s] > 0 else p[s] - known
            if lam[s][parent] == 0:
                raise DegenerateAssignment(f"forced zero index at vertex {s}")
            known += lam[s][parent]
        if eps[s] > 0:
            fs = [pick() for _ in range(eps[s] - 1)]
            fs.append(p[s] - known - sum(fs, Fraction(0)))
            if fs[-1] == 0:
                raise DegenerateAssignment(f"zero free index at vertex {s}")
            free[s] = tuple(fs)
        else:
            free[s] = ()
    return {s: InvariantModel(p[s], free[s], dict(sorted(lam[s].items()))) for s in comp}


def gluing_data(tree: ResolutionTree, n: Sequence[int], seed: int = 0,
                retries: int = 32) -> GluingData:
    """Exact rational Camacho-Sad indices compatible with the Saito data.

    Free indices start as ``1, 1/2, 1/3, ...``; whenever that forces a zero
    somewhere the free choices are redrawn from a generator seeded by ``seed``.
    """
    n = check_numbering(tree, n)
    D, eps = saito(tree, n)
    p = [-self_intersection(tree, s) for s in tree.vertices]
    black = {s: DicriticalModel(eps[s] - 2 + sum(D[v] for v in tree.neighbors(s)))
             for s in tree.vertices if not D[s]}
    white: dict[int, InvariantModel] = {}
    rng = random.Random(seed)
    for comp in white_components(tree, D):
        if not any(eps[s] > 0 for s in comp):
            raise DegenerateAssignment(f"white component {sorted(comp)} has no positive entry")
        counter = iter(range(1, 1 << 30))
        pick = lambda: Fraction(1, next(counter))  # noqa: E731
        for attempt in range(retries + 1):
            try:
                white.update(_glue_component(tree, comp, eps, p, pick))
                break
            except DegenerateAssignment as exc:
                log.debug("retrying component %s: %s", sorted(comp), exc)
                pick = lambda: Fraction(rng.randint(1, 997), rng.randint(1, 997))  # noqa: E731
        else:
            raise DegenerateAssignment(f"no nonzero assignment found for {sorted(comp)}")
    return GluingData(dict(sorted(white.items())), black)


@dataclass(frozen=True)
class IndexSums:
    kind: tuple[str, ...]          # "Ind" at white vertices, "Tan" at black ones
    totals: tuple[int, ...]
    rho_eps: int                   # sum of rho_s * eps_s
    saito_number: int


def index_sums(tree: ResolutionTree, n: Sequence[int]) -> IndexSums:
    n = check_numbering(tree, n)
    D, eps = saito(tree, n)
    kinds, totals = [], []
    for s in tree.vertices:
        w = sum(D[v] for v in tree.neighbors(s))
        kinds.append("Ind" if D[s] else "Tan")
        totals.append(eps[s] + w if D[s] else eps[s] - 2 + w)
    rho_eps = sum(r * e for r, e in zip(multiplicities(tree), eps))
    s = saito_number(tree, n)
    if rho_eps != s + 1:
        raise InternalInconsistency(f"sum rho*eps = {rho_eps}, Saito number = {s}")
    return IndexSums(tuple(kinds), tuple(totals), rho_eps, s)
