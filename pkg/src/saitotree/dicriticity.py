"""Dicriticities of a numbered tree and the Saito dicriticity.

A dicriticity is a 0/1 colouring of the vertices (1 = white/invariant,
0 = black/dicritical).  From a numbered tree and a dicriticity one gets the
square indices and the configuration ``eps = P(nu/2 - square)``; the Saito
dicriticity is the unique colouring whose configuration passes the
admissibility bounds.

Internally square indices and configurations are handled as twice their
value so that everything stays in Python integers.
"""
from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import (IntegralityViolation, InternalInconsistency, TreeTooLarge,
                     UniquenessViolation)
from .halfint import HalfInt, parity_select
from .kernels import enumerate_admissible
from .tree import (Numbering, ResolutionTree, access_tree, bump, check_numbering,
                   multiplicities, proximity_matrix, root_access, split_at_root,
                   valuations)

log = logging.getLogger(__name__)

Dicriticity = tuple[int, ...]

BRUTEFORCE_CAP = 20


class SaitoResult(NamedTuple):
    dicriticity: Dicriticity
    configuration: tuple[int, ...]


def _check_dicriticity(tree: ResolutionTree, D: Sequence[int]) -> Dicriticity:
    D = tuple(int(x) for x in D)
    if len(D) != len(tree) or any(x not in (0, 1) for x in D):
        raise ValueError(f"dicriticity must be a 0/1 vector of length {len(tree)}")
    return D


def delta_counts(tree: ResolutionTree, D: Sequence[int]) -> tuple[int, ...]:
    """Number of white parents of each vertex."""
    return tuple(sum(D[p] for p in ps) for ps in tree.parents)


def _square2(tree, nu, D) -> list[int]:
    out = []
    for c, ps in enumerate(tree.parents):
        d = sum(D[p] for p in ps)
        out.append(d - (2 * D[c] if (nu[c] - d) % 2 == 0 else 1))
    return out


def _eps2(tree, n, sq2) -> list[int]:
    e = [n[c] - sq2[c] for c in range(len(n))]
    for s, ps in enumerate(tree.parents):
        for p in ps:
            e[p] += sq2[s]
    return e


def _halve(e2: Sequence[int], where: str = "") -> tuple[int, ...]:
    bad = [c for c, x in enumerate(e2) if x % 2]
    if bad:
        log.error("non-integral configuration at vertices %s %s", bad, where)
        raise IntegralityViolation(f"configuration is not integral at vertices {bad}")
    return tuple(x // 2 for x in e2)


def square_indices(tree: ResolutionTree, n: Sequence[int], D: Sequence[int]) -> tuple[HalfInt, ...]:
    n = check_numbering(tree, n)
    D = _check_dicriticity(tree, D)
    return tuple(HalfInt(x) for x in _square2(tree, valuations(tree, n), D))


def square_index(tree: ResolutionTree, n: Sequence[int], D: Sequence[int], c: int) -> HalfInt:
    """``delta_c/2 - (D_c if nu_c - delta_c is even else 1/2)``."""
    tree.check_vertex(c)
    return square_indices(tree, n, D)[c]


def configuration_matrix(tree: ResolutionTree, n: Sequence[int], D: Sequence[int]) -> tuple[HalfInt, ...]:
    """Dense route: ``P (nu/2 - square)`` with half-integer entries."""
    nu = valuations(tree, n)
    sq = square_indices(tree, n, D)
    P = proximity_matrix(tree)
    w = [HalfInt(v) - s for v, s in zip(nu, sq)]
    return tuple(sum((w[j] * P[i][j] for j in range(len(w))), HalfInt(0))
                 for i in range(len(w)))


def configuration_expanded(tree: ResolutionTree, n: Sequence[int], D: Sequence[int]) -> tuple[HalfInt, ...]:
    """Neighbour-sum route: ``n_c/2 - sq_c`` plus the square indices of every
    access tree from ``c`` to a neighbour above ``c`` (``c`` excluded)."""
    n = check_numbering(tree, n)
    sq = square_indices(tree, n, D)
    out = []
    for c in tree.vertices:
        acc = HalfInt(n[c]) - sq[c]
        for v in tree.neighbors(c):
            if v > c:
                for s in access_tree(tree, c, v) - {c}:
                    acc = acc + sq[s]
        out.append(acc)
    return tuple(out)


def configuration(tree: ResolutionTree, n: Sequence[int], D: Sequence[int],
                  verify: bool = True) -> tuple[int, ...]:
    """Integer configuration of ``D``.

    With ``verify`` the dense matrix form and the neighbour-sum expansion are
    evaluated as well and must agree exactly with the sparse computation.
    """
    n = check_numbering(tree, n)
    D = _check_dicriticity(tree, D)
    e2 = _eps2(tree, n, _square2(tree, valuations(tree, n), D))
    if verify:
        dense = [x.twice for x in configuration_matrix(tree, n, D)]
        expanded = [x.twice for x in configuration_expanded(tree, n, D)]
        if dense != e2 or expanded != e2:
            raise InternalInconsistency("configuration routes disagree")
    return _halve(e2, f"(n={n}, D={D})")


@dataclass(frozen=True)
class Violation:
    vertex: int
    epsilon: int
    bound: int
    kind: str  # "white" (eps >= n) or "black" (eps >= 2 - white neighbours)

    def __str__(self):
        return f"vertex {self.vertex}: eps={self.epsilon} < {self.bound} ({self.kind})"


@dataclass(frozen=True)
class Admissibility:
    configuration: tuple[int, ...]
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def _violations(tree, n, D, eps) -> tuple[Violation, ...]:
    out = []
    for c in tree.vertices:
        if D[c]:
            bound, kind = n[c], "white"
        else:
            bound, kind = 2 - sum(D[v] for v in tree.neighbors(c)), "black"
        if eps[c] < bound:
            out.append(Violation(c, eps[c], bound, kind))
    return tuple(out)


def is_admissible(tree: ResolutionTree, n: Sequence[int], D: Sequence[int]) -> Admissibility:
    n = check_numbering(tree, n)
    D = _check_dicriticity(tree, D)
    eps = configuration(tree, n, D, verify=False)
    return Admissibility(eps, _violations(tree, n, D, eps))


def configuration_table(tree: ResolutionTree, n: Sequence[int]) -> list[tuple[Dicriticity, Admissibility]]:
    """Every dicriticity (lexicographic order) with its configuration and violations."""
    return [(D, is_admissible(tree, n, D))
            for D in itertools.product((0, 1), repeat=len(tree))]


def _kernel_arrays(tree: ResolutionTree, n: Numbering):
    par0 = [ps[0] if len(ps) > 0 else -1 for ps in tree.parents]
    par1 = [ps[1] if len(ps) > 1 else -1 for ps in tree.parents]
    ptr, idx = [0], []
    for c in tree.vertices:
        idx.extend(tree.neighbors(c))
        ptr.append(len(idx))
    return par0, par1, ptr, idx, list(valuations(tree, n)), list(n)


def saito_bruteforce(tree: ResolutionTree, n: Sequence[int], cap: int = BRUTEFORCE_CAP,
                     backend: Optional[str] = None) -> SaitoResult:
    """Enumerate all ``2^N`` dicriticities and return the unique admissible one."""
    n = check_numbering(tree, n)
    if len(tree) > cap:
        raise TreeTooLarge(f"{len(tree)} vertices exceeds the brute-force cap of {cap}")
    masks, nonintegral = enumerate_admissible(*_kernel_arrays(tree, n), backend=backend)
    if nonintegral:
        log.error("%d dicriticities with non-integral configuration for n=%s", nonintegral, n)
        raise IntegralityViolation(f"{nonintegral} dicriticities have non-integral configurations")
    if len(masks) != 1:
        raise UniquenessViolation(f"{len(masks)} admissible dicriticities for n={n}")
    D = tuple((masks[0] >> c) & 1 for c in tree.vertices)
    return SaitoResult(D, configuration(tree, n, D, verify=False))


def _root_ok(tree, n, D, eps) -> bool:
    r = tree.root
    if D[r]:
        return eps[r] >= n[r]
    return eps[r] >= 2 - sum(D[v] for v in tree.neighbors(r))


def _solve(tree: ResolutionTree, n: Numbering, memo: dict) -> SaitoResult:
    key = (tree.parents, n)
    hit = memo.get(key)
    if hit is not None:
        return hit
    comps = split_at_root(tree)
    found = []
    for star in (0, 1):
        D = [0] * len(tree)
        D[tree.root] = star
        for comp in comps:
            m = tuple(n[v] for v in comp.vertices)
            if star:
                m = bump(m, comp.attach)
            sub = _solve(comp.tree, m, memo)
            for i, v in enumerate(comp.vertices):
                D[v] = sub.dicriticity[i]
        D = tuple(D)
        eps = _halve(_eps2(tree, n, _square2(tree, valuations(tree, n), D)))
        if _root_ok(tree, n, D, eps):
            found.append(SaitoResult(D, eps))
    if len(found) != 1:
        raise InternalInconsistency(
            f"{len(found)} root candidates admissible for {tree.parents} with n={n}")
    res = found[0]
    bad = _violations(tree, n, res.dicriticity, res.configuration)
    if bad:
        raise InternalInconsistency(f"glued dicriticity not admissible: {bad[0]}")
    memo[key] = res
    return res


def saito_inductive(tree: ResolutionTree, n: Sequence[int]) -> SaitoResult:
    """Saito dicriticity by gluing the solutions on the components of the tree
    minus its root, once with the original numbering (root black) and once with
    the attaching vertex bumped (root white)."""
    return _saito_cached(tree, check_numbering(tree, n))


@functools.lru_cache(maxsize=8192)
def _saito_cached(tree: ResolutionTree, n: Numbering) -> SaitoResult:
    return _solve(tree, n, {})


def clear_cache() -> None:
    """Drop memoised Saito dicriticities (shared across calls)."""
    _saito_cached.cache_clear()


saito = saito_inductive


# -- invariants along access trees ----------------------------------------------

def _sq_sum(tree, over, n_a, n_b) -> HalfInt:
    sa = square_indices(tree, n_a, saito(tree, n_a).dicriticity)
    sb = square_indices(tree, n_b, saito(tree, n_b).dicriticity)
    return sum((sa[s] + sb[s] for s in over), HalfInt(0))


def theta01(tree: ResolutionTree, n: Sequence[int], c: int) -> HalfInt:
    n = check_numbering(tree, n)
    return _sq_sum(tree, root_access(tree, c), n, bump(n, c))


def theta02(tree: ResolutionTree, n: Sequence[int], c0: int, c1: int) -> HalfInt:
    n = check_numbering(tree, n)
    return _sq_sum(tree, root_access(tree, c1), n, bump(bump(n, c0), c1))


def theta11(tree: ResolutionTree, n: Sequence[int], c0: int, c1: int) -> HalfInt:
    n = check_numbering(tree, n)
    return _sq_sum(tree, root_access(tree, c1), bump(n, c0), bump(n, c1))


def theta_reference(tree: ResolutionTree, n: Sequence[int], c: int) -> HalfInt:
    """``-D_c - |A_c|/2`` for the Saito dicriticity of ``n``."""
    D = saito(tree, n).dicriticity
    return HalfInt(-2 * D[c] - len(root_access(tree, c)))


@dataclass(frozen=True)
class MixedBranchReport:
    c: int
    chain: tuple[int, ...]          # access chain from the root to c
    m_c: int
    is_pure: bool
    m_c_plus: Optional[int]
    d_n: tuple[int, ...]            # Saito dicriticity for n, along the chain
    d_cn: tuple[int, ...]           # Saito dicriticity for c.n, along the chain
    nu_n: tuple[int, ...]           # valuations for n, along the chain
    nu_cn: tuple[int, ...]

    @property
    def parity_facts(self) -> dict:
        k = self.chain.index(self.m_c_plus) if self.m_c_plus is not None else None
        return {
            "nu_root_n": "even" if self.nu_n[0] % 2 == 0 else "odd",
            "nu_root_cn": "even" if self.nu_cn[0] % 2 == 0 else "odd",
            "nu_m_plus_n": None if k is None else ("even" if self.nu_n[k] % 2 == 0 else "odd"),
            "nu_m_plus_cn": None if k is None else ("even" if self.nu_cn[k] % 2 == 0 else "odd"),
        }


def find_mixed_branch(tree: ResolutionTree, n: Sequence[int], c: int) -> Optional[MixedBranchReport]:
    n = check_numbering(tree, n)
    if multiplicities(tree)[c] != 1:
        raise ValueError(f"vertex {c} has multiplicity > 1")
    chain = tuple(sorted(root_access(tree, c)))
    cn = bump(n, c)
    Dn = saito(tree, n).dicriticity
    Dcn = saito(tree, cn).dicriticity
    nu_n, nu_cn = valuations(tree, n), valuations(tree, cn)
    k = 0
    while k < len(chain) and Dn[chain[k]] + Dcn[chain[k]] == 1:
        k += 1
    if k == 0:
        return None
    pure = k == len(chain)
    return MixedBranchReport(
        c=c, chain=chain, m_c=chain[k - 1], is_pure=pure,
        m_c_plus=None if pure else chain[k],
        d_n=tuple(Dn[s] for s in chain), d_cn=tuple(Dcn[s] for s in chain),
        nu_n=tuple(nu_n[s] for s in chain), nu_cn=tuple(nu_cn[s] for s in chain))


def check_mixed_inequality(report: Optional[MixedBranchReport]) -> bool:
    """Terminal inequality along a mixed branch (vacuously true without one)."""
    if report is None:
        return True
    head = parity_select(report.d_n[0], report.d_cn[0], report.nu_n[0])
    if report.is_pure:
        if len(report.chain) > 1 and report.d_n[-1] != 1:
            return False
        return head >= 1
    k = report.chain.index(report.m_c_plus)
    d_last = report.d_n[k]
    tail = parity_select(d_last, 1 - d_last, report.nu_n[k] - report.d_n[k - 1])
    return head - tail >= 1


def white_components(tree: ResolutionTree, D: Sequence[int]) -> list[frozenset[int]]:
    D = _check_dicriticity(tree, D)
    seen: set[int] = set()
    comps = []
    for s in tree.vertices:
        if not D[s] or s in seen:
            continue
        stack, comp = [s], {s}
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in tree.neighbors(x):
                if D[y] and y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps
