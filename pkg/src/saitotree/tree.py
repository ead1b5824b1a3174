"""Ordered resolution trees, proximity data, multiplicities and valuations.

A tree is grown from a single root by two insertion rules:

* rule 1 attaches a new vertex to one existing vertex ``c``;
* rule 2 removes an existing edge ``c - c'`` and puts the new vertex in
  between, so that it has both ``c`` and ``c'`` as parents.

Vertex ids are the insertion indices ``0..N-1``; a parent always has a smaller
id than its child, so every matrix below uses that single ordering.  All
arithmetic here is on Python integers.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotComparable, Rule2EdgeMissing, TreeError, UnknownVertex

IntMatrix = list[list[int]]
Numbering = tuple[int, ...]
Step = tuple[int, ...]


def rule1(parent: int) -> Step:
    return (parent,)


def rule2(c: int, c_prime: int) -> Step:
    return tuple(sorted((c, c_prime)))


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _replay(parents: Sequence[Sequence[int]]) -> frozenset[tuple[int, int]]:
    """Validate ``parents`` against the insertion rules and return the edges."""
    if not parents or tuple(parents[0]) != ():
        raise TreeError("vertex 0 must be the root with no parents")
    edges: set[tuple[int, int]] = set()
    for s in range(1, len(parents)):
        ps = tuple(parents[s])
        for p in ps:
            if not (0 <= p < s):
                raise UnknownVertex(f"vertex {s} references unknown vertex {p}")
        if len(ps) == 1:
            edges.add(_edge(ps[0], s))
        elif len(ps) == 2:
            if ps[0] == ps[1]:
                raise TreeError(f"vertex {s} lists parent {ps[0]} twice")
            e = _edge(*ps)
            if e not in edges:
                raise Rule2EdgeMissing(
                    f"vertex {s}: edge {e[0]}-{e[1]} does not exist at insertion time")
            edges.remove(e)
            edges.add(_edge(ps[0], s))
            edges.add(_edge(ps[1], s))
        else:
            raise TreeError(f"vertex {s} must have one or two parents, got {len(ps)}")
    return frozenset(edges)


@dataclass(frozen=True)
class ResolutionTree:
    """Immutable ordered tree; ``parents[s]`` is the sorted parent tuple of ``s``."""

    parents: tuple[tuple[int, ...], ...]
    edges: frozenset[tuple[int, int]] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        parents = tuple(tuple(sorted(p)) for p in self.parents)
        object.__setattr__(self, "parents", parents)
        object.__setattr__(self, "edges", _replay(parents))

    @classmethod
    def from_parents(cls, parents: Iterable[Iterable[int]]) -> "ResolutionTree":
        return cls(tuple(tuple(p) for p in parents))

    @property
    def root(self) -> int:
        return 0

    def __len__(self) -> int:
        return len(self.parents)

    @property
    def vertices(self) -> range:
        return range(len(self.parents))

    def check_vertex(self, c: int) -> None:
        if not (0 <= c < len(self.parents)):
            raise UnknownVertex(f"unknown vertex {c}")

    @cached_property
    def _neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in self.parents]
        for a, b in self.edges:
            nb[a].append(b)
            nb[b].append(a)
        return tuple(tuple(sorted(x)) for x in nb)

    def neighbors(self, c: int) -> tuple[int, ...]:
        return self._neighbors[c]

    @cached_property
    def _proximate(self) -> tuple[tuple[int, ...], ...]:
        prox: list[list[int]] = [[] for _ in self.parents]
        for s, ps in enumerate(self.parents):
            for p in ps:
                prox[p].append(s)
        return tuple(tuple(x) for x in prox)

    def proximate(self, c: int) -> tuple[int, ...]:
        """Vertices having ``c`` among their parents (the ``-1`` entries of row ``c``)."""
        return self._proximate[c]

    @cached_property
    def _below(self) -> tuple[frozenset[int], ...]:
        # _below[s] = {t : t <= s}
        below: list[frozenset[int]] = []
        for s, ps in enumerate(self.parents):
            acc = {s}
            for p in ps:
                acc |= below[p]
            below.append(frozenset(acc))
        return tuple(below)

    def leq(self, a: int, b: int) -> bool:
        """Partial order generated by ``parent <= child``."""
        return a in self._below[b]

    def steps(self) -> list[Step]:
        """Construction steps that rebuild this tree with :func:`build_tree`."""
        return [self.parents[s] for s in range(1, len(self))]


def build_tree(steps: Iterable[Step | int] = ()) -> ResolutionTree:
    """Replay construction steps on a single root.

    A step is a parent id (rule 1) or a tuple of one or two parent ids; a
    two-parent step splits the edge between them (rule 2).
    """
    parents: list[tuple[int, ...]] = [()]
    for st in steps:
        parents.append((st,) if isinstance(st, int) else tuple(st))
    return ResolutionTree.from_parents(parents)


def check_numbering(tree: ResolutionTree, n: Sequence[int]) -> Numbering:
    n = tuple(int(x) for x in n)
    if len(n) != len(tree):
        raise TreeError(f"numbering has {len(n)} entries for {len(tree)} vertices")
    if any(x < 0 for x in n):
        raise TreeError("numbering entries must be non-negative")
    return n


def bump(n: Sequence[int], c: int, amount: int = 1) -> Numbering:
    """``c . n``: add ``amount`` branches at vertex ``c``."""
    out = list(n)
    if not 0 <= c < len(out):
        raise UnknownVertex(f"unknown vertex {c}")
    out[c] += amount
    return tuple(out)


# -- matrices ----------------------------------------------------------------

def proximity_matrix(tree: ResolutionTree) -> IntMatrix:
    N = len(tree)
    P = [[int(i == j) for j in range(N)] for i in range(N)]
    for j, ps in enumerate(tree.parents):
        for i in ps:
            P[i][j] = -1
    return P


def inverse_proximity(P: IntMatrix) -> IntMatrix:
    """Exact inverse of a unit upper triangular integer matrix."""
    N = len(P)
    for i in range(N):
        if P[i][i] != 1 or any(P[i][j] for j in range(i)):
            raise ValueError("matrix is not unit upper triangular")
    Q = [[0] * N for _ in range(N)]
    # Solve P Q = I column by column, bottom row first.
    for j in range(N):
        for i in range(j, -1, -1):
            acc = int(i == j)
            for k in range(i + 1, j + 1):
                acc -= P[i][k] * Q[k][j]
            Q[i][j] = acc
    return Q


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(A))]


def transpose(A: IntMatrix) -> IntMatrix:
    return [list(r) for r in zip(*A)]


def matvec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def intersection_matrix(tree: ResolutionTree) -> IntMatrix:
    """Intersection form of the exceptional divisor, ``-(P P^T)``.

    Diagonal entries are the (negative) self-intersections and off-diagonal
    ones are 1 exactly on tree edges.
    """
    P = proximity_matrix(tree)
    return [[-x for x in row] for row in matmul(P, transpose(P))]


def self_intersection(tree: ResolutionTree, s: int) -> int:
    return -(1 + len(tree.proximate(s)))


def multiplicities(tree: ResolutionTree) -> tuple[int, ...]:
    rho: list[int] = []
    for ps in tree.parents:
        rho.append(sum(rho[p] for p in ps) if ps else 1)
    return tuple(rho)


def valuations(tree: ResolutionTree, n: Sequence[int]) -> tuple[int, ...]:
    """``P^{-1} n`` computed by the recursion ``nu_c = n_c + sum of nu over proximate vertices``."""
    n = check_numbering(tree, n)
    nu = list(n)
    for s in range(len(tree) - 1, -1, -1):
        for p in tree.parents[s]:
            nu[p] += nu[s]
    return tuple(nu)


def access_tree(tree: ResolutionTree, c: int, c_prime: int) -> frozenset[int]:
    """Vertices ``s`` with ``c <= s <= c_prime``."""
    tree.check_vertex(c)
    tree.check_vertex(c_prime)
    if not tree.leq(c, c_prime):
        raise NotComparable(f"{c} is not below {c_prime}")
    return frozenset(s for s in tree._below[c_prime] if tree.leq(c, s))


def root_access(tree: ResolutionTree, c: int) -> frozenset[int]:
    return access_tree(tree, tree.root, c)


# -- surgery -------------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    """A connected component of ``tree`` minus its root, re-indexed from 0.

    ``vertices[i]`` is the original id of local vertex ``i``; ``attach`` is the
    local id of the vertex that was adjacent to the removed root.
    """

    tree: ResolutionTree
    vertices: tuple[int, ...]
    attach: int


def split_at_root(tree: ResolutionTree) -> list[Component]:
    root = tree.root
    rest = [v for v in tree.vertices if v != root]
    seen: set[int] = set()
    comps: list[Component] = []
    for start in rest:
        if start in seen:
            continue
        stack, members = [start], {start}
        seen.add(start)
        while stack:
            x = stack.pop()
            for y in tree.neighbors(x):
                if y != root and y not in seen:
                    seen.add(y)
                    members.add(y)
                    stack.append(y)
        verts = tuple(sorted(members))
        local = {v: i for i, v in enumerate(verts)}
        parents = [tuple(local[p] for p in tree.parents[v] if p != root) for v in verts]
        (attach,) = [local[v] for v in tree.neighbors(root) if v in local]
        comps.append(Component(ResolutionTree.from_parents(parents), verts, attach))
    return comps


def random_tree(rng: random.Random, size: int, rule2_bias: float = 0.5) -> ResolutionTree:
    """Grow a tree with ``size`` vertices by random insertions."""
    parents: list[tuple[int, ...]] = [()]
    edges: list[tuple[int, int]] = []
    for s in range(1, size):
        if edges and rng.random() < rule2_bias:
            a, b = edges.pop(rng.randrange(len(edges)))
            parents.append((a, b))
            edges += [(a, s), (b, s)]
        else:
            p = rng.randrange(s)
            parents.append((p,))
            edges.append((p, s))
    return ResolutionTree.from_parents(parents)
