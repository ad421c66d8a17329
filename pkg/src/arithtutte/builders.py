"""Labeled graphs and delta-matroids as ranked sets."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .abelian import FGGroup, VectorList, quotient
from .axioms import AxiomReport, Violation
from .errors import ArgumentError
from .poly import BiLaurent, HalfInt
from .ranked import RankedSet, bits, check_ground_size, popcount, tutte


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    label: int = 1
    dotted: bool = False


@dataclass(frozen=True)
class LabeledGraph:
    """Loopless multigraph on vertices ``0..n_vertices-1`` with positive integer edge labels."""

    n_vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.n_vertices < 1:
            raise ArgumentError("a labeled graph needs at least one vertex")
        for e in self.edges:
            if not (0 <= e.u < self.n_vertices and 0 <= e.v < self.n_vertices):
                raise ArgumentError(f"edge {e} has an endpoint outside 0..{self.n_vertices - 1}")
            if e.u == e.v:
                raise ArgumentError(f"loops are not allowed: {e}")
            if e.label < 1:
                raise ArgumentError(f"edge labels must be positive: {e}")

    @property
    def regular(self) -> list[int]:
        return [i for i, e in enumerate(self.edges) if not e.dotted]

    @property
    def dotted(self) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.dotted]


def _edge_vector(g: LabeledGraph, e: Edge, flip: bool) -> list[int]:
    tail, head = (e.v, e.u) if flip else (e.u, e.v)
    vec = [0] * g.n_vertices
    vec[tail] = -e.label
    vec[head] = e.label
    return vec


def graph_to_vectorlist(g: LabeledGraph, orientation: Sequence[bool] | None = None) -> VectorList:
    """Regular-edge vectors projected to ``Z^n / <dotted-edge vectors>``.

    Edge ``(u, v)`` is oriented ``u -> v`` unless ``orientation[i]`` is true for that edge.
    """
    flips = [False] * len(g.edges) if orientation is None else list(orientation)
    if len(flips) != len(g.edges):
        raise ArgumentError("orientation needs one flag per edge")
    dotted = [_edge_vector(g, g.edges[i], flips[i]) for i in g.dotted]
    G, project = quotient(FGGroup(g.n_vertices), dotted)
    regular = g.regular
    return VectorList(
        G,
        tuple(project(_edge_vector(g, g.edges[i], flips[i])) for i in regular),
        tuple(f"e{i}" for i in regular),
    )


def _forest_rank(n: int, edges: Sequence[Edge]) -> int:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    r = 0
    for e in edges:
        a, b = find(e.u), find(e.v)
        if a != b:
            parent[a] = b
            r += 1
    return r


def graph_multiplicity_formula(g: LabeledGraph, A: int) -> int:
    """gcd over maximal forests T of (A + dotted edges) of the product of labels on T.

    ``A`` is a mask over the regular edges, in the order of :attr:`LabeledGraph.regular`.
    """
    regular = g.regular
    if A < 0 or A >> len(regular):
        raise ArgumentError("mask out of range for the regular edges")
    pool = [g.edges[regular[i]] for i in bits(A)] + [g.edges[i] for i in g.dotted]
    r = _forest_rank(g.n_vertices, pool)
    out = 0
    for T in itertools.combinations(pool, r):
        if _forest_rank(g.n_vertices, T) == r:
            out = math.gcd(out, math.prod(e.label for e in T))
    return out


@dataclass(frozen=True)
class DeltaMatroid:
    """Ground set plus a nonempty family of feasible subsets, stored as masks."""

    ground: tuple[str, ...]
    feasible: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "ground", tuple(str(s) for s in self.ground))
        object.__setattr__(self, "feasible", frozenset(self.feasible))
        if len(set(self.ground)) != len(self.ground):
            raise ArgumentError("duplicate ground elements")
        if not self.feasible:
            raise ArgumentError("a delta-matroid needs at least one feasible set")
        full = (1 << len(self.ground)) - 1
        for F in self.feasible:
            if F < 0 or F & ~full:
                raise ArgumentError(f"feasible mask {F:#b} is not a subset of the ground set")

    @classmethod
    def from_sets(cls, ground: Sequence[str], feasible) -> DeltaMatroid:
        index = {str(s): i for i, s in enumerate(ground)}
        masks = set()
        for F in feasible:
            mask = 0
            for s in F:
                if str(s) not in index:
                    raise ArgumentError(f"unknown element {s!r} in feasible set")
                mask |= 1 << index[str(s)]
            masks.add(mask)
        return cls(tuple(ground), frozenset(masks))

    @property
    def n(self) -> int:
        return len(self.ground)

    def labels_of(self, mask: int) -> list[str]:
        return [self.ground[i] for i in bits(mask)]


def check_symmetric_exchange(D: DeltaMatroid) -> AxiomReport:
    """For all feasible S, T and u in S^T there is v in S^T with S^{u,v} feasible."""
    rep = AxiomReport()
    fam = D.feasible
    for S in sorted(fam):
        for T in sorted(fam):
            diff = S ^ T
            for u in bits(diff):
                if not any(S ^ ((1 << u) | (1 << v)) in fam for v in bits(diff)):
                    rep.violations.append(
                        Violation(
                            "symmetric-exchange",
                            {"S": D.labels_of(S), "T": D.labels_of(T)},
                            "no v in S^T makes S^{u,v} feasible",
                            D.ground[u],
                        )
                    )
    return rep


def is_even(D: DeltaMatroid) -> bool:
    return len({popcount(F) % 2 for F in D.feasible}) == 1


def delete_element(feasible: frozenset[int], e: int) -> frozenset[int]:
    """Delete ``e``: keep feasible sets avoiding it, or drop it from all when it is in every one."""
    bit = 1 << e
    avoiding = frozenset(F for F in feasible if not F & bit)
    if avoiding:
        return avoiding
    return frozenset(F & ~bit for F in feasible)


def restricted_family(D: DeltaMatroid, A: int) -> frozenset[int]:
    fam = D.feasible
    for e in bits(((1 << D.n) - 1) & ~A):
        fam = delete_element(fam, e)
    return fam


def delta_rank(D: DeltaMatroid, A: int) -> HalfInt:
    """Half the sum of the largest and smallest feasible-set sizes of the restriction to A."""
    sizes = [popcount(F) for F in restricted_family(D, A)]
    return HalfInt(max(sizes) + min(sizes))


def delta_ranked_set(D: DeltaMatroid) -> RankedSet:
    """Ranked set with rank = delta_rank and unit multiplicity."""
    check_ground_size(D.n)
    return RankedSet(D.ground, [delta_rank(D, a).doubled for a in range(1 << D.n)])


def bollobas_riordan(D: DeltaMatroid, shifted: bool = False) -> BiLaurent:
    """Rank sum of :func:`delta_rank`; see :func:`arithtutte.ranked.tutte` for ``shifted``."""
    rep = check_symmetric_exchange(D)
    if not rep.passed:
        raise ArgumentError(f"not a delta-matroid: {rep.violations[0].to_json()}")
    return tutte(delta_ranked_set(D), shifted=shifted)
