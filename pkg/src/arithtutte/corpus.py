"""Seeded random instance generators for property tests and the verification suites."""
from __future__ import annotations

import random
from fractions import Fraction

from .abelian import FGGroup, VectorList
from .builders import DeltaMatroid, Edge, LabeledGraph
from .linalg import det
from .ranked import RankedSet


def random_rational(rng: random.Random, lo: int = -6, hi: int = 6, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_ranked_set(rng: random.Random, n: int | None = None, max_n: int = 8) -> RankedSet:
    """Arbitrary integer ranks (rank(empty) = 0) and arbitrary rational multiplicities."""
    n = rng.randint(0, max_n) if n is None else n
    size = 1 << n
    ranks = [0] + [2 * rng.randint(-2, n + 1) for _ in range(size - 1)]
    mult = [random_rational(rng) for _ in range(size)]
    return RankedSet([f"e{i}" for i in range(n)], ranks, mult)


def random_mult_like(rng: random.Random, M: RankedSet) -> RankedSet:
    return RankedSet(M.labels, M.doubled_rank, [random_rational(rng) for _ in range(1 << M.n)])


def random_integer_list(
    rng: random.Random, max_d: int = 4, max_n: int = 7, lo: int = -5, hi: int = 5,
    d: int | None = None, n: int | None = None,
) -> VectorList:
    d = rng.randint(1, max_d) if d is None else d
    n = rng.randint(1, max_n) if n is None else n
    return VectorList.integer([[rng.randint(lo, hi) for _ in range(d)] for _ in range(n)], dim=d)


def random_torsion_list(rng: random.Random, max_free: int = 2, max_factor: int = 4, max_n: int = 4) -> VectorList:
    """A list in Z^d + (invariant-factor chain with entries <= max_factor)."""
    free = rng.randint(0, max_free)
    chains = [c for c in _chains(max_factor) if len(c) + free >= 1]
    torsion = rng.choice(chains)
    G = FGGroup(free, torsion)
    n = rng.randint(1, max_n)
    vecs = []
    for _ in range(n):
        v = [rng.randint(-2, 2) for _ in range(free)] + [rng.randrange(t) for t in torsion]
        vecs.append(v)
    return VectorList(G, tuple(tuple(v) for v in vecs))


def _chains(max_factor: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    singles = list(range(2, max_factor + 1))
    out += [(a,) for a in singles]
    out += [(a, b) for a in singles for b in singles if b % a == 0]
    return out


def random_even_delta(rng: random.Random, max_n: int = 6, n: int | None = None) -> DeltaMatroid:
    """Twisted delta-matroid of a random skew-symmetric integer matrix.

    Nonsingular principal submatrices of a skew-symmetric matrix have even size, and twisting by a
    fixed set preserves the parity relation, so the result is always even.
    """
    n = rng.randint(1, max_n) if n is None else n
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.choice([0, 0, 1, -1, 2])
            A[i][j], A[j][i] = v, -v
    feasible = set()
    for S in range(1 << n):
        idx = [i for i in range(n) if S >> i & 1]
        if det([[A[i][j] for j in idx] for i in idx]) != 0:
            feasible.add(S)
    twist = rng.randrange(1 << n)
    return DeltaMatroid(tuple(f"e{i}" for i in range(n)), frozenset(F ^ twist for F in feasible))


def random_labeled_graph(
    rng: random.Random, max_vertices: int = 5, max_edges: int = 6, max_label: int = 4, max_dotted: int = 2
) -> LabeledGraph:
    nv = rng.randint(2, max_vertices)
    ne = rng.randint(1, max_edges)
    n_dotted = rng.randint(0, min(max_dotted, ne))
    edges = []
    for k in range(ne):
        u, v = rng.sample(range(nv), 2)
        edges.append(Edge(u, v, rng.randint(1, max_label), k < n_dotted))
    rng.shuffle(edges)
    return LabeledGraph(nv, tuple(edges))
