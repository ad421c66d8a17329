"""Finitely generated abelian groups, Smith normal form, and represented arithmetic matroids.

A group ``Z^d + Z/n_1 + ... + Z/n_t`` is presented as ``Z^(d+t)`` modulo the relation columns
``n_i * e_(d+i)``. Every rank or multiplicity computation appends those relation columns to
the matrix of the chosen elements and reads the answer off one Smith normal form.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterable, Sequence

from .errors import ArgumentError, UnsupportedError
from .linalg import Matrix, det, identity
from .ranked import RankedSet, bits, check_ground_size, popcount


@dataclass(frozen=True)
class SNFResult:
    """``U @ A @ V == D`` with unimodular ``U``, ``V`` and a divisibility chain on ``D``'s diagonal."""

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    @property
    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal if d]


def snf(A: Sequence[Sequence[int]], ncols: int | None = None) -> SNFResult:
    """Smith normal form with the minimal-|entry| pivoting rule.

    ``ncols`` is only needed for matrices with zero rows.
    """
    D = [[int(v) for v in row] for row in A]
    m = len(D)
    n = len(D[0]) if m else (ncols or 0)
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        for M in (D, U):
            rd, rs = M[dst], M[src]
            for c in range(len(rd)):
                rd[c] += k * rs[c]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for M in (D, V):
            for row in M:
                row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    v = D[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty |= D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty |= D[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            U[t] = [-v for v in U[t]]
        if all(D[i][j] == 0 for i in range(t, m) for j in range(t, n)):
            break
    return SNFResult(U, D, V)


@dataclass(frozen=True)
class FGGroup:
    """``Z^free_rank`` plus cyclic factors ``Z/n`` for ``n`` in ``torsion`` (n_1 | n_2 | ...)."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(n) for n in self.torsion))
        if self.free_rank < 0:
            raise ArgumentError("free rank must be nonnegative")
        for n in self.torsion:
            if n < 2:
                raise ArgumentError(f"torsion orders must be >= 2, got {n}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ArgumentError(f"torsion {self.torsion} is not a divisibility chain")

    @property
    def dim(self) -> int:
        """Number of coordinates of an element."""
        return self.free_rank + len(self.torsion)

    @property
    def order_of_torsion(self) -> int:
        return math.prod(self.torsion)

    def relations(self) -> list[list[int]]:
        """Relation generators as coordinate vectors."""
        out = []
        for i, n in enumerate(self.torsion):
            v = [0] * self.dim
            v[self.free_rank + i] = n
            out.append(v)
        return out

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.dim:
            raise ArgumentError(f"element {list(vec)} has {len(vec)} coordinates, expected {self.dim}")
        d = self.free_rank
        return tuple(int(v) for v in vec[:d]) + tuple(int(v) % n for v, n in zip(vec[d:], self.torsion))

    @classmethod
    def presented(cls, free_rank: int, orders: Sequence[int]) -> tuple[FGGroup, Callable]:
        """Normalize ``Z^free_rank + sum Z/orders`` (any orders >= 1) to invariant-factor form."""
        for n in orders:
            if n < 1:
                raise ArgumentError(f"cyclic orders must be positive, got {n}")
        ambient = cls(free_rank + len(orders))
        rels = []
        for i, n in enumerate(orders):
            v = [0] * ambient.dim
            v[free_rank + i] = n
            rels.append(v)
        return quotient(ambient, rels)


def _columns_matrix(dim: int, columns: Sequence[Sequence[int]]) -> list[list[int]]:
    return [[col[r] for col in columns] for r in range(dim)]


def quotient(G: FGGroup, elements: Sequence[Sequence[int]]) -> tuple[FGGroup, Callable]:
    """``G / <elements>`` in invariant-factor form, with the projection map on coordinates."""
    cols = [list(G.reduce(e)) for e in elements] + G.relations()
    n = G.dim
    if not cols:
        return G, lambda v: G.reduce(v)
    res = snf(_columns_matrix(n, cols), ncols=len(cols))
    diag = res.diagonal
    r = sum(1 for d in diag if d)
    U = res.U
    keep_torsion = [(i, diag[i]) for i in range(r) if diag[i] > 1]
    Q = FGGroup(n - r, tuple(d for _, d in keep_torsion))

    def project(v: Sequence[int]) -> tuple[int, ...]:
        v = list(v)
        if len(v) != n:
            raise ArgumentError(f"element {v} has {len(v)} coordinates, expected {n}")
        w = [sum(U[i][k] * v[k] for k in range(n)) for i in range(n)]
        return tuple(w[r:]) + tuple(w[i] % d for i, d in keep_torsion)

    return Q, project


@dataclass(frozen=True)
class VectorList:
    """An ordered list of elements of ``group`` (duplicates allowed)."""

    group: FGGroup
    vectors: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        vecs = tuple(self.group.reduce(v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(f"x{i + 1}" for i in range(len(vecs))))
        else:
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
            if len(self.labels) != len(vecs):
                raise ArgumentError("one label per vector required")

    @classmethod
    def integer(cls, vectors: Iterable[Sequence[int]], dim: int | None = None) -> VectorList:
        """A list in the torsion-free group Z^dim."""
        vecs = [tuple(int(c) for c in v) for v in vectors]
        if dim is None:
            if not vecs:
                raise ArgumentError("dimension required for an empty list")
            dim = len(vecs[0])
        return cls(FGGroup(dim), tuple(vecs))

    def __len__(self):
        return len(self.vectors)

    @property
    def full(self) -> int:
        return (1 << len(self.vectors)) - 1

    def is_torsion_free(self) -> bool:
        return not self.group.torsion

    def _check(self, A: int):
        if A < 0 or A & ~self.full:
            raise ArgumentError(f"index mask {A:#b} out of range for a list of {len(self)}")

    def columns(self, A: int) -> list[tuple[int, ...]]:
        self._check(A)
        return [self.vectors[i] for i in bits(A)]

    def scaled(self, q: int) -> VectorList:
        return VectorList(self.group, tuple(tuple(q * c for c in v) for v in self.vectors), self.labels)


def _presentation_snf(X: VectorList, A: int) -> SNFResult:
    cols = [list(v) for v in X.columns(A)] + X.group.relations()
    return snf(_columns_matrix(X.group.dim, cols), ncols=len(cols))


def rank_of(X: VectorList, A: int) -> int:
    """Rank of the sublist indexed by ``A`` (rank of its image in G tensor Q)."""
    res = _presentation_snf(X, A)
    return len(res.invariant_factors) - len(X.group.torsion)


def multiplicity(X: VectorList, A: int) -> int:
    """``|torsion(G / <A>)|``, the product of the nonzero invariant factors of the presentation."""
    res = _presentation_snf(X, A)
    return math.prod(res.invariant_factors)


def rank_and_multiplicity(X: VectorList, A: int) -> tuple[int, int]:
    res = _presentation_snf(X, A)
    inv = res.invariant_factors
    return len(inv) - len(X.group.torsion), math.prod(inv)


def gcd_minors(X: VectorList, A: int) -> int:
    """gcd of all maximal (|A| x |A|) minors of the integer matrix with columns A."""
    if not X.is_torsion_free():
        raise UnsupportedError("gcd of minors needs a torsion-free group")
    cols = X.columns(A)
    k = len(cols)
    d = X.group.dim
    if k > d:
        return 0
    g = 0
    for rows in itertools.combinations(range(d), k):
        g = math.gcd(g, det([[c[r] for c in cols] for r in rows]))
    return g


def multiplicity_via_bases(X: VectorList, A: int) -> int:
    """gcd of the multiplicities of maximal independent subsets of A (torsion-free lists)."""
    if not X.is_torsion_free():
        raise UnsupportedError("the gcd-over-bases formula is stated for lists in Z^d")
    X._check(A)
    r = rank_of(X, A)
    g = 0
    for B in _subsets_of_size(A, r):
        rb, mb = rank_and_multiplicity(X, B)
        if rb == r:
            g = math.gcd(g, mb)
    return g


def _subsets_of_size(A: int, k: int):
    idx = list(bits(A))
    for combo in itertools.combinations(idx, k):
        yield sum(1 << i for i in combo)


def build_arithmetic_matroid(X: VectorList) -> RankedSet:
    """The ranked set with rank = rank_of and multiplicity = multiplicity over all sublists."""
    check_ground_size(len(X))
    ranks, mults = [], []
    for A in range(1 << len(X)):
        r, m = rank_and_multiplicity(X, A)
        ranks.append(2 * r)
        mults.append(m)
    return RankedSet(X.labels, ranks, mults)


def restrict_list(X: VectorList, A: int) -> VectorList:
    X._check(A)
    return VectorList(X.group, tuple(X.columns(A)), tuple(X.labels[i] for i in bits(A)))


def contract_list(X: VectorList, A: int) -> VectorList:
    """Project the complement of A into ``G / <A>``."""
    X._check(A)
    Q, project = quotient(X.group, X.columns(A))
    rest = X.full & ~A
    return VectorList(
        Q,
        tuple(project(v) for v in X.columns(rest)),
        tuple(X.labels[i] for i in bits(rest)),
    )


def bases(X: VectorList) -> list[int]:
    """Masks of the bases (independent sublists of maximal size)."""
    r = rank_of(X, X.full)
    return [B for B in _subsets_of_size(X.full, r) if rank_of(X, B) == r]


def basis_groups(X: VectorList) -> dict[int, tuple[int, ...]]:
    """Invariant factors of the torsion subgroup of ``G / <B>`` for every basis B."""
    return {B: quotient(X.group, X.columns(B))[0].torsion for B in bases(X)}


def lcm_of_list(X: VectorList) -> int:
    return reduce(math.lcm, (multiplicity(X, B) for B in bases(X)), 1)


def independent(X: VectorList, A: int) -> bool:
    return rank_of(X, A) == popcount(A)
