"""Ranked sets with multiplicities, their minors, and Tutte-type rank sums.

Subsets of the ground set are bitmasks: bit ``i`` is the element at index ``i``.
Rank and multiplicity are stored densely, one entry per mask.
"""
from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .errors import ArgumentError, DomainError, ResourceError
from .poly import BiLaurent, HalfInt, as_fraction

MAX_GROUND = 24
_ground_cap = MAX_GROUND


def max_ground() -> int:
    return _ground_cap


def set_max_ground(n: int) -> None:
    """Lower the power-set cap; it can never exceed ``MAX_GROUND``."""
    global _ground_cap
    if n < 0 or n > MAX_GROUND:
        raise ArgumentError(f"ground-set cap must lie in [0, {MAX_GROUND}]")
    _ground_cap = n


def check_ground_size(n: int) -> None:
    if n > _ground_cap:
        raise ResourceError(f"ground set of size {n} exceeds the power-set cap {_ground_cap}")


def popcount(mask: int) -> int:
    return mask.bit_count()


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and ``mask``), descending."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def deposit_table(mask: int) -> list[int]:
    """``table[j]`` is the submask of ``mask`` whose k-th set bit is taken iff bit k of j is set."""
    table = [0]
    for i in bits(mask):
        b = 1 << i
        table += [t | b for t in table]
    return table


class RankedSet:
    """A finite ground set with rank (half-integer) and multiplicity (rational) on every subset.

    ``doubled_rank[mask]`` is twice the rank of ``mask``; ``mult[mask]`` its multiplicity.
    """

    __slots__ = ("labels", "doubled_rank", "mult", "_hash")

    def __init__(self, labels: Sequence[str], doubled_rank: Sequence[int], mult: Sequence | None = None):
        labels = tuple(str(s) for s in labels)
        n = len(labels)
        check_ground_size(n)
        if len(set(labels)) != n:
            raise ArgumentError(f"duplicate labels in {labels}")
        size = 1 << n
        doubled_rank = tuple(int(r) for r in doubled_rank)
        if len(doubled_rank) != size:
            raise ArgumentError(f"rank map has {len(doubled_rank)} entries, expected {size}")
        if doubled_rank[0] != 0:
            raise ArgumentError("rank of the empty set must be 0")
        if mult is None:
            mult = (Fraction(1),) * size
        else:
            mult = tuple(as_fraction(v) for v in mult)
        if len(mult) != size:
            raise ArgumentError(f"multiplicity map has {len(mult)} entries, expected {size}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "doubled_rank", doubled_rank)
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RankedSet is immutable")

    @classmethod
    def from_functions(
        cls,
        labels: Sequence[str],
        rank: Callable[[int], object],
        mult: Callable[[int], object] | None = None,
    ) -> RankedSet:
        """Tabulate ``rank(mask)`` (int, Fraction or HalfInt) and ``mult(mask)`` over all masks."""
        n = len(labels)
        check_ground_size(n)
        size = 1 << n
        ranks = [HalfInt.of(rank(a)).doubled for a in range(size)]
        mults = None if mult is None else [mult(a) for a in range(size)]
        return cls(labels, ranks, mults)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def rank(self, mask: int) -> HalfInt:
        return HalfInt(self.doubled_rank[mask])

    def m(self, mask: int) -> Fraction:
        return self.mult[mask]

    def has_integer_ranks(self) -> bool:
        return all(r % 2 == 0 for r in self.doubled_rank)

    def mask_of(self, labels: Iterable[str]) -> int:
        index = {s: i for i, s in enumerate(self.labels)}
        mask = 0
        for s in labels:
            try:
                mask |= 1 << index[str(s)]
            except KeyError:
                raise ArgumentError(f"unknown element {s!r}") from None
        return mask

    def labels_of(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]

    def key(self) -> tuple:
        """Label-blind content key (equal data up to the identity relabeling)."""
        return (len(self.labels), self.doubled_rank, self.mult)

    def __eq__(self, other):
        if not isinstance(other, RankedSet):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.doubled_rank == other.doubled_rank
            and self.mult == other.mult
        )

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.labels, self.doubled_rank, self.mult)))
        return self._hash

    def __repr__(self):
        return f"RankedSet(labels={list(self.labels)}, rank(M)={self.rank(self.full)})"


def _check_subset(M: RankedSet, A: int) -> None:
    if A < 0 or A & ~M.full:
        raise ArgumentError(f"mask {A:#b} is not a subset of the ground set")


def restrict(M: RankedSet, A: int) -> RankedSet:
    """``M|_A``: ground set A, rank and multiplicity inherited."""
    _check_subset(M, A)
    table = deposit_table(A)
    r, m = M.doubled_rank, M.mult
    return RankedSet(
        [M.labels[i] for i in bits(A)],
        [r[t] for t in table],
        [m[t] for t in table],
    )


def contract(M: RankedSet, A: int) -> RankedSet:
    """``M/A``: ground set M minus A, rank(B) = rank(B u A) - rank(A), m(B) = m(B u A)."""
    _check_subset(M, A)
    rest = M.full & ~A
    table = deposit_table(rest)
    r, m = M.doubled_rank, M.mult
    base = r[A]
    return RankedSet(
        [M.labels[i] for i in bits(rest)],
        [r[t | A] - base for t in table],
        [m[t | A] for t in table],
    )


def delete(M: RankedSet, A: int) -> RankedSet:
    return restrict(M, M.full & ~A)


def dualize(M: RankedSet) -> RankedSet:
    """Dual: rank*(A) = |A| - rank(M) + rank(M - A), m*(A) = m(M - A)."""
    full = M.full
    r, m = M.doubled_rank, M.mult
    top = r[full]
    size = 1 << M.n
    return RankedSet(
        M.labels,
        [2 * popcount(a) - top + r[full ^ a] for a in range(size)],
        [m[full ^ a] for a in range(size)],
    )


def with_mult(M: RankedSet, mult: Sequence | Callable[[int], object]) -> RankedSet:
    """Same ground set and rank, new multiplicity map."""
    if callable(mult):
        mult = [mult(a) for a in range(1 << M.n)]
    return RankedSet(M.labels, M.doubled_rank, mult)


def unit_mult(M: RankedSet) -> RankedSet:
    return RankedSet(M.labels, M.doubled_rank, None)


def product_mult(M1: RankedSet, M2: RankedSet) -> RankedSet:
    """Pointwise product of two multiplicity maps over a shared ground set and rank."""
    if M1.labels != M2.labels or M1.doubled_rank != M2.doubled_rank:
        raise ArgumentError("product_mult needs identical ground sets and rank maps")
    return RankedSet(M1.labels, M1.doubled_rank, [a * b for a, b in zip(M1.mult, M2.mult)])


def permute(M: RankedSet, order: Sequence[int]) -> RankedSet:
    """Relabel so that new element ``j`` is old element ``order[j]`` (labels travel along)."""
    n = M.n
    if sorted(order) != list(range(n)):
        raise ArgumentError(f"{order} is not a permutation of range({n})")
    size = 1 << n
    old_of_new = [0] * size
    for a in range(1, size):
        low = a & -a
        j = low.bit_length() - 1
        old_of_new[a] = old_of_new[a ^ low] | (1 << order[j])
    return RankedSet(
        [M.labels[i] for i in order],
        [M.doubled_rank[old_of_new[a]] for a in range(size)],
        [M.mult[old_of_new[a]] for a in range(size)],
    )


def _exponent_sums(M: RankedSet, weighted: bool) -> dict[tuple[int, int], Fraction]:
    r, m = M.doubled_rank, M.mult
    top = r[M.full]
    acc: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
    for a in range(1 << M.n):
        w = m[a] if weighted else 1
        if w:
            ra = r[a]
            acc[(top - ra, 2 * popcount(a) - ra)] += w
    return acc


def _expand(acc: dict[tuple[int, int], Fraction]) -> BiLaurent:
    out: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
    for (ex, ey), c in acc.items():
        if not c:
            continue
        if ex < 0 or ey < 0 or ex % 2 or ey % 2:
            raise DomainError(
                "rank sum has negative or half-integer exponents; "
                "it is only a Laurent polynomial in (x-1, y-1): use shifted=True"
            )
        px, py = ex // 2, ey // 2
        for i in range(px + 1):
            ci = c * math.comb(px, i) * (-1) ** (px - i)
            for j in range(py + 1):
                out[(2 * i, 2 * j)] += ci * math.comb(py, j) * (-1) ** (py - j)
    return BiLaurent({k: v for k, v in out.items() if v})


def aritutte(M: RankedSet, shifted: bool = False) -> BiLaurent:
    """Multiplicity-weighted rank sum.

    With ``shifted=True`` the result is ``sum m(A) x^(rk M - rk A) y^(|A| - rk A)``, i.e. the
    arithmetic Tutte function at ``(x + 1, y + 1)``; this form always exists, including for
    negative and half-integer exponents. Otherwise the powers of ``(x - 1)`` and ``(y - 1)``
    are expanded, which requires nonnegative integer exponents.
    """
    acc = _exponent_sums(M, weighted=True)
    if shifted:
        return BiLaurent(acc)
    return _expand(acc)


def tutte(M: RankedSet, shifted: bool = False) -> BiLaurent:
    """Unweighted rank sum (the Tutte function); ``shifted`` as in :func:`aritutte`."""
    acc = _exponent_sums(M, weighted=False)
    if shifted:
        return BiLaurent(acc)
    return _expand(acc)
