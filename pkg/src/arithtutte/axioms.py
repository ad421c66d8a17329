"""Validators for (poly)matroid rank axioms and the arithmetic multiplicity axioms.

Checkers report violations with concrete witnesses instead of raising; they only raise
:class:`PreconditionError` when the question itself is meaningless for the input.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import ArgumentError, PreconditionError
from .poly import format_rational
from .ranked import RankedSet, bits, popcount, submasks


@dataclass(frozen=True)
class Violation:
    axiom: str
    witnesses: dict[str, list[str]]
    detail: str
    element: str | None = None

    def to_json(self) -> dict:
        out: dict = {"axiom": self.axiom}
        out.update(self.witnesses)
        if self.element is not None:
            out["e"] = self.element
        out["detail"] = self.detail
        return out


@dataclass
class AxiomReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"passed": self.passed, "violations": [v.to_json() for v in self.violations]}

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class Molecule:
    """Interval [R, S] with S - R split into F (rank-raising) and T (rank-neutral) parts."""

    R: int
    S: int
    F: int
    T: int


def _fmt(v) -> str:
    return format_rational(Fraction(v))


def _rank_str(M: RankedSet, a: int) -> str:
    return str(M.rank(a))


def check_polymatroid(M: RankedSet, limit: int | None = None) -> AxiomReport:
    """Normalization, integrality, nonnegativity, monotonicity and submodularity, exhaustively.

    ``limit`` caps the number of violations collected (``None`` keeps all).
    """
    rep = AxiomReport()
    r = M.doubled_rank
    size = 1 << M.n

    def add(v: Violation) -> bool:
        rep.violations.append(v)
        return limit is not None and len(rep.violations) >= limit

    if r[0] != 0:
        if add(Violation("normalization", {"A": []}, f"rank(empty) = {_rank_str(M, 0)}")):
            return rep
    for a in range(size):
        if r[a] % 2:
            if add(Violation("integrality", {"A": M.labels_of(a)}, f"rank = {_rank_str(M, a)}")):
                return rep
        if r[a] < 0:
            if add(Violation("nonnegativity", {"A": M.labels_of(a)}, f"rank = {_rank_str(M, a)}")):
                return rep
    for a in range(size):
        for i in range(M.n):
            b = a | (1 << i)
            if b != a and r[b] < r[a]:
                v = Violation(
                    "monotonicity",
                    {"A": M.labels_of(a), "B": M.labels_of(b)},
                    f"rank(A) = {_rank_str(M, a)} > rank(B) = {_rank_str(M, b)}",
                )
                if add(v):
                    return rep
    for a in range(size):
        for b in range(a + 1, size):
            if r[a | b] + r[a & b] > r[a] + r[b]:
                v = Violation(
                    "submodularity",
                    {"A": M.labels_of(a), "B": M.labels_of(b)},
                    f"rank(A|B) + rank(A&B) = {_fmt(Fraction(r[a | b] + r[a & b], 2))}"
                    f" > rank(A) + rank(B) = {_fmt(Fraction(r[a] + r[b], 2))}",
                )
                if add(v):
                    return rep
    return rep


def check_matroid(M: RankedSet, limit: int | None = None) -> AxiomReport:
    """Polymatroid axioms plus rank(A + a) <= rank(A) + 1."""
    rep = check_polymatroid(M, limit)
    r = M.doubled_rank
    for a in range(1 << M.n):
        if limit is not None and len(rep.violations) >= limit:
            break
        for i in range(M.n):
            b = a | (1 << i)
            if b != a and r[b] > r[a] + 2:
                rep.violations.append(
                    Violation(
                        "unit-increase",
                        {"A": M.labels_of(a)},
                        f"rank rises from {_rank_str(M, a)} to {_rank_str(M, b)}",
                        M.labels[i],
                    )
                )
                break
    return rep


def is_matroid(M: RankedSet) -> bool:
    return check_matroid(M, limit=1).passed


def _require_matroid(M: RankedSet, what: str) -> None:
    if not is_matroid(M):
        raise PreconditionError(f"{what} requires a matroid rank function")


def find_molecule(M: RankedSet, R: int, S: int) -> Molecule | None:
    """The molecule structure on [R, S], or None if [R, S] is not a molecule."""
    if R & ~S:
        raise ArgumentError("R must be a subset of S")
    if S & ~M.full:
        raise ArgumentError("S must be a subset of the ground set")
    r = M.doubled_rank
    base = r[R]
    F = 0
    for i in bits(S & ~R):
        if r[R | (1 << i)] == base + 2:
            F |= 1 << i
    T = (S & ~R) & ~F
    for A in submasks(S & ~R):
        if r[R | A] != base + 2 * popcount(A & F):
            return None
    return Molecule(R, S, F, T)


def molecules(M: RankedSet) -> Iterator[Molecule]:
    """Every molecule [R, S] of M (all interval pairs scanned)."""
    for S in range(1 << M.n):
        for R in submasks(S):
            mol = find_molecule(M, R, S)
            if mol is not None:
                yield mol


def rho(M: RankedSet, mol: Molecule) -> Fraction:
    """(-1)^|T| * sum over A in [R, S] of (-1)^(|S| - |A|) m(A)."""
    m = M.mult
    total = Fraction(0)
    free = mol.S & ~mol.R
    for A in submasks(free):
        term = m[mol.R | A]
        total += -term if (popcount(free) - popcount(A)) % 2 else term
    return -total if popcount(mol.T) % 2 else total


def check_P(M: RankedSet) -> AxiomReport:
    """Positivity: rho(R, S) >= 0 on every molecule."""
    _require_matroid(M, "the positivity axiom")
    rep = AxiomReport()
    for mol in molecules(M):
        val = rho(M, mol)
        if val < 0:
            rep.violations.append(
                Violation(
                    "P",
                    {"R": M.labels_of(mol.R), "S": M.labels_of(mol.S)},
                    f"rho(R,S) = {_fmt(val)} < 0",
                )
            )
    return rep


def _require_positive_integers(M: RankedSet, what: str) -> None:
    for a, v in enumerate(M.mult):
        if v.denominator != 1 or v < 1:
            raise PreconditionError(
                f"{what} needs positive integer multiplicities; m({M.labels_of(a)}) = {_fmt(v)}"
            )


def check_A1(M: RankedSet) -> AxiomReport:
    """Divisibility along single-element extensions."""
    _require_positive_integers(M, "axiom A1")
    r, m = M.doubled_rank, M.mult
    rep = AxiomReport()
    for a in range(1 << M.n):
        for i in range(M.n):
            b = a | (1 << i)
            if b == a:
                continue
            small, big = int(m[a]), int(m[b])
            if r[b] == r[a]:
                if small % big:
                    detail = f"{big} does not divide {small}"
                else:
                    continue
            elif big % small:
                detail = f"{small} does not divide {big}"
            else:
                continue
            rep.violations.append(Violation("A1", {"A": M.labels_of(a)}, detail, M.labels[i]))
    return rep


def check_A2(M: RankedSet) -> AxiomReport:
    """m(R) m(S) = m(R + F) m(R + T) on every molecule."""
    _require_positive_integers(M, "axiom A2")
    _require_matroid(M, "axiom A2")
    m = M.mult
    rep = AxiomReport()
    for mol in molecules(M):
        lhs = m[mol.R] * m[mol.S]
        rhs = m[mol.R | mol.F] * m[mol.R | mol.T]
        if lhs != rhs:
            rep.violations.append(
                Violation(
                    "A2",
                    {"R": M.labels_of(mol.R), "S": M.labels_of(mol.S)},
                    f"m(R)m(S) = {_fmt(lhs)} != m(R+F)m(R+T) = {_fmt(rhs)}",
                )
            )
    return rep


def classify(M: RankedSet) -> set[str]:
    """Which of {"arithmetic", "pseudo-arithmetic", "quasi-arithmetic"} hold (empty if none)."""
    if not is_matroid(M):
        return set()
    out = set()
    if all(v >= 0 for v in M.mult) and check_P(M).passed:
        out.add("pseudo-arithmetic")
    try:
        if check_A1(M).passed and check_A2(M).passed:
            out.add("quasi-arithmetic")
    except PreconditionError:
        pass
    if {"pseudo-arithmetic", "quasi-arithmetic"} <= out:
        out.add("arithmetic")
    return out


def _fundamental(M: RankedSet, B: int, e: int) -> int:
    """Fundamental circuit of e outside B, or fundamental cocircuit of e inside B, as a mask."""
    r = M.doubled_rank
    target = r[B]
    out = 1 << e
    if B >> e & 1:
        for f in range(M.n):
            if not B >> f & 1 and r[(B & ~(1 << e)) | (1 << f)] == target:
                out |= 1 << f
    else:
        for f in bits(B):
            if r[(B & ~(1 << f)) | (1 << e)] == target:
                out |= 1 << f
    return out


def molecule_partition(M: RankedSet, order: Sequence[int] | None = None) -> list[Molecule]:
    """Partition of all subsets into intervals [B - IA(B), B + EA(B)], one per basis B.

    An element is internally (externally) active in B when it is the smallest element, in
    ``order``, of its fundamental cocircuit (circuit).
    """
    _require_matroid(M, "molecule_partition")
    n = M.n
    order = list(range(n)) if order is None else list(order)
    if sorted(order) != list(range(n)):
        raise ArgumentError(f"{order} is not an ordering of the ground set")
    pos = {e: k for k, e in enumerate(order)}
    r = M.doubled_rank
    top = r[M.full]
    out = []
    for B in range(1 << n):
        if r[B] != top or 2 * popcount(B) != top:
            continue
        IA = EA = 0
        for e in range(n):
            circ = _fundamental(M, B, e)
            if min(bits(circ), key=pos.__getitem__) == e:
                if B >> e & 1:
                    IA |= 1 << e
                else:
                    EA |= 1 << e
        R, S = B & ~IA, B | EA
        out.append(Molecule(R, S, IA, EA))
    return out
