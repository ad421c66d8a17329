"""Brute-force counters and the identities they confirm.

Lattice points of zonotopes are counted by enumerating a bounding box against an exact
H-description; colorings and flows are counted by enumerating all homomorphisms / assignments.
None of the counters looks at a Tutte polynomial.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .abelian import (
    VectorList,
    basis_groups,
    build_arithmetic_matroid,
    contract_list,
    lcm_of_list,
    rank_of,
    restrict_list,
)
from .errors import ArgumentError, ResourceError, UnsupportedError
from .linalg import nullspace, rank_q
from .poly import format_rational
from .ranked import RankedSet, aritutte, bits, contract, popcount, product_mult, restrict, tutte

ENUMERATION_CAP = 10**7


# --------------------------------------------------------------------------- zonotopes


@dataclass(frozen=True)
class Facet:
    """Slab ``lower <= normal . p <= upper`` (exact rationals)."""

    normal: tuple[int, ...]
    lower: Fraction
    upper: Fraction


@dataclass(frozen=True)
class ZonotopeHRep:
    span_equations: tuple[tuple[int, ...], ...]  # w . p == 0 cuts out the linear span
    facets: tuple[Facet, ...]
    center: tuple[Fraction, ...]
    dimension: int


def _require_free(X: VectorList):
    if not X.is_torsion_free():
        raise UnsupportedError("zonotopes need a list in a torsion-free group")


def zonotope_hrep(X: VectorList) -> ZonotopeHRep:
    """Facet description of the zonotope inside the linear span of X.

    Each facet normal lies in the span and is orthogonal to a rank-(r-1) set of generators;
    the slab is centred at half the sum of the generators with half-width half the sum of
    ``|normal . x_i|``.
    """
    _require_free(X)
    d = X.group.dim
    vecs = [list(v) for v in X.vectors]
    perp = nullspace(vecs, d) if vecs else [[int(i == j) for j in range(d)] for i in range(d)]
    r = d - len(perp)
    total = [sum(v[k] for v in vecs) for k in range(d)]
    normals = set()
    if r > 0:
        for H in itertools.combinations(range(len(vecs)), r - 1):
            rows = [vecs[i] for i in H]
            if rows and rank_q(rows) != r - 1:
                continue
            ns = nullspace(rows + perp, d)
            if len(ns) == 1:
                normals.add(tuple(ns[0]))
    facets = []
    for eta in sorted(normals):
        mid = Fraction(sum(a * b for a, b in zip(eta, total)), 2)
        half = Fraction(sum(abs(sum(a * b for a, b in zip(eta, v))) for v in vecs), 2)
        facets.append(Facet(eta, mid - half, mid + half))
    return ZonotopeHRep(
        tuple(tuple(w) for w in perp),
        tuple(facets),
        tuple(Fraction(t, 2) for t in total),
        r,
    )


def count_lattice_points(X: VectorList, interior: bool = False) -> int:
    """Integer points of the zonotope (or of its relative interior) by bounding-box enumeration."""
    _require_free(X)
    hrep = zonotope_hrep(X)
    d = X.group.dim
    if d == 0:
        return 1
    lo = [sum(min(0, v[k]) for v in X.vectors) for k in range(d)]
    hi = [sum(max(0, v[k]) for v in X.vectors) for k in range(d)]
    box = math.prod(h - l + 1 for l, h in zip(lo, hi))
    if box > ENUMERATION_CAP:
        raise ResourceError(f"bounding box has {box} points")
    axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
    pts = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, d)
    keep = np.ones(len(pts), dtype=bool)
    for w in hrep.span_equations:
        keep &= pts @ np.array(w, dtype=np.int64) == 0
    for f in hrep.facets:
        # compare doubled values to stay in integers
        val = 2 * (pts @ np.array(f.normal, dtype=np.int64))
        lo2, hi2 = int(2 * f.lower), int(2 * f.upper)
        if interior:
            keep &= (val > lo2) & (val < hi2)
        else:
            keep &= (val >= lo2) & (val <= hi2)
    return int(keep.sum())


def _flats(M: RankedSet) -> list[int]:
    r = M.doubled_rank
    out = []
    for A in range(1 << M.n):
        if all(r[A | (1 << i)] > r[A] for i in range(M.n) if not A >> i & 1):
            out.append(A)
    return out


@dataclass
class FaceDecompositionReport:
    value_2_1: Fraction
    all_subsets_sum: Fraction
    flat_sum: Fraction
    lattice_count: int
    per_flat: dict[str, dict] = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        per_flat_ok = all(v["relint_count"] == v["aritutte_restriction_0_1"] for v in self.per_flat.values())
        return (
            self.value_2_1 == self.all_subsets_sum == self.flat_sum == self.lattice_count
            and per_flat_ok
        )

    def to_json(self) -> dict:
        return {
            "identity": "face-decomposition",
            "aritutte_2_1": format_rational(self.value_2_1),
            "all_subsets_sum": format_rational(self.all_subsets_sum),
            "flat_sum": format_rational(self.flat_sum),
            "lattice_count": str(self.lattice_count),
            "per_flat": self.per_flat,
            "equal": self.equal,
        }


def verify_face_decomposition(X: VectorList) -> FaceDecompositionReport:
    """aritutte(2,1) against the all-subset and flat-only convolution sums and the direct count.

    Per flat A the relative-interior count of Z(X|_A) is also compared with aritutte_{M|_A}(0,1).
    """
    _require_free(X)
    M = build_arithmetic_matroid(X)
    value = aritutte(M).eval(2, 1)
    terms = {}
    for A in range(1 << M.n):
        a = aritutte(restrict(M, A)).eval(0, 1)
        t = tutte(contract(M, A)).eval(2, 0)
        terms[A] = (a, t)
    flats = _flats(M)
    per_flat = {}
    for A in flats:
        key = ",".join(M.labels_of(A)) or "{}"
        per_flat[key] = {
            "aritutte_restriction_0_1": format_rational(terms[A][0]),
            "tutte_contraction_2_0": format_rational(terms[A][1]),
            "relint_count": format_rational(Fraction(count_lattice_points(restrict_list(X, A), interior=True))),
        }
    return FaceDecompositionReport(
        value,
        sum((a * t for a, t in terms.values()), Fraction(0)),
        sum((terms[A][0] * terms[A][1] for A in flats), Fraction(0)),
        count_lattice_points(X),
        per_flat,
    )


def ehrhart(X: VectorList) -> list[Fraction]:
    """Coefficients (constant term first) of sum over independent A of m(A) q^|A|."""
    _require_free(X)
    M = build_arithmetic_matroid(X)
    coeffs = [Fraction(0)] * (M.n + 1)
    for A in range(1 << M.n):
        if M.doubled_rank[A] == 2 * popcount(A):
            coeffs[popcount(A)] += M.mult[A]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def ehrhart_from_aritutte(X: VectorList, q: int, exponent: int) -> Fraction:
    """``q^exponent * aritutte(1 + 1/q, 1)``, for comparing candidate prefactors."""
    M = build_arithmetic_matroid(X)
    return Fraction(q) ** exponent * aritutte(M, shifted=True).eval(Fraction(1, q), 0)


def eval_univariate(coeffs: Sequence[Fraction], q) -> Fraction:
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * q + c
    return total


# --------------------------------------------------------------------------- Z_M, Z_A


@dataclass(frozen=True)
class QSets:
    lcm: int
    basis_groups: dict[int, tuple[int, ...]]

    @property
    def exponent(self) -> int:
        """Least q with q G_B = 0 for all bases B."""
        out = 1
        for inv in self.basis_groups.values():
            if inv:
                out = math.lcm(out, inv[-1])
        return out

    def in_ZM(self, q: int) -> bool:
        return q > 0 and math.gcd(q, self.lcm) == 1

    def in_ZA(self, q: int) -> bool:
        return q > 0 and q % self.exponent == 0


def qsets(X: VectorList) -> QSets:
    return QSets(lcm_of_list(X), basis_groups(X))


# --------------------------------------------------------------------------- colorings, flows


def _cyclic_hom_values(n: int, q: int) -> list[int]:
    """Images in Z_q of a generator of order n: the subgroup of size gcd(n, q)."""
    g = math.gcd(n, q)
    step = q // g
    return [k * step for k in range(g)]


def colorings(X: VectorList, q: int) -> Iterator[tuple[int, ...]]:
    """Homomorphisms G -> Z_q, as images of the coordinate generators, vanishing on no listed element."""
    if q <= 0:
        raise ArgumentError("q must be positive")
    G = X.group
    choices = [list(range(q))] * G.free_rank + [_cyclic_hom_values(n, q) for n in G.torsion]
    total = math.prod(len(c) for c in choices)
    if total > ENUMERATION_CAP:
        raise ResourceError(f"{total} homomorphisms to enumerate")
    vecs = X.vectors
    for phi in itertools.product(*choices):
        if all(sum(a * b for a, b in zip(phi, x)) % q for x in vecs):
            yield phi


def flows(X: VectorList, q: int) -> Iterator[tuple[int, ...]]:
    """Assignments X -> Z_q minus 0 whose weighted sum vanishes in G/qG."""
    if q <= 0:
        raise ArgumentError("q must be positive")
    n = len(X)
    if (q - 1) ** n > ENUMERATION_CAP:
        raise ResourceError(f"{(q - 1) ** n} assignments to enumerate")
    G = X.group
    moduli = [q] * G.free_rank + [math.gcd(t, q) for t in G.torsion]
    vecs = X.vectors
    for psi in itertools.product(range(1, q), repeat=n):
        if all(
            sum(p * v[k] for p, v in zip(psi, vecs)) % mod == 0
            for k, mod in enumerate(moduli)
        ):
            yield psi


def count_colorings(X: VectorList, q: int) -> int:
    return sum(1 for _ in colorings(X, q))


def count_flows(X: VectorList, q: int) -> int:
    return sum(1 for _ in flows(X, q))


# --------------------------------------------------------------------------- identities


def _rank_data(X: VectorList) -> tuple[int, int]:
    return rank_of(X, X.full), X.group.free_rank


def chromatic_from_polynomial(X: VectorList, q: int, arithmetic: bool) -> Fraction:
    """(-1)^rk(X) q^(rk G - rk X) P(1 - q, 0) with P the arithmetic or plain Tutte polynomial."""
    M = build_arithmetic_matroid(X)
    P = aritutte(M) if arithmetic else tutte(M)
    rX, rG = _rank_data(X)
    return (-1) ** rX * Fraction(q) ** (rG - rX) * P.eval(1 - q, 0)


def flow_from_polynomial(X: VectorList, q: int, arithmetic: bool) -> Fraction:
    """(-1)^(|X| - rk X) P(0, 1 - q), divided by |Tor G| = m(empty) in the arithmetic case.

    The division is invisible for torsion-free G. With torsion the unnormalized evaluation
    overcounts: the empty list in Z/3 + Z/3 has one flow while aritutte(0, 1 - q) = m(empty) = 9.
    """
    M = build_arithmetic_matroid(X)
    P = aritutte(M) if arithmetic else tutte(M)
    rX, _ = _rank_data(X)
    value = (-1) ** (len(X) - rX) * P.eval(0, 1 - q)
    return value / M.m(0) if arithmetic else value


@dataclass
class IdentityReport:
    identity: str
    q: int | None
    p: int | None = None
    cls: str | None = None
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    applicable: bool = True
    reason: str = ""
    details: list[dict] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        if not self.applicable:
            return False
        if self.details:
            return all(d["equal"] for d in self.details)
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        out: dict = {"identity": self.identity}
        if self.p is not None:
            out["p"] = self.p
        if self.q is not None:
            out["q"] = self.q
        if not self.applicable:
            out["applicable"] = False
            out["reason"] = self.reason
            out["equal"] = False
            return out
        if self.cls is not None:
            out["class"] = self.cls
        if self.details:
            out["checks"] = self.details
        if self.lhs is not None:
            out["lhs"] = format_rational(self.lhs)
            out["rhs"] = format_rational(self.rhs)
        out["equal"] = self.equal
        return out


def verify_theorem6(X: VectorList, q: int) -> IdentityReport:
    """Brute-force colorings and flows against the polynomial evaluations for every class q lies in."""
    if q <= 0:
        raise ArgumentError("q must be positive")
    qs = qsets(X)
    classes = [c for c, ok in (("Z_A", qs.in_ZA(q)), ("Z_M", qs.in_ZM(q))) if ok]
    if not classes:
        return IdentityReport("theorem6", q, applicable=False, reason=f"q={q} is in neither Z_A nor Z_M")
    chi = count_colorings(X, q)
    chi_star = count_flows(X, q)
    details = []
    for c in classes:
        arith = c == "Z_A"
        pc = chromatic_from_polynomial(X, q, arith)
        pf = flow_from_polynomial(X, q, arith)
        details.append({"class": c, "count": "colorings", "lhs": str(chi), "rhs": format_rational(pc), "equal": chi == pc})
        flows = {"class": c, "count": "flows", "lhs": str(chi_star), "rhs": format_rational(pf), "equal": chi_star == pf}
        if arith and X.group.torsion:
            flows["normalized_by"] = str(math.prod(X.group.torsion))
        details.append(flows)
    return IdentityReport("theorem6", q, cls="+".join(classes), details=details)


def _minor_condition(X: VectorList, p: int, q: int, restr_class: str, contr_class: str) -> str | None:
    """Check q against every restriction and p against every contraction; return a reason on failure."""
    for A in range(1 << len(X)):
        R = qsets(restrict_list(X, A))
        if not (R.in_ZA(q) if restr_class == "Z_A" else R.in_ZM(q)):
            return f"q={q} not in {restr_class} of restriction to {[X.labels[i] for i in bits(A)]}"
        C = qsets(contract_list(X, A))
        if not (C.in_ZA(p) if contr_class == "Z_A" else C.in_ZM(p)):
            return f"p={p} not in {contr_class} of contraction by {[X.labels[i] for i in bits(A)]}"
    return None


def signed_flow_coloring_sum(X: VectorList, p: int, q: int, arithmetic_flows: bool = True) -> Fraction:
    """t * p^(rk X - rk G) (-1)^rk X * sum_A (-1)^|A| flows(X|_A, q) colorings(X/A, p).

    The prefactor exponent is rk X - rk G: inverting the coloring formula on X/A divides by
    p^(rk(G/A) - rk(X/A)) = p^(rk G - rk X). The two readings agree when X spans G rationally.
    ``t`` is |Tor G| when the flows are read through the arithmetic formula (see
    :func:`flow_from_polynomial`), else 1.
    """
    rX, rG = _rank_data(X)
    total = 0
    for A in range(1 << len(X)):
        term = count_flows(restrict_list(X, A), q) * count_colorings(contract_list(X, A), p)
        total += -term if popcount(A) % 2 else term
    t = math.prod(X.group.torsion) if arithmetic_flows else 1
    return t * Fraction(p) ** (rX - rG) * (-1) ** rX * total


def verify_corollary7(X: VectorList, p: int, q: int) -> IdentityReport:
    """aritutte of the squared multiplicity at (1-p, 1-q) against the signed flow/coloring sum."""
    if p <= 0 or q <= 0:
        raise ArgumentError("p and q must be positive")
    qs = qsets(X)
    if not (qs.in_ZA(p) and qs.in_ZA(q)):
        return IdentityReport("corollary7", q, p, applicable=False, reason="p and q must both lie in Z_A(X)")
    reason = _minor_condition(X, p, q, "Z_A", "Z_A")
    if reason:
        return IdentityReport("corollary7", q, p, applicable=False, reason=reason)
    M = build_arithmetic_matroid(X)
    lhs = aritutte(product_mult(M, M)).eval(1 - p, 1 - q)
    return IdentityReport("corollary7", q, p, cls="Z_A,Z_A", lhs=lhs, rhs=signed_flow_coloring_sum(X, p, q))


def verify_corollary8(X: VectorList, p: int, q: int) -> IdentityReport:
    """aritutte(1-p, 1-q) against the signed sum, for (p in Z_A, q in Z_M) or (p in Z_M, q in Z_A)."""
    if p <= 0 or q <= 0:
        raise ArgumentError("p and q must be positive")
    qs = qsets(X)
    configs = []
    if qs.in_ZA(p) and qs.in_ZM(q):
        configs.append(("Z_M", "Z_A"))  # restrictions plain, contractions arithmetic
    if qs.in_ZM(p) and qs.in_ZA(q):
        configs.append(("Z_A", "Z_M"))
    if not configs:
        return IdentityReport(
            "corollary8", q, p, applicable=False,
            reason="need p in Z_A and q in Z_M, or p in Z_M and q in Z_A",
        )
    reasons = []
    for restr_class, contr_class in configs:
        reason = _minor_condition(X, p, q, restr_class, contr_class)
        if reason is None:
            M = build_arithmetic_matroid(X)
            lhs = aritutte(M).eval(1 - p, 1 - q)
            return IdentityReport(
                "corollary8", q, p,
                cls=f"p:{contr_class},q:{restr_class}",
                lhs=lhs, rhs=signed_flow_coloring_sum(X, p, q, restr_class == "Z_A"),
            )
        reasons.append(reason)
    return IdentityReport("corollary8", q, p, applicable=False, reason="; ".join(reasons))
