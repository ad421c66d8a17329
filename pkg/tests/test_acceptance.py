"""Acceptance suite: one PASS/FAIL line per criterion, all checks exact.

Run with ``pytest tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``.
Every corpus is drawn from a fixed seed, so a failure is reproducible from the printed witness.
"""
from __future__ import annotations

import itertools
import random
import sys
import time
from functools import lru_cache

import pytest

from arithtutte.abelian import (
    VectorList,
    bases,
    build_arithmetic_matroid,
    gcd_minors,
    independent,
    multiplicity,
    multiplicity_via_bases,
    rank_of,
    snf,
)
from arithtutte.axioms import (
    check_A1,
    check_A2,
    check_P,
    check_polymatroid,
    find_molecule,
    molecule_partition,
    molecules,
    rho,
)
from arithtutte.builders import (
    DeltaMatroid,
    bollobas_riordan,
    check_symmetric_exchange,
    delta_ranked_set,
    graph_multiplicity_formula,
    graph_to_vectorlist,
    is_even,
)
from arithtutte.convolution import convolve, functional, verify_theorem1, verify_theorem2
from arithtutte.corpus import (
    random_even_delta,
    random_integer_list,
    random_labeled_graph,
    random_mult_like,
    random_ranked_set,
    random_torsion_list,
)
from arithtutte.linalg import det, matmul
from arithtutte.oracles import (
    colorings,
    count_colorings,
    count_flows,
    count_lattice_points,
    ehrhart,
    ehrhart_from_aritutte,
    eval_univariate,
    flows,
    qsets,
    verify_corollary7,
    verify_corollary8,
    verify_face_decomposition,
    verify_theorem6,
)
from arithtutte.poly import BiLaurent
from arithtutte.ranked import RankedSet, aritutte, product_mult, tutte, with_mult

X_, Y_ = BiLaurent.x(), BiLaurent.y()
EXAMPLE = VectorList.integer([[2, 0], [-1, 1], [1, 1]], dim=2)
REMARK = VectorList.integer([[1, 0], [0, 1], [1, 1], [1, -1]], dim=2)


def require(cond: bool, witness: str) -> None:
    if not cond:
        raise AssertionError(witness)


@lru_cache(maxsize=None)
def corpus_b() -> tuple[VectorList, ...]:
    """50 integer matrices, d <= 4, N <= 7, entries in [-5, 5]."""
    rng = random.Random(20261019)
    return tuple(random_integer_list(rng, max_d=4, max_n=7, lo=-5, hi=5) for _ in range(50))


@lru_cache(maxsize=None)
def matroids_b() -> tuple[RankedSet, ...]:
    return tuple(build_arithmetic_matroid(X) for X in corpus_b())


def subsets_of(free: int):
    a = free
    while True:
        yield a
        if a == 0:
            return
        a = (a - 1) & free


# 1. the worked example


def criterion_1() -> str:
    X = EXAMPLE
    qs = qsets(X)
    require(qs.lcm == 2, f"lcm = {qs.lcm}")
    require([q for q in range(1, 9) if qs.in_ZM(q)] == [1, 3, 5, 7], "Z_M is not the odd numbers")
    require([q for q in range(1, 9) if qs.in_ZA(q)] == [2, 4, 6, 8], "Z_A is not the even numbers")
    for q in (2, 4, 6):
        require(count_colorings(X, q) == q * q - 4 * q + 4, f"chi({q}) = {count_colorings(X, q)}")
        require(count_flows(X, q) == 2 * q - 3, f"chi*({q}) = {count_flows(X, q)}")
    for q in (1, 3, 5, 7):
        require(count_colorings(X, q) == q * q - 3 * q + 2, f"chi({q}) = {count_colorings(X, q)}")
        require(count_flows(X, q) == q - 1, f"chi*({q}) = {count_flows(X, q)}")
    cols, fls = list(colorings(X, 3)), list(flows(X, 3))
    require(cols == [(1, 0), (2, 0)], f"3-colorings {cols}")
    require(fls == [(1, 1, 2), (2, 2, 1)], f"3-flows {fls}")
    return "lcm 2, Z_M odd, Z_A even; chi, chi* on q <= 7; 3-colorings [1,0],[2,0]; 3-flows [1,1,2],[2,2,1]"


# 2. Theorem 1


def criterion_2() -> str:
    rng = random.Random(1)
    for i in range(200):
        M = random_ranked_set(rng, max_n=8)
        require(verify_theorem1(M).equal, f"random ranked set #{i}: {M.labels}")
    for i, M in enumerate(matroids_b()):
        require(verify_theorem1(M).equal, f"corpus (b) #{i}: {corpus_b()[i].vectors}")
    rng = random.Random(3)
    for i in range(20):
        D = random_even_delta(rng, max_n=6)
        require(check_symmetric_exchange(D).passed and is_even(D), f"delta #{i} is not an even delta-matroid")
        M = delta_ranked_set(D)
        require(bollobas_riordan(D, shifted=True) == tutte(M, shifted=True), f"delta #{i}: BR rank sum")
        require(verify_theorem1(M).equal, f"delta #{i}: {sorted(D.feasible)}")
    return "both forms on 200 random ranked sets, 50 integer matrices, 20 even delta-matroids (shifted coordinates)"


# 3. Theorem 2


def criterion_3() -> str:
    rng = random.Random(4)
    for i in range(50):
        M1 = random_ranked_set(rng, max_n=7)
        M2 = random_mult_like(rng, M1)
        require(verify_theorem2(M1, M2).equal, f"pair #{i}")
    M = build_arithmetic_matroid(REMARK)
    on_bases = [M.m(B) for B in sorted(bases(REMARK))]
    require(sorted(on_bases) == [1, 1, 1, 1, 1, 2], f"basis multiplicities {on_bases}")
    squared = with_mult(M, [m * m for m in M.mult])
    require(sorted(squared.m(B) for B in bases(REMARK)) == [1, 1, 1, 1, 1, 4], "m^2 on bases")
    rep = verify_theorem2(M, M)
    require(rep.equal and rep.lhs == aritutte(squared, shifted=True), "m^2 of the remark list")
    return "50 random pairs; remark list m^2 = 1 on five of six bases and 4 on the sixth"


# 4. positivity


def criterion_4() -> str:
    n_mol = 0
    for i, M in enumerate(matroids_b()):
        for ex, ey, c in aritutte(M).terms():
            require(c.denominator == 1 and c >= 0, f"corpus (b) #{i}: coefficient {c} at x^{ex} y^{ey}")
        for mol in molecules(M):
            n_mol += 1
            require(rho(M, mol) >= 0, f"corpus (b) #{i}: rho({mol.R},{mol.S}) < 0")
        part = molecule_partition(M)
        seen = sorted(mol.R | a for mol in part for a in subsets_of(mol.S & ~mol.R))
        require(seen == list(range(1 << M.n)), f"corpus (b) #{i}: partition does not tile 2^M")
        require(all(find_molecule(M, mol.R, mol.S) is not None for mol in part), f"#{i}: non-molecule block")
        require(sum(rho(M, mol) for mol in part) == aritutte(M).eval(0, 0), f"corpus (b) #{i}: sum rho")
    rng = random.Random(5)
    for i in range(30):
        X = random_integer_list(rng, max_d=3, max_n=5, lo=-3, hi=3)
        scales = [rng.choice([1, 2, 3, -2]) for _ in X.vectors]
        Y = VectorList.integer([[k * c for c in v] for k, v in zip(scales, X.vectors)], dim=X.group.dim)
        M, N = build_arithmetic_matroid(X), build_arithmetic_matroid(Y)
        require(check_P(M).passed and check_P(N).passed, f"product #{i}: a factor fails (P)")
        require(check_P(product_mult(M, N)).passed, f"product #{i}: m_X * m_Y fails (P)")
    return f"nonnegative integer coefficients on 50 matroids; rho >= 0 on {n_mol} molecules; partitions tile 2^M and sum to T(0,0); 30 (P) products"


# 5. zonotopes


def criterion_5() -> str:
    rng = random.Random(6)
    for i in range(30):
        X = random_integer_list(rng, max_d=3, max_n=6, lo=-3, hi=3)
        M = build_arithmetic_matroid(X)
        T = aritutte(M)
        require(count_lattice_points(X) == T.eval(2, 1), f"list #{i}: lattice count {X.vectors}")
        require(count_lattice_points(X, interior=True) == T.eval(0, 1), f"list #{i}: interior {X.vectors}")
        require(verify_face_decomposition(X).equal, f"list #{i}: face decomposition {X.vectors}")
        E, r = ehrhart(X), rank_of(X, X.full)
        for q in (1, 2, 3):
            n = count_lattice_points(X.scaled(q))
            require(eval_univariate(E, q) == n == ehrhart_from_aritutte(X, q, r), f"list #{i}: dilate {q}")
    return "30 lists: T(2,1), T(0,1), flat sum, Ehrhart at q = 1,2,3 with prefactor q^(rank X)"


# 6. exact linear algebra


def _check_snf(A) -> None:
    res = snf(A)
    m, n = len(A), len(A[0])
    require(matmul(matmul(res.U, A), res.V) == res.D, f"UAV != D for {A}")
    require(abs(det(res.U)) == 1 and abs(det(res.V)) == 1, f"non-unimodular transform for {A}")
    require(all(res.D[i][j] == 0 for i in range(m) for j in range(n) if i != j), f"D not diagonal for {A}")
    diag = res.diagonal
    nz = [d for d in diag if d]
    require(all(d >= 0 for d in diag) and diag[: len(nz)] == nz, f"diagonal {diag} for {A}")
    require(all(b % a == 0 for a, b in zip(nz, nz[1:])), f"divisibility chain broken: {nz}")


def criterion_6() -> str:
    rng = random.Random(7)
    for _ in range(100):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        _check_snf([[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)])
    n_sub = 0
    for i, X in enumerate(corpus_b()):
        for A in range(1 << len(X)):
            n_sub += 1
            m = multiplicity(X, A)
            if independent(X, A):
                require(gcd_minors(X, A) == m, f"corpus (b) #{i}, subset {A}: gcd of minors")
            require(multiplicity_via_bases(X, A) == m, f"corpus (b) #{i}, subset {A}: via bases")
    rng = random.Random(8)
    for i in range(20):
        g = random_labeled_graph(rng)
        V = graph_to_vectorlist(g)
        for A in range(1 << len(V)):
            require(graph_multiplicity_formula(g, A) == multiplicity(V, A), f"graph #{i}, edge set {A}")
    return f"100 SNFs; gcd of minors and basis formula on {n_sub} subsets; 20 labeled graphs"


# 7. convolution algebra


def criterion_7() -> str:
    delta, zeta = functional("delta"), functional("zeta")
    pool = [delta, zeta, functional("xi"), functional("xi_star")]
    rng = random.Random(9)
    for i in range(20):
        M = random_ranked_set(rng, max_n=6)
        for f in pool:
            require(convolve(delta, f, M) == f(M) == convolve(f, delta, M), f"set #{i}: delta identity")
        for f, g, h in itertools.product(pool, repeat=3):
            require(((f @ g) @ h)(M) == (f @ (g @ h))(M), f"set #{i}: associativity")
        require(convolve(functional("zeta", X_, Y_), functional("zeta", -X_, -Y_), M) == delta(M), f"set #{i}: zeta inverse")
        target = aritutte(M, shifted=True)
        require(convolve(functional("xi", 1, Y_), functional("zeta", X_, 1), M) == target, f"set #{i}: xi o zeta")
        require(convolve(functional("zeta", 1, Y_), functional("xi_star", X_, 1), M) == target, f"set #{i}: zeta o xi*")
    return "20 sets: delta identity, 64 associativity triples each, zeta inverse, both xi / xi* factorizations"


# 8. Theorem 6 and the corollaries


def criterion_8() -> str:
    rng = random.Random(10)
    corpus = [random_torsion_list(rng, max_free=2, max_factor=4, max_n=4) for _ in range(60)]
    n6 = n7 = n8 = normalized = 0
    for i, X in enumerate(corpus):
        qs = qsets(X)
        for q in range(1, 9):
            rep = verify_theorem6(X, q)
            require(rep.applicable == (qs.in_ZA(q) or qs.in_ZM(q)), f"list #{i}, q={q}: applicability")
            if rep.applicable:
                n6 += 1
                require(rep.equal, f"list #{i} {X.group} {X.vectors}, q={q}: {rep.to_json()}")
                normalized += any("normalized_by" in d for d in rep.details)
        for p, q in itertools.product(range(1, 5), repeat=2):
            r7 = verify_corollary7(X, p, q)
            if r7.applicable:
                n7 += 1
                require(r7.equal, f"list #{i}, Corollary 7 at ({p},{q}): {r7.to_json()}")
            r8 = verify_corollary8(X, p, q)
            if r8.applicable:
                n8 += 1
                require(r8.equal, f"list #{i}, Corollary 8 at ({p},{q}): {r8.to_json()}")
    for p, q in ((2, 3), (3, 2)):
        rep = verify_corollary8(EXAMPLE, p, q)
        require(rep.applicable and rep.equal, f"Example, Corollary 8 at ({p},{q}): {rep.to_json()}")
    return (
        f"Theorem 6 on {n6} (list, q) cases ({normalized} torsion flow checks divided by |Tor G|); "
        f"Corollary 7 on {n7}, Corollary 8 on {n8} admissible (p,q); Example at (2,3), (3,2); "
        "corollaries use the prefactor p^(rank X - rank G)"
    )


# 9. negative controls


def _witness(report, axiom: str, keys: set[str]) -> str:
    hits = [v.to_json() for v in report.violations if v.axiom == axiom]
    require(bool(hits), f"{axiom} violation not detected")
    require(keys <= set(hits[0]), f"{axiom} witness lacks {keys - set(hits[0])}")
    return str(hits[0])


def criterion_9() -> str:
    bad_a1 = RankedSet(["e"], [0, 0], [2, 3])
    _witness(check_A1(bad_a1), "A1", {"e", "detail"})
    M = build_arithmetic_matroid(VectorList.integer([[2], [0]], dim=1))
    mult = list(M.mult)
    mult[0b11] *= 2
    _witness(check_A2(with_mult(M, mult)), "A2", {"R", "S"})
    table = {0: 0, 1: 1, 2: 1, 3: 2, 4: 1, 5: 1, 6: 1, 7: 3}
    sub = RankedSet.from_functions(["a", "b", "c"], table.__getitem__)
    _witness(check_polymatroid(sub), "submodularity", {"A", "B"})
    D = DeltaMatroid.from_sets("abc", ["a", "bc"])
    _witness(check_symmetric_exchange(D), "symmetric-exchange", {"S", "T", "e"})
    return "A1, A2, submodularity and symmetric exchange each reported with a witness"


CRITERIA = {
    1: ("Example reproduction", criterion_1),
    2: ("Theorem 1", criterion_2),
    3: ("Theorem 2", criterion_3),
    4: ("positivity", criterion_4),
    5: ("zonotopes", criterion_5),
    6: ("exact linear algebra", criterion_6),
    7: ("convolution algebra", criterion_7),
    8: ("Theorem 6, Corollaries 7-8", criterion_8),
    9: ("negative controls", criterion_9),
}


def run_criterion(k: int) -> tuple[bool, str]:
    name, fn = CRITERIA[k]
    start = time.perf_counter()
    try:
        detail, ok = fn(), True
    except AssertionError as exc:
        detail, ok = f"witness: {exc}", False
    elapsed = time.perf_counter() - start
    return ok, f"{'PASS' if ok else 'FAIL'} criterion {k} ({name}): {detail} [{elapsed:.1f}s]"


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    ok, line = run_criterion(k)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(k) for k in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
