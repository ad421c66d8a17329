"""Command-line front end.

Exit codes: 0 success / identity holds / axioms pass, 1 identity fails or axioms fail,
2 bad command line or input, 3 precondition not met or identity not applicable, 4 resource cap.
"""
from __future__ import annotations

import argparse
import itertools
import random
import sys
from pathlib import Path

from . import serialize
from .abelian import VectorList, build_arithmetic_matroid
from .axioms import check_A1, check_A2, check_matroid, check_P, check_polymatroid, classify
from .builders import (
    DeltaMatroid,
    bollobas_riordan,
    check_symmetric_exchange,
    delta_ranked_set,
    graph_to_vectorlist,
)
from .convolution import convolve, functional, verify_theorem1, verify_theorem2
from .corpus import random_integer_list, random_ranked_set
from .errors import (
    ArgumentError,
    DomainError,
    PreconditionError,
    ResourceError,
    UnsupportedError,
)
from .oracles import (
    count_colorings,
    count_flows,
    count_lattice_points,
    ehrhart,
    verify_corollary7,
    verify_corollary8,
    verify_face_decomposition,
    verify_theorem6,
)
from .poly import BiLaurent, as_fraction, format_rational
from .ranked import RankedSet, aritutte, max_ground, set_max_ground, tutte, with_mult

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION, EXIT_RESOURCE = 0, 1, 2, 3, 4

IDENTITIES = (
    "theorem1", "theorem2", "zeta-inverse", "associativity",
    "theorem6", "corollary7", "corollary8", "face-decomposition",
)
AXIOMS = ("matroid", "polymatroid", "P", "A1", "A2", "classify", "delta-exchange")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ArgumentError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arithtutte", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0, help="seed for randomized corpora")
    p.add_argument("--max-ground", type=int, default=None, help="lower the power-set cap")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="Tutte-type polynomials")
    c.add_argument("--poly", required=True, choices=("tutte", "aritutte", "bollobas-riordan"))
    c.add_argument("--input", required=True)
    c.add_argument("--eval", dest="point", help="x,y (exact rationals)")
    c.add_argument("--shifted", action="store_true", help="report P(x+1, y+1)")
    c.add_argument("--text", action="store_true", help="human-readable polynomial")

    v = sub.add_parser("verify", help="check an identity exactly")
    v.add_argument("--identity", required=True, choices=IDENTITIES)
    v.add_argument("--input", help="input file (omit with --random)")
    v.add_argument("--input2", help="second multiplicity for theorem2 (defaults to the first)")
    v.add_argument("--p", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--random", type=int, default=0, help="run on N seeded random instances")

    a = sub.add_parser("validate", help="axiom checks")
    a.add_argument("--axioms", required=True, choices=AXIOMS)
    a.add_argument("--input", required=True)

    z = sub.add_parser("zonotope", help="lattice points of the zonotope of a vector list")
    mode = z.add_mutually_exclusive_group(required=True)
    mode.add_argument("--points", action="store_true")
    mode.add_argument("--interior", action="store_true")
    mode.add_argument("--ehrhart", action="store_true")
    z.add_argument("--dilate", type=int, default=1)
    z.add_argument("--input", required=True)

    n = sub.add_parser("count", help="brute-force flows or colorings")
    mode = n.add_mutually_exclusive_group(required=True)
    mode.add_argument("--flows", type=int, metavar="Q")
    mode.add_argument("--colorings", type=int, metavar="Q")
    n.add_argument("--input", required=True)

    b = sub.add_parser("build", help="convert an input to a ranked-set JSON file")
    b.add_argument("--from", dest="source", required=True, choices=("vectors", "graph", "delta"))
    b.add_argument("--input", required=True)
    b.add_argument("--out")
    return p


def _to_ranked(kind: str, obj) -> RankedSet:
    if kind == "ranked-set":
        return obj
    if kind == "vectors":
        return build_arithmetic_matroid(obj)
    if kind == "graph":
        return build_arithmetic_matroid(graph_to_vectorlist(obj))
    return delta_ranked_set(obj)


def _to_vectors(kind: str, obj) -> VectorList:
    if kind == "vectors":
        return obj
    if kind == "graph":
        return graph_to_vectorlist(obj)
    raise PreconditionError(f"this command needs a vector list or labeled graph, got {kind}")


def _emit(obj, out) -> None:
    out.write(obj if isinstance(obj, str) else serialize.dumps(obj))
    out.write("\n")


def _cmd_compute(args, out) -> int:
    kind, obj = serialize.load(args.input)
    if args.poly == "bollobas-riordan":
        if kind != "delta":
            raise PreconditionError("bollobas-riordan needs a delta-matroid input")
        poly = bollobas_riordan(obj, shifted=args.shifted)
    else:
        M = _to_ranked(kind, obj)
        fn = aritutte if args.poly == "aritutte" else tutte
        poly = fn(M, shifted=args.shifted)
    if args.point:
        try:
            xs, ys = args.point.split(",")
        except ValueError:
            raise ArgumentError("--eval expects x,y") from None
        _emit(format_rational(poly.eval(as_fraction(xs), as_fraction(ys))), out)
    elif args.text:
        _emit(str(poly), out)
    else:
        _emit(poly.to_json(), out)
    return EXIT_OK


def _lemma_checks(M: RankedSet, identity: str) -> dict:
    X, Y = BiLaurent.x(), BiLaurent.y()
    if identity == "zeta-inverse":
        lhs = convolve(functional("zeta", X, Y), functional("zeta", -X, -Y), M)
        rhs = functional("delta")(M)
        return {"identity": identity, "lhs": lhs.to_json(), "rhs": rhs.to_json(), "equal": lhs == rhs}
    pool = [functional("delta"), functional("zeta"), functional("xi"), functional("xi_star")]
    failures = []
    for f, g, h in itertools.product(pool, repeat=3):
        if ((f @ g) @ h)(M) != (f @ (g @ h))(M):
            failures.append([f.name, g.name, h.name])
    return {"identity": identity, "triples": len(pool) ** 3, "failures": failures, "equal": not failures}


def _verify_one(args, kind, obj, obj2=None) -> dict:
    ident = args.identity
    if ident == "theorem1":
        return verify_theorem1(_to_ranked(kind, obj)).to_json()
    if ident == "theorem2":
        M1 = _to_ranked(kind, obj)
        M2 = M1 if obj2 is None else with_mult(M1, _to_ranked(*obj2).mult)
        return verify_theorem2(M1, M2).to_json()
    if ident in ("zeta-inverse", "associativity"):
        return _lemma_checks(_to_ranked(kind, obj), ident)
    X = _to_vectors(kind, obj)
    if ident == "face-decomposition":
        return verify_face_decomposition(X).to_json()
    if ident == "theorem6":
        if args.q:
            return verify_theorem6(X, args.q).to_json()
        reports = [verify_theorem6(X, q) for q in range(1, 9)]
        applicable = [r for r in reports if r.applicable]
        return {
            "identity": "theorem6",
            "reports": [r.to_json() for r in reports],
            "equal": bool(applicable) and all(r.equal for r in applicable),
        }
    if args.p is None or args.q is None:
        raise ArgumentError(f"{ident} needs --p and --q")
    fn = verify_corollary7 if ident == "corollary7" else verify_corollary8
    return fn(X, args.p, args.q).to_json()


def _random_instance(identity: str, rng: random.Random):
    if identity in ("theorem1", "theorem2", "zeta-inverse", "associativity"):
        max_n = 8 if identity in ("theorem1", "theorem2") else 5
        return "ranked-set", random_ranked_set(rng, max_n=max_n)
    if identity == "face-decomposition":
        return "vectors", random_integer_list(rng, max_d=3, max_n=6, lo=-3, hi=3)
    return "vectors", random_integer_list(rng, max_d=2, max_n=4, lo=-3, hi=3)


def _cmd_verify(args, out) -> int:
    if args.random:
        rng = random.Random(args.seed)
        results = []
        for _ in range(args.random):
            kind, obj = _random_instance(args.identity, rng)
            obj2 = None
            if args.identity == "theorem2":
                obj2 = ("ranked-set", random_ranked_set(rng, n=obj.n))
            results.append(_verify_one(args, kind, obj, obj2))
        applicable = [r for r in results if r.get("applicable", True)]
        ok = all(r["equal"] for r in applicable)
        _emit({"identity": args.identity, "instances": len(results), "seed": args.seed,
               "applicable": len(applicable), "equal": ok}, out)
        return EXIT_OK if ok else EXIT_FAIL
    if not args.input:
        raise ArgumentError("verify needs --input or --random N")
    kind, obj = serialize.load(args.input)
    obj2 = serialize.load(args.input2) if args.input2 else None
    report = _verify_one(args, kind, obj, obj2)
    _emit(report, out)
    if report.get("applicable", True) is False:
        return EXIT_PRECONDITION
    return EXIT_OK if report["equal"] else EXIT_FAIL


def _cmd_validate(args, out) -> int:
    kind, obj = serialize.load(args.input, validate=False)
    if args.axioms == "delta-exchange":
        if kind != "delta":
            raise PreconditionError("delta-exchange needs a delta-matroid input")
        rep = check_symmetric_exchange(obj)
    else:
        if isinstance(obj, DeltaMatroid):
            rep = check_symmetric_exchange(obj)
            if not rep.passed:
                _emit(rep.to_json(), out)
                return EXIT_FAIL
        M = _to_ranked(kind, obj)
        if args.axioms == "classify":
            classes = sorted(classify(M))
            _emit({"classes": classes, "passed": bool(classes)}, out)
            return EXIT_OK if classes else EXIT_FAIL
        checker = {
            "matroid": check_matroid, "polymatroid": check_polymatroid,
            "P": check_P, "A1": check_A1, "A2": check_A2,
        }[args.axioms]
        rep = checker(M)
    _emit(rep.to_json(), out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _cmd_zonotope(args, out) -> int:
    kind, obj = serialize.load(args.input)
    X = _to_vectors(kind, obj)
    if args.dilate < 1:
        raise ArgumentError("--dilate must be positive")
    if args.ehrhart:
        _emit({"ehrhart": [format_rational(c) for c in ehrhart(X)]}, out)
        return EXIT_OK
    Xq = X.scaled(args.dilate)
    _emit(str(count_lattice_points(Xq, interior=args.interior)), out)
    return EXIT_OK


def _cmd_count(args, out) -> int:
    kind, obj = serialize.load(args.input)
    X = _to_vectors(kind, obj)
    value = count_flows(X, args.flows) if args.flows is not None else count_colorings(X, args.colorings)
    _emit(str(value), out)
    return EXIT_OK


def _cmd_build(args, out) -> int:
    kind, obj = serialize.load(args.input)
    if kind != args.source:
        raise ArgumentError(f"--from {args.source} but the input kind is {kind}")
    M = _to_ranked(kind, obj)
    payload = serialize.ranked_set_to_json(M)
    if args.out:
        Path(args.out).write_text(serialize.dumps(payload) + "\n", encoding="utf-8")
    else:
        _emit(payload, out)
    return EXIT_OK


_COMMANDS = {
    "compute": _cmd_compute,
    "verify": _cmd_verify,
    "validate": _cmd_validate,
    "zonotope": _cmd_zonotope,
    "count": _cmd_count,
    "build": _cmd_build,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    saved_cap = max_ground()
    try:
        args = _build_parser().parse_args(argv)
        if args.max_ground is not None:
            set_max_ground(args.max_ground)
        return _COMMANDS[args.verb](args, out)
    except ResourceError as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except (PreconditionError, UnsupportedError, DomainError) as exc:
        _emit({"applicable": False, "reason": str(exc), "equal": False}, out)
        return EXIT_PRECONDITION
    except ArgumentError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    finally:
        set_max_ground(saved_cap)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
