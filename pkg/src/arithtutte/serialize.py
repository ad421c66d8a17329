"""JSON formats for every input and output type.

Inputs carry a top-level ``"kind"``: ``ranked-set``, ``vectors``, ``graph`` or ``delta``.
All numbers are written as exact strings.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .abelian import FGGroup, VectorList
from .builders import DeltaMatroid, Edge, LabeledGraph, check_symmetric_exchange
from .errors import ArgumentError
from .poly import BiLaurent, HalfInt, as_fraction, format_rational
from .ranked import RankedSet, check_ground_size

KINDS = ("ranked-set", "vectors", "graph", "delta")


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


# ranked sets -----------------------------------------------------------------


def ranked_set_to_json(M: RankedSet) -> dict:
    size = 1 << M.n
    return {
        "kind": "ranked-set",
        "ground": list(M.labels),
        "rank": [[M.labels_of(a), str(M.rank(a))] for a in range(size)],
        "mult": [[M.labels_of(a), format_rational(M.mult[a])] for a in range(size)],
    }


def _subset_mask(entry, index: dict[str, int]) -> int:
    if isinstance(entry, str):
        entry = [] if entry == "" else [entry]
    if not isinstance(entry, list):
        raise ArgumentError(f"subset must be a list of labels, got {entry!r}")
    mask = 0
    for s in entry:
        if s not in index:
            raise ArgumentError(f"unknown element {s!r}")
        bit = 1 << index[s]
        if mask & bit:
            raise ArgumentError(f"element {s!r} repeated in subset {entry}")
        mask |= bit
    return mask


def _full_map(pairs, index: dict[str, int], n: int, what: str, convert) -> list:
    if not isinstance(pairs, list):
        raise ArgumentError(f"'{what}' must be a list of [subset, value] pairs")
    size = 1 << n
    out: list = [None] * size
    for pair in pairs:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ArgumentError(f"bad {what} entry {pair!r}")
        mask = _subset_mask(pair[0], index)
        if out[mask] is not None:
            raise ArgumentError(f"{what} given twice for subset {pair[0]!r}")
        out[mask] = convert(pair[1])
    missing = sum(1 for v in out if v is None)
    if missing:
        raise ArgumentError(f"{what} map is partial: {missing} of {size} subsets missing")
    return out


def ranked_set_from_json(data: dict) -> RankedSet:
    """Parse a ranked set; ``mult`` may be omitted (unit multiplicity) but never partial."""
    ground = data.get("ground")
    if not isinstance(ground, list):
        raise ArgumentError("ranked set needs a 'ground' list")
    ground = [str(s) for s in ground]
    check_ground_size(len(ground))
    index = {s: i for i, s in enumerate(ground)}
    if len(index) != len(ground):
        raise ArgumentError("duplicate ground labels")
    ranks = _full_map(data.get("rank"), index, len(ground), "rank", lambda v: HalfInt.of(v).doubled)
    mult = None
    if "mult" in data:
        mult = _full_map(data["mult"], index, len(ground), "mult", as_fraction)
    return RankedSet(ground, ranks, mult)


# vector lists ----------------------------------------------------------------


def vectorlist_to_json(X: VectorList) -> dict:
    return {
        "kind": "vectors",
        "free_rank": X.group.free_rank,
        "torsion": list(X.group.torsion),
        "vectors": [list(v) for v in X.vectors],
        "labels": list(X.labels),
    }


def vectorlist_from_json(data: dict) -> VectorList:
    try:
        free = int(data["free_rank"])
        vectors = data["vectors"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ArgumentError("vector list needs 'free_rank' and 'vectors'") from exc
    torsion = [int(n) for n in data.get("torsion", [])]
    labels = data.get("labels")
    try:
        G = FGGroup(free, tuple(torsion))
        return VectorList(G, tuple(tuple(int(c) for c in v) for v in vectors), labels)
    except ArgumentError:
        if not all(n >= 1 for n in torsion):
            raise
    # torsion not in invariant-factor form: renormalize through a quotient
    G, project = FGGroup.presented(free, torsion)
    return VectorList(G, tuple(project(tuple(int(c) for c in v)) for v in vectors), labels)


# graphs and delta-matroids ----------------------------------------------------


def graph_to_json(g: LabeledGraph) -> dict:
    return {
        "kind": "graph",
        "n": g.n_vertices,
        "edges": [{"u": e.u, "v": e.v, "label": e.label, "dotted": e.dotted} for e in g.edges],
    }


def graph_from_json(data: dict) -> LabeledGraph:
    try:
        edges = tuple(
            Edge(int(e["u"]), int(e["v"]), int(e.get("label", 1)), bool(e.get("dotted", False)))
            for e in data["edges"]
        )
        return LabeledGraph(int(data["n"]), edges)
    except (KeyError, TypeError, ValueError) as exc:
        raise ArgumentError(f"bad labeled graph: {exc}") from exc


def delta_to_json(D: DeltaMatroid) -> dict:
    return {
        "kind": "delta",
        "ground": list(D.ground),
        "feasible": [D.labels_of(F) for F in sorted(D.feasible)],
    }


def delta_from_json(data: dict, validate: bool = True) -> DeltaMatroid:
    try:
        D = DeltaMatroid.from_sets(data["ground"], data["feasible"])
    except (KeyError, TypeError) as exc:
        raise ArgumentError("delta-matroid needs 'ground' and 'feasible'") from exc
    if validate:
        rep = check_symmetric_exchange(D)
        if not rep.passed:
            raise ArgumentError(f"not a delta-matroid: {dumps(rep.violations[0].to_json())}")
    return D


# dispatch ---------------------------------------------------------------------

_PARSERS = {
    "ranked-set": ranked_set_from_json,
    "vectors": vectorlist_from_json,
    "graph": graph_from_json,
    "delta": delta_from_json,
}


def from_json(data: dict, validate: bool = True):
    if not isinstance(data, dict):
        raise ArgumentError("input must be a JSON object")
    kind = data.get("kind")
    if kind not in _PARSERS:
        raise ArgumentError(f"unknown or missing 'kind' {kind!r}; expected one of {KINDS}")
    if kind == "delta":
        return kind, delta_from_json(data, validate)
    return kind, _PARSERS[kind](data)


def load(path: str | Path, validate: bool = True):
    """Read an input file and return ``(kind, object)``."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ArgumentError(f"{path}: invalid JSON: {exc}") from exc
    except OSError as exc:
        raise ArgumentError(f"{path}: {exc.strerror}") from exc
    return from_json(data, validate)


def poly_to_json(p: BiLaurent) -> dict:
    return p.to_json()
