import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithtutte import serialize
from arithtutte.abelian import FGGroup, VectorList
from arithtutte.builders import DeltaMatroid
from arithtutte.corpus import random_even_delta, random_labeled_graph, random_ranked_set, random_torsion_list
from arithtutte.errors import ArgumentError
from arithtutte.ranked import RankedSet

seeds = st.integers(min_value=0, max_value=10**6)


@given(seeds)
def test_ranked_set_round_trip(seed):
    M = random_ranked_set(random.Random(seed), max_n=4)
    data = json.loads(serialize.dumps(serialize.ranked_set_to_json(M)))
    assert serialize.from_json(data) == ("ranked-set", M)


@given(seeds)
def test_other_kinds_round_trip(seed):
    rng = random.Random(seed)
    X = random_torsion_list(rng)
    assert serialize.vectorlist_from_json(serialize.vectorlist_to_json(X)) == X
    g = random_labeled_graph(rng)
    assert serialize.graph_from_json(serialize.graph_to_json(g)) == g
    D = random_even_delta(rng, max_n=4)
    assert serialize.delta_from_json(serialize.delta_to_json(D)) == D


def test_ranked_set_text_format():
    data = {
        "kind": "ranked-set",
        "ground": ["a", "b"],
        "rank": [["", 0], ["a", "1/2"], ["b", 1], [["a", "b"], "3/2"]],
    }
    _, M = serialize.from_json(data)
    assert M.rank(0b01).doubled == 1 and M.rank(0b11).doubled == 3
    assert all(m == 1 for m in M.mult)


def test_partial_and_malformed_maps_are_rejected():
    base = {"kind": "ranked-set", "ground": ["a"], "rank": [[[], "0"]]}
    with pytest.raises(ArgumentError, match="partial"):
        serialize.from_json(base)
    with pytest.raises(ArgumentError, match="twice"):
        serialize.from_json({**base, "rank": [[[], "0"], [[], "0"], [["a"], "1"]]})
    with pytest.raises(ArgumentError, match="unknown element"):
        serialize.from_json({**base, "rank": [[[], "0"], [["z"], "1"]]})
    with pytest.raises(ArgumentError):
        serialize.from_json({**base, "rank": [[[], "0"], [["a"], 0.5]]})
    with pytest.raises(ArgumentError):
        serialize.from_json({"kind": "matrix"})
    with pytest.raises(ArgumentError):
        serialize.from_json([1, 2])


def test_vectors_with_unnormalized_torsion():
    X = serialize.vectorlist_from_json({"free_rank": 0, "torsion": [2, 3], "vectors": [[1, 1]]})
    assert X.group == FGGroup(0, (6,))
    assert len(X) == 1


def test_delta_validation_at_parse_time():
    bad = {"kind": "delta", "ground": ["a", "b", "c"], "feasible": [["a"], ["b", "c"]]}
    with pytest.raises(ArgumentError, match="not a delta-matroid"):
        serialize.from_json(bad)
    kind, D = serialize.from_json(bad, validate=False)
    assert kind == "delta" and isinstance(D, DeltaMatroid)


def test_load_errors(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(ArgumentError, match="invalid JSON"):
        serialize.load(p)
    with pytest.raises(ArgumentError):
        serialize.load(tmp_path / "missing.json")


def test_dumps_is_canonical():
    assert serialize.dumps({"b": 1, "a": [1, 2]}) == '{"a": [1, 2], "b": 1}'
    M = RankedSet(["a"], [0, 2])
    assert serialize.dumps(serialize.ranked_set_to_json(M)) == serialize.dumps(serialize.ranked_set_to_json(M))
    assert VectorList.integer([[1]]) == serialize.vectorlist_from_json({"free_rank": 1, "vectors": [[1]]})
