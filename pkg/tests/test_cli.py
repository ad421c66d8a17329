import io
import json

import pytest

from arithtutte.cli import run

EXAMPLE = {"kind": "vectors", "free_rank": 2, "vectors": [[2, 0], [-1, 1], [1, 1]]}


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        p = tmp_path / name
        p.write_text(json.dumps(data))
        return str(p)

    return {
        "example": write("example.json", EXAMPLE),
        "empty": write("empty.json", {"kind": "ranked-set", "ground": [], "rank": [[[], "0"]]}),
        "graph": write("graph.json", {"kind": "graph", "n": 3, "edges": [
            {"u": 0, "v": 1, "label": 2}, {"u": 1, "v": 2, "label": 3}]}),
        "delta": write("delta.json", {"kind": "delta", "ground": ["a", "b"], "feasible": [[], ["a", "b"]]}),
        "bad_delta": write("bad.json", {"kind": "delta", "ground": ["a", "b", "c"], "feasible": [["a"], ["b", "c"]]}),
        "a1": write("a1.json", {"kind": "ranked-set", "ground": ["e"], "rank": [[[], "0"], [["e"], "0"]],
                                "mult": [[[], "2"], [["e"], "3"]]}),
        "halfmult": write("half.json", {"kind": "ranked-set", "ground": ["e"], "rank": [[[], "0"], [["e"], "1"]],
                                        "mult": [[[], "1"], [["e"], "1/2"]]}),
        "dir": tmp_path,
    }


def test_compute(files):
    assert invoke("compute", "--poly", "tutte", "--input", files["empty"]) == (
        0, '{"terms": [{"c": "1", "x": "0", "y": "0"}]}\n', "")
    code, out, _ = invoke("compute", "--poly", "aritutte", "--input", files["example"], "--text")
    assert (code, out) == (0, "x^2 + 2*x + 2*y + 1\n")
    code, out, _ = invoke("compute", "--poly", "aritutte", "--input", files["example"], "--eval", "2,1")
    assert (code, out) == (0, "11\n")
    code, out, _ = invoke("compute", "--poly", "bollobas-riordan", "--input", files["delta"], "--text")
    assert (code, out) == (0, "2*x*y - x - y\n")
    code, out, _ = invoke("compute", "--poly", "tutte", "--input", files["example"], "--shifted", "--eval", "1/2,0")
    assert out == "19/4\n"  # T(3/2, 1) with T = x^2 + x + y


def test_output_is_deterministic(files):
    a = invoke("verify", "--identity", "theorem1", "--input", files["example"])
    b = invoke("verify", "--identity", "theorem1", "--input", files["example"])
    assert a == b and a[0] == 0


def test_verify(files):
    code, out, _ = invoke("verify", "--identity", "theorem1", "--input", files["example"])
    assert code == 0 and json.loads(out)["equal"] is True
    for ident in ("theorem2", "zeta-inverse", "associativity", "face-decomposition"):
        assert invoke("verify", "--identity", ident, "--input", files["example"])[0] == 0
    code, out, _ = invoke("verify", "--identity", "theorem6", "--q", "3", "--input", files["example"])
    assert code == 0
    assert json.loads(out)["class"] == "Z_M"
    code, out, _ = invoke("verify", "--identity", "corollary8", "--p", "2", "--q", "3", "--input", files["example"])
    assert code == 0 and json.loads(out)["lhs"] == "-4"


def test_verify_not_applicable_exits_3(files):
    code, out, _ = invoke("verify", "--identity", "corollary7", "--p", "3", "--q", "3", "--input", files["example"])
    assert code == 3 and json.loads(out)["applicable"] is False
    code, out, _ = invoke("verify", "--identity", "theorem6", "--input", files["delta"])
    assert code == 3


def test_verify_random_uses_seed(files):
    a = invoke("--seed", "5", "verify", "--identity", "theorem1", "--random", "4")
    b = invoke("--seed", "5", "verify", "--identity", "theorem1", "--random", "4")
    assert a == b and a[0] == 0
    assert json.loads(a[1])["seed"] == 5


def test_validate(files):
    code, out, _ = invoke("validate", "--axioms", "classify", "--input", files["example"])
    assert code == 0 and json.loads(out)["classes"] == ["arithmetic", "pseudo-arithmetic", "quasi-arithmetic"]
    code, out, _ = invoke("validate", "--axioms", "A1", "--input", files["a1"])
    assert code == 1 and json.loads(out)["violations"][0]["detail"] == "3 does not divide 2"
    code, out, _ = invoke("validate", "--axioms", "delta-exchange", "--input", files["bad_delta"])
    assert code == 1 and json.loads(out)["violations"][0]["S"] == ["a"]
    assert invoke("validate", "--axioms", "delta-exchange", "--input", files["delta"])[0] == 0
    code, out, _ = invoke("validate", "--axioms", "A2", "--input", files["halfmult"])
    assert code == 3
    # rho(a) + rho(b) = 0 < rho(ab) + rho(empty) = 1: not submodular
    code, out, _ = invoke("validate", "--axioms", "matroid", "--input", files["delta"])
    assert code == 1 and json.loads(out)["violations"][0]["axiom"] == "submodularity"


def test_zonotope_and_count(files):
    assert invoke("zonotope", "--points", "--input", files["example"])[1] == "11\n"
    assert invoke("zonotope", "--interior", "--input", files["example"])[1] == "3\n"
    assert invoke("zonotope", "--points", "--dilate", "2", "--input", files["example"])[1] == "33\n"
    assert json.loads(invoke("zonotope", "--ehrhart", "--input", files["example"])[1]) == {"ehrhart": ["1", "4", "6"]}
    assert invoke("count", "--colorings", "3", "--input", files["example"]) == (0, "2\n", "")
    assert invoke("count", "--flows", "3", "--input", files["example"]) == (0, "2\n", "")


def test_build(files):
    out_path = files["dir"] / "built.json"
    assert invoke("build", "--from", "graph", "--input", files["graph"], "--out", str(out_path))[0] == 0
    data = json.loads(out_path.read_text())
    assert data["kind"] == "ranked-set" and ["e0", "e1"] == data["ground"]
    assert [["e0", "e1"], "6"] in data["mult"]
    code, out, _ = invoke("compute", "--poly", "aritutte", "--input", str(out_path), "--text")
    assert code == 0
    assert invoke("build", "--from", "vectors", "--input", files["graph"])[0] == 2


def test_errors(files):
    assert invoke("frobnicate")[0] == 2
    assert invoke("compute", "--poly", "tutte")[0] == 2
    assert invoke("compute", "--poly", "tutte", "--input", files["example"], "--bogus")[0] == 2
    assert invoke("compute", "--poly", "tutte", "--input", str(files["dir"] / "none.json"))[0] == 2
    assert invoke("compute", "--poly", "tutte", "--input", files["bad_delta"])[0] == 2
    assert invoke("count", "--flows", "0", "--input", files["example"])[0] == 2
    code, _, err = invoke("--max-ground", "2", "compute", "--poly", "tutte", "--input", files["example"])
    assert code in (2, 4) and err
    assert invoke("count", "--flows", "400", "--input", files["example"])[0] == 4
    assert invoke("verify", "--identity", "corollary7", "--input", files["example"])[0] == 2
