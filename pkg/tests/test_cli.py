from __future__ import annotations

import io
import json
import random
import subprocess
import sys

import pytest

from origami_codes import cli
from origami_codes.farey import Mat2, Slope, eval_word
from origami_codes.perm import Perm

X3 = "(1,2);(1,3)"
EW = "(1,2,3,4)(5,6,7,8);(1,8,3,6)(2,7,4,5)"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_code_command():
    code, out, _ = run("code", "2/5", "--surface", X3)
    assert code == 0
    assert "Code(2/5)   = (1,3)" in out and "Code^L(2/5) = (1,2)" in out
    data = run_json("code", "2/5", "--surface", X3)
    assert data["code"] == "(1,3)" and data["code_left"] == "(1,2)" and data["code_right"] == "(2,3)"
    assert sorted(c["area"] for c in data["cylinders"]) == [1, 2]


def test_global_flags_before_or_after_command():
    a = run_json("cut", "2/5")
    code, out, _ = run("--json", "--surface", X3, "cut", "2/5")
    assert code == 0 and json.loads(out) == a == {"slope": "2/5", "cut": "xxyxx"}


def test_veech_command():
    assert run_json("veech", "1,2;0,1", "--surface", X3) == {
        "matrix": "1,2;0,1",
        "in_veech": True,
        "witness": "id",
    }
    assert run_json("veech", "1,1;0,1", "--surface", X3)["in_veech"] is False
    data = run_json("veech", "0,-1;1,0", "--surface", X3)
    assert data["in_veech"] is True and data["witness"] is None


def test_orbit_command():
    data = run_json("orbit", "--surface", EW)
    assert data["index"] == 1 and len(data["states"]) == 1
    data = run_json("orbit", "--surface", X3)
    assert data["index"] == 3
    assert {tuple(s["stratum"]) for s in data["states"]} == {(2,)}
    code, out, _ = run("orbit", "--surface", X3)
    assert out.strip().endswith("index: 3")


def test_info_and_closed_system():
    data = run_json("info", "--surface", EW)
    assert data["stratum"] == [1, 1, 1, 1] and data["genus"] == [3]
    assert data["twists"] == ["1,4;0,1", "1,0;4,1"] and data["twists_in_veech"]
    data = run_json("closed-system", "--surface", "(2,3);(1,2,4)")
    centers = {(d["center"], tuple(d["vertices"])) for d in data["diagrams"]}
    assert any(c == "(1,3,2,4)" and set(v) == {"(1,3,4)", "(1,4,3,2)", "(1,2,3)", "(2,4)"} for c, v in centers)


def test_matrix_code_scc_groups():
    data = run_json("matrix-code", "1,0;0,1", "--surface", "(2,3);(1,2,4)")
    assert data["pair"] == ["(2,3)", "(1,3,4)"]
    assert run_json("scc", "2/5", "3", "--surface", X3)["scc"] is True
    assert run_json("scc", "[2,2]", "1", "--surface", X3)["scc"] is False
    assert run_json("groups", "--surface", EW) == {"S_X": 8, "G_X": 192, "quotient": 24}


def test_oracle_command():
    data = run_json("oracle", "--surface", X3, "--height", "10")
    assert data["mismatches"] == [] and data["index"] == 3


def test_audit_flag():
    data = run_json("code", "0/1", "--surface", X3, "--audit-degenerate")
    assert data["audit"] == {"adopted": "(1,3)", "literal": "(1,2)"}


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["code", "2/5", "--surface", "(1,2;(1,3)"], 1),
        (["code", "2/4", "--surface", X3], 1),
        (["veech", "1,2,0,1", "--surface", X3], 1),
        (["veech", "2,0;0,1", "--surface", X3], 1),
        (["bogus"], 1),
        (["code", "2/5"], 1),
        (["orbit", "--surface", "(1,2);(3,4)"], 2),
        (["veech", "1,0;0,1", "--surface", "(1,2);(3,4)"], 2),
        (["orbit", "--surface", EW, "--max-n", "4"], 2),
        (["groups", "--surface", EW, "--max-n", "5"], 2),
    ],
)
def test_exit_codes(argv, expected):
    assert run(*argv)[0] == expected


def test_parse_error_is_annotated():
    code, _, err = run("info", "--surface", "(1,2);(1,x)")
    assert code == 1
    assert "^" in err and "(1,2);(1,x)" in err


def test_invariant_breach_exit_code(monkeypatch):
    monkeypatch.setattr(cli, "orbit_bfs_oracle", lambda X: frozenset())
    code, _, err = run("orbit", "--surface", X3)
    assert code == 3 and "invariant breach" in err


def test_catalog(tmp_path):
    cat = str(tmp_path / "cat.jsonl")
    assert run("catalog", "add", "ew", "--surface", EW, "--catalog", cat)[0] == 0
    assert run("catalog", "add", "x3", "--surface", X3, "--catalog", cat)[0] == 0
    assert run("catalog", "add", "x3", "--surface", X3, "--catalog", cat)[0] == 1
    assert run_json("catalog", "list", "--catalog", cat) == ["ew", "x3"]
    rec = run_json("catalog", "show", "ew", "--catalog", cat, "--verify")
    assert rec["cached"] == {"stratum": [1, 1, 1, 1], "genus": 3, "veech_index": 1}
    assert run_json("orbit", "--surface", "@x3", "--catalog", cat)["index"] == 3
    # tamper with a cached value
    lines = (tmp_path / "cat.jsonl").read_text().splitlines()
    bad = json.loads(lines[1])
    bad["cached"]["veech_index"] = 7
    (tmp_path / "cat.jsonl").write_text(lines[0] + "\n" + json.dumps(bad) + "\n")
    assert run("catalog", "show", "x3", "--catalog", cat, "--verify")[0] == 3
    assert run("catalog", "show", "x3", "--catalog", cat)[0] == 0


def test_text_and_json_agree():
    code, out, _ = run("groups", "--surface", EW)
    assert "|G_X/S_X| = 24" in out
    code, out, _ = run("cut", "3/7")
    assert out.strip() == run_json("cut", "3/7")["cut"]


def test_round_trip_fuzz():
    rng = random.Random(9)
    for _ in range(1000):
        n = rng.randint(1, 9)
        images = list(range(1, n + 1))
        rng.shuffle(images)
        p = Perm(images)
        assert Perm.parse(str(p), n) == p
        q = rng.randint(0, 50)
        pn = rng.randint(0, 50)
        if (pn, q) != (0, 0) and __import__("math").gcd(pn, q) == 1:
            r = Slope(pn, q)
            assert Slope.parse(str(r)) == r
        A = eval_word([rng.choice("LRlr") for _ in range(rng.randint(0, 8))])
        assert Mat2.parse(str(A)) == A


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "origami_codes", "cut", "2/5"], capture_output=True, text=True
    )
    assert out.returncode == 0 and out.stdout.strip() == "xxyxx"
