import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from bridgeorder.bridge import knot_class
from bridgeorder.cli import SCHEMA, main

from conftest import A1, B1, C1


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--json")
    assert code == 0, err
    return [json.loads(line) for line in out.splitlines()]


def w(word):
    return "[" + ",".join(map(str, word)) + "]"


def test_compare_json():
    (obj,) = run_json("compare", "1/3", "3/5")
    assert obj["relation"] == "incomparable"
    assert obj["schema"] == SCHEMA
    assert obj["right"] == {"class": "K(2/5)", "input": "3/5", "kind": "knot", "p": 2, "q": 5}


def test_compare_text():
    code, out, _ = run("compare", "1/3", "1/3")
    assert code == 0 and "equal" in out
    code, out, _ = run("compare", "322892/551327", "4/7")
    assert "greater" in out and "K(2/7)" in out


def test_upper_bound():
    (obj,) = run_json("upper-bound", "4/7", "24/41")
    assert obj["exists"] and obj["witness_length"] == 28
    fractions = {v["fraction"] for v in obj["variants"]} | {obj["fraction"]}
    # the 28-entry reference knot is one of the sign variants
    j = knot_class(Fraction(322892, 551327))
    assert j in {knot_class(Fraction(f)) for f in fractions}
    (obj,) = run_json("upper-bound", "1/3", "3/5")
    assert obj["exists"] is False and obj["witness"] is None
    (obj,) = run_json("upper-bound", "3/5", "12/29", "70/169")
    assert obj["exists"]


def test_info_word_knot():
    (obj,) = run_json("info", "11/30")
    assert obj["word_classes"] == [[2, 2, -2, 2, 2], [2, -2, -2, -2, 2]]
    assert len(obj["expansions"]) == 2
    (obj,) = run_json("word", "4/7")
    assert obj["words"] == [[2, 0, 2, -2]]
    (obj,) = run_json("knot", w(A1))
    assert obj["fraction"] == "4/7" and obj["knot"]["class"] == "K(2/7)"
    code, out, _ = run("info", "1/1")
    assert code == 0 and "unknot" in out


def test_lower_bounds():
    (obj,) = run_json("lower-bounds", w(C1))
    assert [k["class"] for k in obj["lower_bounds"]][:2] == ["K(2/7)", "K(12/41)"]
    (obj,) = run_json("lower-bounds", "1/3", "--include-unknot")
    assert [k["class"] for k in obj["lower_bounds"]] == ["K(0/1)", "K(1/3)"]


def test_lub_and_partners():
    (obj,) = run_json("lub", "3/5", "[2,2,2,2]")
    assert [2] * 14 in [x["word"] for x in obj["lubs"]]
    rows = run_json("partners", "3/5", "--q-max", "6")
    assert [r["word"] for r in rows] == [[2] * (2 * n) for n in (2, 3, 5, 6)]
    code, _, err = run("lub", "4/7", w(C1))
    assert code == 1 and "comparable" in err


def test_stdform():
    (obj,) = run_json("stdform", w(B1))
    assert obj["forms"] == [{"e": [], "m": 2, "n": -4, "exponent": 2}]
    code, out, _ = run("stdform", "[2,2,0,2,-2,2]")
    assert "no standard form" in out


def test_diagram(tmp_path):
    target = tmp_path / "ex1.svg"
    (obj,) = run_json("diagram", w(A1), w(B1), w(C1), "--output", str(target))
    assert obj["vertical_traversals"] == 5 and obj["horizontal_traversals"] == 3
    assert obj["mixed_seams"] == [9, 17]
    assert b"mixed-seams=2" in target.read_bytes()
    code, out, _ = run("diagram", w(A1), w(A1), w(A1), "--format", "ascii")
    assert code == 0 and out.splitlines()[-1].startswith("S")


def test_oracle_verify():
    rows = run_json("oracle", "verify", "--max-len", "4")
    assert rows[-1]["summary"] == {"pairs": 55, "with_upper_bound": 12, "disagreements": 0, "max_len": 4}
    assert all(r["command"] == "oracle verify" for r in rows)
    code, _, err = run("oracle", "verify", "--max-len", "6", "--budget", "0.000001")
    assert code == 3 and "budget" in err


@pytest.mark.parametrize("argv, code", [
    (["compare", "2/4", "1/3"], 1),       # unreduced
    (["compare", "1/2", "1/3"], 1),       # link
    (["word", "1/2"], 0),                 # links are fine here
    (["knot", "[2,0]"], 1),               # not expanded
    (["compare", "x", "1/3"], 2),
    (["knot", "[2,a]"], 2),
    (["frobnicate"], 2),
    ([], 2),
    (["partners", "3/5", "--q-max", "0"], 2),
    (["diagram", w(A1), "[2,2]", w(C1)], 1),
])
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_deterministic_output():
    assert run("upper-bound", "4/7", "24/41", "--json") == run("upper-bound", "4/7", "24/41", "--json")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bridgeorder", "compare", "1/3", "3/5", "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["relation"] == "incomparable"
