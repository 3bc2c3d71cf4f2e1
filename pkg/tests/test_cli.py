import io
import json

import pytest

from laminar.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_parse_normal_form():
    code, out, _ = call("parse", "N( 1/3+ -1/3 )")
    assert code == 0
    doc = json.loads(out)
    assert doc["expression"] == "N(1/3 + -1/3)"
    assert doc["tree"]["node"] == "numerator"


def test_eval_then_parse_round_trip():
    _, out, _ = call("eval", "5/2 + @t0")
    expr = json.loads(out)["expression"]
    _, again, _ = call("eval", expr)
    assert again == out


def test_invariants_of_trefoil():
    code, out, _ = call("invariants", "N(3)")
    doc = json.loads(out)
    assert code == 0
    assert doc["determinant"] == 3
    assert doc["jones"]["text"] == "t^-1 + t^-3 - t^-4"


def test_invariants_need_closed_diagram():
    code, _, err = call("invariants", "1/3")
    assert code == 1 and "closed diagram" in err


def test_parse_error_exits_one():
    code, out, err = call("parse", "N(1")
    assert code == 1 and out == ""
    assert "position 3" in err


def test_usage_error_exits_two():
    assert call("frobnicate")[0] == 2
    assert call("family", "--n", "x")[0] == 2


def test_family_document():
    code, out, _ = call("family", "--n", "2")
    doc = json.loads(out)
    assert code == 0
    assert doc["closed_surface_system"] == "only-zero"
    assert doc["carries_closed_surface"] is False
    assert len(doc["sides"]) == 8


def test_certify_verdicts():
    assert json.loads(call("certify")[1])["verdict"] == "persistently-laminar-knot"
    code, out, _ = call("certify", "--pattern", "same")
    assert code == 0 and json.loads(out)["verdict"] == "rejected"
    assert json.loads(call("certify", "wu_fig16")[1])["verdict"] == "unknown"


def test_certify_pattern_file(tmp_path):
    good = tmp_path / "p.json"
    good.write_text(json.dumps({"matching": [], "insertion": {"ends": [1, 0, 3, 2],
                                                              "expression": "1"}}))
    code, out, _ = call("certify", "--pattern", str(good))
    assert code == 0 and json.loads(out)["pattern"]["insertion"]["expression"] == "1"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call("certify", "--pattern", str(bad))[0] == 1
    odd = tmp_path / "odd.json"
    odd.write_text(json.dumps({"matching": [[0, 1, 2]]}))
    assert call("certify", "--pattern", str(odd))[0] == 1
    assert call("certify", "--pattern", str(tmp_path / "missing.json"))[0] == 1


def test_witness():
    code, out, _ = call("witness", "1/3")
    doc = json.loads(out)
    assert code == 0 and doc["verified"] and doc["tangle"] == "-2/3"
    assert call("witness", "banana")[0] == 1


def test_fixture_and_render(tmp_path):
    code, out, _ = call("fixture", "trefoil")
    assert code == 0 and json.loads(out)["name"] == "trefoil"
    target = tmp_path / "t.svg"
    code, out, _ = call("render", "@t0", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("<svg")


def test_out_to_bad_path(tmp_path):
    code, _, err = call("parse", "1", "--out", str(tmp_path / "no" / "such" / "file"))
    assert code == 1 and "error" in err


@pytest.mark.parametrize("argv", [["--version"], ["parse", "--help"]])
def test_informational_flags_exit_zero(argv, capsys):
    assert run(argv) == 0


def test_variant_sets_its_own_size():
    code, out, _ = call("family", "--variant", "recipe_fixture")
    assert code == 0 and json.loads(out)["spec"] == {"n": 2, "variant": "recipe_fixture"}
    assert call("family", "--variant", "naimi", "--n", "2")[0] == 1


def test_negative_witness_after_separator():
    code, out, _ = call("witness", "--", "-7/4")
    assert code == 0 and json.loads(out)["verified"]
