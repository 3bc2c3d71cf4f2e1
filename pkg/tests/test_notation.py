import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laminar.diagram import tangle_sum
from laminar.fixtures import diagram_fixture
from laminar.invariants import determinant
from laminar.notation import EvaluationError, ParseError, evaluate, parse_tangle, to_string
from laminar.rational import RationalTangle, rational_to_diagram


def ev(text):
    return evaluate(parse_tangle(text))


def test_sum_matches_library():
    assert ev("1/3 + -1/3") == diagram_fixture("t0")
    assert ev("@t0 + 2") == tangle_sum(diagram_fixture("t0"),
                                       rational_to_diagram(RationalTangle(2, 1)))


def test_mirror_of_rational_is_negative_rational():
    assert ev("-1/3") == rational_to_diagram(RationalTangle(-1, 3))


def test_closures_and_determinants():
    assert determinant(ev("N(3)")) == 3
    assert determinant(ev("N(8/3)")) == 8
    assert determinant(ev("N(1/0)")) == 1
    assert determinant(ev("D(1/0)")) == 0
    assert determinant(ev("N(1/3 + -1/3 + @found6_1)")) == 9


def test_unreduced_fractions_are_reduced():
    assert ev("4/6") == ev("2/3")


def test_round_trip_examples():
    for text in ("1/3", "-1/3 + 2", "N(@t0 + 1/0)", "rot(rot(5/2))", "-rot(3)", "D(-@t0)"):
        tree = parse_tangle(text)
        again = to_string(parse_tangle(to_string(tree)))
        assert again == to_string(tree)
        assert evaluate(parse_tangle(again)) == evaluate(tree)


@pytest.mark.parametrize("text,position", [
    ("", 0), ("1/", 2), ("N(1", 3), ("1 + ", 4), ("rot 1", 0), ("@", 1), ("1 1", 2),
])
def test_parse_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_tangle(text)
    assert info.value.position == position
    assert f"at position {position}" in str(info.value)


def test_evaluation_errors():
    with pytest.raises(EvaluationError, match="unknown fixture"):
        ev("@nope")
    with pytest.raises(EvaluationError):
        ev("N(1) + 1")
    with pytest.raises(EvaluationError):
        ev("1/0 + @trefoil")
    with pytest.raises(ParseError):
        ev("1/0/2")


def test_custom_fixture_table():
    tree = parse_tangle("@x + 1")
    d = evaluate(tree, {"x": rational_to_diagram(RationalTangle(1, 1))})
    assert d == ev("2")


atoms = st.sampled_from(["1", "1/3", "-2/5", "1/0", "0", "@t0"])
exprs = st.recursive(
    atoms,
    lambda inner: st.one_of(
        inner.map(lambda e: f"rot({e})"),
        inner.map(lambda e: f"-rot({e})"),
        st.lists(inner, min_size=2, max_size=3).map(" + ".join),
    ),
    max_leaves=4,
)


@settings(max_examples=60, deadline=None)
@given(exprs)
def test_printer_is_a_fixed_point(text):
    tree = parse_tangle(text)
    assert to_string(parse_tangle(to_string(tree))) == to_string(tree)
