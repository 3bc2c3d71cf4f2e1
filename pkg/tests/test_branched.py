import random
from fractions import Fraction
from itertools import product

import pytest

from laminar.branched import (
    Attachment,
    BranchCurve,
    BranchedSurface,
    BranchedSurfaceError,
    BranchEquationSystem,
    Equation,
    Sector,
    admits_contact_surface,
    branch_equations,
    carried_euler_characteristic,
    carries_closed_surface,
    is_transversely_orientable,
    orientable_bruteforce,
    solve_nonnegative,
    validate_surface,
)
from laminar.family import FamilySpec, build_family_surface


def toy_surface():
    # two sectors meeting along one curve: x + y = x
    sectors = (Sector("x", -1, ("a", "b"), 0), Sector("y", 1, ("c",), 0))
    curve = BranchCurve("g", (Attachment("x", "a"), Attachment("y", "c")),
                        (Attachment("x", "b"),))
    return BranchedSurface(sectors, (curve,))


def test_toy_equation_and_witness():
    b = toy_surface()
    s = branch_equations(b)
    assert str(s.equations[0]) == "x + y = x"
    res = solve_nonnegative(s)
    assert res.status == "nontrivial"
    assert res.witness == {"x": 1, "y": 0}
    assert carried_euler_characteristic(b, res.witness) == -1


def test_contact_constant_on_two_sheet_side():
    b = build_family_surface(FamilySpec(1))
    s = branch_equations(b, "gamma")
    assert str(s.equations[0]) == "F + F + 1 = F"
    assert solve_nonnegative(s).status == "infeasible"
    with pytest.raises(BranchedSurfaceError):
        branch_equations(b, "nope")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_family_members(n):
    b = build_family_surface(FamilySpec(n))
    report = validate_surface(b)
    assert report.ok and report.single_branch_curve
    assert b.sectors[0].euler_char == 1 - 2 * n
    assert solve_nonnegative(branch_equations(b)).status == "only-zero"
    assert not carries_closed_surface(b)
    assert not admits_contact_surface(b)
    assert is_transversely_orientable(b)


def test_euler_characteristic_rejects_non_solutions():
    with pytest.raises(ValueError):
        carried_euler_characteristic(toy_surface(), {"x": 1, "y": -1})


def test_round_trip_dict():
    b = build_family_surface(FamilySpec(2))
    assert BranchedSurface.from_dict(b.to_dict()) == b
    with pytest.raises(BranchedSurfaceError):
        BranchedSurface.from_dict({"sectors": []})


def test_dangling_reference_raises():
    b = BranchedSurface((Sector("x", 1, ("a",)),),
                        (BranchCurve("g", (Attachment("x", "a"), Attachment("y", "c")),
                                     (Attachment("x", "a"),)),))
    with pytest.raises(BranchedSurfaceError):
        validate_surface(b)


def test_four_sheet_curve_is_reported():
    sectors = (Sector("x", -2, ("a", "b", "c", "d")),)
    curve = BranchCurve("g", (Attachment("x", "a"), Attachment("x", "b"), Attachment("x", "c")),
                        (Attachment("x", "d"),))
    report = validate_surface(BranchedSurface(sectors, (curve,)))
    assert not report.no_triple_points and not report.ok
    assert any("3+1" in e for e in report.errors)


def test_wrong_euler_characteristic_is_reported():
    b = BranchedSurface((Sector("x", 0, ("a",)),), ())
    assert validate_surface(b).errors


def test_disconnected_is_reported():
    b = BranchedSurface((Sector("x", 2, ()), Sector("y", 2, ())), ())
    assert not validate_surface(b).connected


def _random_system(rng, nvars):
    names = tuple("abc"[:nvars])
    eqs = []
    for i in range(rng.randint(1, 3)):
        lhs, rhs = [], []
        for v in names:
            c = rng.randint(-3, 3)
            (lhs if c > 0 else rhs).extend([v] * abs(c))
        eqs.append(Equation(f"e{i}", tuple(lhs), tuple(rhs)))
    return BranchEquationSystem(names, tuple(eqs))


def test_solver_against_bruteforce():
    rng = random.Random(1)
    for _ in range(120):
        s = _random_system(rng, rng.randint(1, 3))
        res = solve_nonnegative(s)
        brute = any(any(w) and all(e.holds(dict(zip(s.variables, w))) for e in s.equations)
                    for w in product(range(10), repeat=len(s.variables)))
        if res.status == "nontrivial":
            w = res.witness
            assert any(w.values()) and all(x >= 0 and x.denominator == 1 for x in
                                           map(Fraction, w.values()))
            assert all(e.holds(w) for e in s.equations)
        else:
            assert res.status == "only-zero"
            assert not brute


def test_inhomogeneous_feasible():
    s = BranchEquationSystem(("a", "b"), (Equation("e", ("a",), ("b",), 2),))
    res = solve_nonnegative(s)
    assert res.status == "feasible"
    assert res.witness["a"] + 2 == res.witness["b"]


def _random_surface(rng, n):
    sectors = tuple(Sector(f"s{i}", 2 - 3, ("p", "q", "r")) for i in range(n))
    circles = [(f"s{i}", c) for i in range(n) for c in ("p", "q", "r")]
    rng.shuffle(circles)
    curves = []
    for k in range(len(circles) // 3):
        a, b, c = circles[3 * k:3 * k + 3]
        curves.append(BranchCurve(f"g{k}", (Attachment(*a, rng.random() < 0.5),
                                            Attachment(*b, rng.random() < 0.5)),
                                  (Attachment(*c, rng.random() < 0.5),)))
    return BranchedSurface(sectors, tuple(curves))


def test_orientability_against_bruteforce():
    rng = random.Random(2)
    seen = set()
    for _ in range(200):
        b = _random_surface(rng, rng.randint(1, 6))
        got = is_transversely_orientable(b)
        assert got == orientable_bruteforce(b)
        seen.add(got)
    assert seen == {True, False}
