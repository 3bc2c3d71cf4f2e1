"""Acceptance criteria AC1-AC10.

Each test records one PASS/FAIL line (printed in the terminal summary)
before asserting, so a failing criterion still reports its detail.
"""

import json
import os
import subprocess
import sys
import time
from dataclasses import replace
from itertools import combinations
from math import gcd

from laminar.branched import (
    branch_equations,
    is_transversely_orientable,
    orientable_bruteforce,
    solve_nonnegative,
    validate_surface,
)
from laminar.diagram import is_alternating, numerator_closure
from laminar.family import (
    ConnectionPattern,
    FamilySpec,
    build_family_surface,
    certify,
    certify_open_tangle,
    composite_strands,
    family_tangle_template,
    find_completion_to,
    torus_witness,
)
from laminar.fixtures import diagram_fixture
from laminar.invariants import (
    determinant,
    goeritz_determinant,
    jones,
    jones_at_minus_one,
    kauffman_bracket,
    smooth,
    torus2k_reference,
)
from laminar.moves import random_sequence
from laminar.polynomial import LaurentPolynomial
from laminar.rational import RationalTangle, rational_to_diagram


def closure(p, q):
    return numerator_closure(rational_to_diagram(RationalTangle(p, q)))


def matchings(xs):
    if not xs:
        yield []
        return
    a = xs[0]
    for i in range(1, len(xs)):
        for rest in matchings(xs[1:i] + xs[i + 1:]):
            yield [(a, xs[i])] + rest


def test_ac1_branch_equations(record_ac):
    start = time.perf_counter()
    problems = []
    for n in range(1, 6):
        b = build_family_surface(FamilySpec(n))
        system = branch_equations(b)
        for e in system.equations:
            if not (len(e.lhs) == 2 and len(set(e.lhs)) == 1 and e.rhs == e.lhs[:1]):
                problems.append(f"n={n}: {e}")
        if solve_nonnegative(system).status != "only-zero":
            problems.append(f"n={n}: closed system has a nonzero solution")
        for c in b.branch_curves:
            if solve_nonnegative(branch_equations(b, c.name)).status != "infeasible":
                problems.append(f"n={n}: contact system at {c.name} is feasible")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 1.0
    record_ac("AC1", ok, f"n=1..5 a+a=a, only-zero, contact infeasible; {elapsed:.2f}s "
                         + "; ".join(problems))
    assert ok, problems


def test_ac2_transverse_orientability(record_ac):
    start = time.perf_counter()
    family = [is_transversely_orientable(build_family_surface(FamilySpec(n)))
              for n in range(1, 6)]
    # flipping one two-sheet attachment of B_1 reverses the co-orientation
    # along a loop through the single sector
    b = build_family_surface(FamilySpec(1))
    g = b.branch_curves[0]
    flipped = replace(g, two_sheet_side=(replace(g.two_sheet_side[0], flip=True),)
                      + g.two_sheet_side[1:])
    toy = replace(b, branch_curves=(flipped,))
    toy_result = is_transversely_orientable(toy)
    elapsed = time.perf_counter() - start
    ok = (all(family) and not toy_result and not orientable_bruteforce(toy)
          and validate_surface(toy).ok and elapsed < 1.0)
    record_ac("AC2", ok, f"B_1..B_5 orientable={family}; reversing toy -> {toy_result}; "
                         f"{elapsed:.2f}s")
    assert ok


def test_ac3_six_one_identification(record_ac):
    start = time.perf_counter()
    target = diagram_fixture("rolfsen_6_1")
    found = find_completion_to(FamilySpec(1), target, 4)
    det_j, det_g = jones_at_minus_one(target), goeritz_determinant(target)
    elapsed = time.perf_counter() - start
    ok = found is not None and det_j == det_g == determinant(target) == 9 and elapsed < 30
    record_ac("AC3", ok, f"completion r={found}; det {det_j} (Jones) / {det_g} (Goeritz); "
                         f"{elapsed:.1f}s")
    assert ok


def test_ac4_rational_determinants(record_ac):
    start = time.perf_counter()
    bad, count = [], 0
    for p in range(2, 14):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            d = closure(p, q)
            j, g = jones_at_minus_one(d), goeritz_determinant(d)
            count += 1
            if not (j == g == determinant(d) == p):
                bad.append(f"{p}/{q}: {j}/{g}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record_ac("AC4", ok, f"{count} fractions, oracles agree with |p|; {elapsed:.1f}s "
                         + ", ".join(bad))
    assert ok, bad


def test_ac5_certifier_vs_bruteforce(record_ac):
    start = time.perf_counter()
    mismatches, duality, full, sub = [], [], 0, 0
    for n in (1, 2, 3):
        spec = FamilySpec(n)
        ends = list(range(spec.n_ends))
        for m in matchings(ends):
            direct = all(spec.side(a) != spec.side(b) for a, b in m)
            if certify(spec, ConnectionPattern(tuple(m))).accepted != direct:
                mismatches.append((n, m))
            full += 1
        for free in combinations(ends, 4):
            rest = [e for e in ends if e not in free]
            for m in matchings(rest):
                pattern = ConnectionPattern(tuple(m))
                certify(spec, pattern)
                sub += 1
                if any(spec.side(a) == spec.side(b) for a, b in m):
                    continue
                for c in composite_strands(spec, pattern):
                    if c["closed"]:
                        continue
                    a, b = c["ends"]
                    if (c["template_strands"] % 2 == 1) != (spec.side(a) == spec.side(b)):
                        duality.append((n, m, c))
    elapsed = time.perf_counter() - start
    ok = not mismatches and not duality and elapsed < 10
    record_ac("AC5", ok, f"{full} matchings, {sub} sub-tangle patterns, "
                         f"{len(mismatches)} mismatches, {len(duality)} duality failures; "
                         f"{elapsed:.1f}s")
    assert ok


def _ac6_fractions():
    out = []
    for p in range(-9, 10):
        for q in range(1, 10):
            if p and gcd(abs(p), q) == 1 and (p, q) not in out:
                out.append((p, q))
    # spread the 25 cases over the whole range
    step = len(out) / 25
    return [out[int(i * step)] for i in range(25)]


def test_ac6_negative_witness(record_ac):
    start = time.perf_counter()
    bad = []
    for p, q in _ac6_fractions():
        t, closed, k = torus_witness(p, q)
        if jones(closed) != torus2k_reference(k):
            bad.append(f"{p}/{q}+{t}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30
    record_ac("AC6", ok, f"25 fractions, Jones equals the (2,k) reference; {elapsed:.1f}s "
                         + ", ".join(bad))
    assert ok, bad


def test_ac7_invariance_suite(record_ac):
    a, a_inv = LaurentPolynomial.monomial(1, 2), LaurentPolynomial.monomial(1, -2)
    seeds = [diagram_fixture(n) for n in ("trefoil", "rolfsen_6_1", "hopf", "borromean")]
    seeds += [closure(p, q) for p, q in ((5, 2), (7, 3), (8, 3), (-4, 1))]
    assert all(len(s.crossings) <= 8 for s in seeds)
    start = time.perf_counter()
    jones_bad = skein_bad = diagrams = sites = 0
    for i in range(100):
        seed = seeds[i % len(seeds)]
        want = jones(seed)
        for d in random_sequence(seed, 8, i):
            diagrams += 1
            jones_bad += jones(d) != want
            whole = kauffman_bracket(d)
            for c in range(len(d.crossings)):
                sites += 1
                parts = (a * kauffman_bracket(smooth(d, c, True))
                         + a_inv * kauffman_bracket(smooth(d, c, False)))
                skein_bad += parts != whole
    elapsed = time.perf_counter() - start
    ok = jones_bad == 0 and skein_bad == 0 and elapsed < 60
    record_ac("AC7", ok, f"100 sequences, {diagrams} diagrams, {sites} skein sites, "
                         f"{jones_bad} Jones / {skein_bad} skein failures; {elapsed:.1f}s")
    assert ok


def test_ac8_alternating_templates(record_ac):
    # expected to fail: T0 = 1/3 + -1/3 has no alternating diagram (see the
    # decision ledger); the check is run as specified
    results = {n: is_alternating(family_tangle_template(FamilySpec(n))[0]) for n in range(1, 5)}
    ok = all(results.values())
    record_ac("AC8", ok, f"is_alternating by n: {results} (unattainable: T0 is not "
                         f"alternating)")
    assert ok, results


def test_ac9_open_case(record_ac):
    cert = certify_open_tangle("wu_fig16", diagram_fixture("wu_fig16"))
    ok = cert.verdict == "unknown" and not cert.accepted
    record_ac("AC9", ok, f"wu_fig16 verdict {cert.verdict}")
    assert ok


COMMAND_MATRIX = [
    ["parse", "N(1/3 + -1/3 + 2)"],
    ["eval", "5/2 + @t0"],
    ["eval", "rot(8/3)", "--format", "svg"],
    ["invariants", "N(@t0 + 1)"],
    ["invariants", "D(@wu_fig16)"],
    ["family", "--n", "3"],
    ["family", "--variant", "recipe_fixture"],
    ["family", "--n", "2", "--format", "svg"],
    ["certify", "--n", "2"],
    ["certify", "--pattern", "same"],
    ["certify", "alternate_disks_B2"],
    ["certify", "wu_fig16"],
    ["witness", "--", "-7/4"],
    ["fixture", "borromean"],
    ["fixture", "found6_1"],
    ["fixture", "naimi_B"],
    ["render", "N(7/3)"],
    ["render", "@t0 + @t0"],
    ["parse", "N(1"],
]

_RUNNER = """
import io, json, sys
from laminar.cli import run
out = []
for argv in json.loads(sys.argv[1]):
    o, e = io.StringIO(), io.StringIO()
    code = run(argv, o, e)
    out.append([code, o.getvalue(), e.getvalue()])
sys.stdout.write(json.dumps(out))
"""


def _matrix_output(hash_seed):
    env = dict(os.environ, PYTHONHASHSEED=str(hash_seed))
    res = subprocess.run([sys.executable, "-c", _RUNNER, json.dumps(COMMAND_MATRIX)],
                         capture_output=True, env=env, check=True)
    return res.stdout


def _entry_point_output(hash_seed, argv):
    env = dict(os.environ, PYTHONHASHSEED=str(hash_seed))
    res = subprocess.run([sys.executable, "-m", "laminar", *argv],
                         capture_output=True, env=env)
    return res.returncode, res.stdout, res.stderr


def test_ac10_determinism(record_ac):
    first, second = _matrix_output(0), _matrix_output(12345)
    direct = [_entry_point_output(seed, ["certify", "recipe_fig15"]) for seed in (1, 2)]
    direct += [_entry_point_output(seed, ["render", "@t0"]) for seed in (3, 4)]
    codes = [row[0] for row in json.loads(first)]
    ok = first == second and direct[0] == direct[1] and direct[2] == direct[3] \
        and codes[-1] == 1 and all(c == 0 for c in codes[:-1])
    record_ac("AC10", ok, f"{len(COMMAND_MATRIX)} commands x 2 hash seeds plus 2 entry-point "
                          f"runs byte-identical: {ok}")
    assert ok
