"""Combinatorial branched surfaces and their branch equations.

A branched surface is recorded by its sectors (with Euler characteristic
and named boundary circles) and its branch curves.  Each branch curve lists
the sector boundary circles glued along it, split into the side where two
sheets merge and the side carrying the single merged sheet.  That is all
the structure the weight equations and the co-orientation test need.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import lcm

import sympy
from sympy.solvers.simplex import InfeasibleLPError, lpmin

__all__ = [
    "BranchedSurfaceError",
    "Sector",
    "Attachment",
    "BranchCurve",
    "BranchedSurface",
    "ValidationReport",
    "Equation",
    "BranchEquationSystem",
    "Feasibility",
    "validate_surface",
    "branch_equations",
    "solve_nonnegative",
    "carries_closed_surface",
    "admits_contact_surface",
    "is_transversely_orientable",
    "orientable_bruteforce",
    "carried_euler_characteristic",
]

SCHEMA_VERSION = 1


class BranchedSurfaceError(ValueError):
    """Structurally malformed surface data, e.g. a dangling attachment."""


@dataclass(frozen=True)
class Sector:
    """A connected surface piece: genus ``genus`` with the listed boundary circles."""

    name: str
    euler_char: int
    boundaries: tuple[str, ...]
    genus: int = 0

    @property
    def expected_euler_char(self) -> int:
        return 2 - 2 * self.genus - len(self.boundaries)


@dataclass(frozen=True)
class Attachment:
    sector: str
    circle: str
    flip: bool = False


@dataclass(frozen=True)
class BranchCurve:
    name: str
    two_sheet_side: tuple[Attachment, ...]
    one_sheet_side: tuple[Attachment, ...]

    @property
    def attachments(self) -> tuple[Attachment, ...]:
        return self.two_sheet_side + self.one_sheet_side


@dataclass(frozen=True)
class BranchedSurface:
    sectors: tuple[Sector, ...]
    branch_curves: tuple[BranchCurve, ...]

    def sector(self, name: str) -> Sector:
        for s in self.sectors:
            if s.name == name:
                return s
        raise BranchedSurfaceError(f"unknown sector {name!r}")

    def curve(self, name: str) -> BranchCurve:
        for c in self.branch_curves:
            if c.name == name:
                return c
        raise BranchedSurfaceError(f"unknown branch curve {name!r}")

    def to_dict(self) -> dict:
        def att(a: Attachment) -> dict:
            return {"sector": a.sector, "circle": a.circle, "flip": a.flip}

        return {
            "schema_version": SCHEMA_VERSION,
            "sectors": [{"name": s.name, "euler_char": s.euler_char,
                         "boundaries": list(s.boundaries), "genus": s.genus}
                        for s in self.sectors],
            "branch_curves": [{"name": c.name,
                               "two_sheet_side": [att(a) for a in c.two_sheet_side],
                               "one_sheet_side": [att(a) for a in c.one_sheet_side]}
                              for c in self.branch_curves],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BranchedSurface":
        try:
            sectors = tuple(Sector(s["name"], int(s["euler_char"]), tuple(s["boundaries"]),
                                   int(s.get("genus", 0)))
                            for s in data["sectors"])
            curves = tuple(
                BranchCurve(c["name"],
                            tuple(Attachment(a["sector"], a["circle"], bool(a.get("flip", False)))
                                  for a in c["two_sheet_side"]),
                            tuple(Attachment(a["sector"], a["circle"], bool(a.get("flip", False)))
                                  for a in c["one_sheet_side"]))
                for c in data["branch_curves"])
        except (KeyError, TypeError) as exc:
            raise BranchedSurfaceError(f"malformed branched surface document: {exc}") from exc
        return cls(sectors, curves)


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class ValidationReport:
    branch_curve_count: int
    no_triple_points: bool
    connected: bool
    errors: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.no_triple_points and self.connected and not self.errors

    @property
    def single_branch_curve(self) -> bool:
        return self.branch_curve_count == 1


def _check_references(b: BranchedSurface) -> None:
    names = [s.name for s in b.sectors]
    if len(set(names)) != len(names):
        raise BranchedSurfaceError("duplicate sector names")
    circles = {s.name: set(s.boundaries) for s in b.sectors}
    for c in b.branch_curves:
        for a in c.attachments:
            if a.sector not in circles:
                raise BranchedSurfaceError(
                    f"curve {c.name!r} attaches to unknown sector {a.sector!r}")
            if a.circle not in circles[a.sector]:
                raise BranchedSurfaceError(
                    f"curve {c.name!r} attaches to unknown circle {a.circle!r} of {a.sector!r}")


def validate_surface(b: BranchedSurface) -> ValidationReport:
    """Check the generic-branching and connectivity hypotheses.

    Dangling references raise; violations of the model's invariants are
    collected into the report instead.
    """
    _check_references(b)
    errors = []
    for s in b.sectors:
        if s.euler_char != s.expected_euler_char:
            errors.append(f"sector {s.name!r} declares euler characteristic {s.euler_char}, "
                          f"its type gives {s.expected_euler_char}")
    used: dict[tuple[str, str], str] = {}
    for c in b.branch_curves:
        for a in c.attachments:
            key = (a.sector, a.circle)
            if key in used:
                errors.append(f"circle {a.circle!r} of {a.sector!r} attached to both "
                              f"{used[key]!r} and {c.name!r}")
            used[key] = c.name
    generic = all(len(c.two_sheet_side) == 2 and len(c.one_sheet_side) == 1
                  for c in b.branch_curves)
    if not generic:
        for c in b.branch_curves:
            if len(c.two_sheet_side) != 2 or len(c.one_sheet_side) != 1:
                errors.append(f"curve {c.name!r} has {len(c.two_sheet_side)}+"
                              f"{len(c.one_sheet_side)} sheets, expected 2+1")

    # sectors are adjacent when some branch curve touches both
    parent = {s.name: s.name for s in b.sectors}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for c in b.branch_curves:
        touched = [a.sector for a in c.attachments]
        for other in touched[1:]:
            parent[find(other)] = find(touched[0])
    connected = len({find(s.name) for s in b.sectors}) <= 1
    return ValidationReport(len(b.branch_curves), generic, connected, tuple(errors))


# ---------------------------------------------------------------------------
# branch equations


@dataclass(frozen=True)
class Equation:
    """``sum(lhs) + constant == sum(rhs)``; lhs is the two-sheet side."""

    curve: str
    lhs: tuple[str, ...]
    rhs: tuple[str, ...]
    constant: int = 0

    def coefficients(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for v in self.lhs:
            out[v] = out.get(v, 0) + 1
        for v in self.rhs:
            out[v] = out.get(v, 0) - 1
        return out

    def holds(self, w: dict[str, Fraction]) -> bool:
        return sum(w[v] for v in self.lhs) + self.constant == sum(w[v] for v in self.rhs)

    def __str__(self) -> str:
        left = list(self.lhs) + ([str(self.constant)] if self.constant else [])
        return f"{' + '.join(left)} = {' + '.join(self.rhs)}"


@dataclass(frozen=True)
class BranchEquationSystem:
    variables: tuple[str, ...]
    equations: tuple[Equation, ...]

    @property
    def homogeneous(self) -> bool:
        return all(e.constant == 0 for e in self.equations)

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self.equations) + "}"


def branch_equations(b: BranchedSurface, contact_curve: str | None = None) -> BranchEquationSystem:
    """One weight equation per branch curve.

    With ``contact_curve`` set, that curve's equation gains the constant 1
    contributed by the free boundary of a disk of contact, which runs
    alongside the merging sheets: ``a + a + 1 = a``.
    """
    _check_references(b)
    if contact_curve is not None:
        b.curve(contact_curve)
    eqs = tuple(Equation(c.name,
                         tuple(a.sector for a in c.two_sheet_side),
                         tuple(a.sector for a in c.one_sheet_side),
                         1 if c.name == contact_curve else 0)
                for c in b.branch_curves)
    return BranchEquationSystem(tuple(s.name for s in b.sectors), eqs)


@dataclass(frozen=True)
class Feasibility:
    status: str  # "infeasible" | "only-zero" | "nontrivial" | "feasible"
    witness: dict[str, Fraction] | None = None

    @property
    def has_solution(self) -> bool:
        return self.status in ("nontrivial", "feasible")


def _integral(w: dict[str, Fraction], homogeneous: bool) -> dict[str, Fraction]:
    if not homogeneous:
        return w
    scale = lcm(*(x.denominator for x in w.values())) if w else 1
    return {k: v * scale for k, v in w.items()}


def solve_nonnegative(s: BranchEquationSystem) -> Feasibility:
    """Exact feasibility over the nonnegative rationals.

    Homogeneous systems are normalised by ``sum(w) == 1``: a solution there
    exists iff a nontrivial nonnegative solution exists, and clearing
    denominators of it gives an integer witness.

    The equalities are eliminated exactly first and only the sign
    constraints go to the simplex solver, which mishandles some
    equality-constrained infeasible programs.
    """
    if s.homogeneous and not s.variables:
        return Feasibility("only-zero", {})
    rows, rhs = [], []
    for e in s.equations:
        c = e.coefficients()
        rows.append([c.get(v, 0) for v in s.variables])
        rhs.append(-e.constant)
    if s.homogeneous:
        rows.append([1] * len(s.variables))
        rhs.append(1)
    none = Feasibility("only-zero", {v: Fraction(0) for v in s.variables}) if s.homogeneous \
        else Feasibility("infeasible")
    if not rows:
        x = [sympy.Integer(0)] * len(s.variables)
    else:
        try:
            x0, params = sympy.Matrix(rows).gauss_jordan_solve(sympy.Matrix(rhs))
        except ValueError:
            return none
        constraints = [xi >= 0 for xi in x0]
        if any(c is sympy.false for c in constraints):
            return none
        constraints = [c for c in constraints if c is not sympy.true]
        x = list(x0)
        if params.shape[0]:
            # a fixed objective keeps the returned vertex deterministic
            objective = sum(((i + 1) * xi for i, xi in enumerate(x0)), sympy.Integer(0))
            try:
                _, point = lpmin(objective, constraints)
            except InfeasibleLPError:
                return none
            sub = {t: point.get(t, 0) for t in params}
            x = [sympy.nsimplify(xi.subs(sub)) for xi in x0]
    w = {v: Fraction(int(sympy.fraction(xi)[0]), int(sympy.fraction(xi)[1]))
         for v, xi in zip(s.variables, x)}
    w = _integral(w, s.homogeneous)
    if any(val < 0 for val in w.values()) or not all(e.holds(w) for e in s.equations):
        raise ArithmeticError("solver returned a non-solution")
    return Feasibility("nontrivial" if s.homogeneous else "feasible", w)


def carries_closed_surface(b: BranchedSurface) -> bool:
    return solve_nonnegative(branch_equations(b)).has_solution


def admits_contact_surface(b: BranchedSurface) -> bool:
    """Try the free-boundary constant at each branch curve in turn."""
    return any(solve_nonnegative(branch_equations(b, c.name)).has_solution
               for c in b.branch_curves)


# ---------------------------------------------------------------------------
# transverse orientation


def _orientation_constraints(b: BranchedSurface):
    """Edges ``(sector, curve, flip)``: sector's side bit xor flip must equal
    the curve's common side bit."""
    _check_references(b)
    return [(a.sector, c.name, a.flip) for c in b.branch_curves for a in c.attachments]


def is_transversely_orientable(b: BranchedSurface) -> bool:
    """Propagate a co-orientation across every attachment; fail on an odd cycle."""
    edges = _orientation_constraints(b)
    adj: dict[tuple[str, str], list[tuple[tuple[str, str], bool]]] = {}
    for s, c, f in edges:
        adj.setdefault(("s", s), []).append((("c", c), f))
        adj.setdefault(("c", c), []).append((("s", s), f))
    side: dict[tuple[str, str], bool] = {}
    for start in sorted(adj):
        if start in side:
            continue
        side[start] = False
        stack = [start]
        while stack:
            node = stack.pop()
            for other, f in adj[node]:
                want = side[node] ^ f
                if other not in side:
                    side[other] = want
                    stack.append(other)
                elif side[other] != want:
                    return False
    return True


def orientable_bruteforce(b: BranchedSurface) -> bool:
    """Try every co-orientation of every sector; exponential, for tests."""
    edges = _orientation_constraints(b)
    names = [s.name for s in b.sectors]
    for bits in product((False, True), repeat=len(names)):
        side = dict(zip(names, bits))
        curve_side: dict[str, bool] = {}
        ok = True
        for s, c, f in edges:
            v = side[s] ^ f
            if curve_side.setdefault(c, v) != v:
                ok = False
                break
        if ok:
            return True
    return False


def carried_euler_characteristic(b: BranchedSurface, w: dict[str, Fraction | int]) -> Fraction:
    s = branch_equations(b)
    full = {v: Fraction(w.get(v, 0)) for v in s.variables}
    if any(x < 0 for x in full.values()) or not all(e.holds(full) for e in s.equations):
        raise ValueError("weights do not satisfy the branch equations")
    return sum((full[x.name] * x.euler_char for x in b.sectors), Fraction(0))
