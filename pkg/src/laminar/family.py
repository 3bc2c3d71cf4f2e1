"""The B_n family: branched surfaces, tangle templates, patterns and certificates.

Template endpoints are numbered by their position in the template's
boundary list.  For the standard template on ``n`` copies of T0 that list
is ``NW_1, NE_1, ..., NW_n, NE_n, SE_n, SW_n, ..., SE_1, SW_1``: the first
``2n`` ends lie on the black side of the branch curve, the rest on the
white side.  Every template strand has both ends on one side.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .branched import (
    Attachment,
    BranchCurve,
    BranchedSurface,
    Sector,
    admits_contact_surface,
    carries_closed_surface,
    is_transversely_orientable,
    validate_surface,
)
from .diagram import (
    NW,
    SW,
    DiagramError,
    PlanarDiagram,
    canonical,
    disjoint_union,
    glue,
    numerator_closure,
    strands,
    tangle_sum,
    validate,
)
from .fixtures import t0
from .invariants import CROSSING_BUDGET, jones, torus2k_reference
from .rational import RationalTangle, integer_tangle, rational_to_diagram

__all__ = [
    "VARIANTS",
    "FIXED_N",
    "FAMILY_FIXTURES",
    "FamilySpec",
    "PatternError",
    "Insertion",
    "ConnectionPattern",
    "Check",
    "Certificate",
    "FamilyFixture",
    "build_family_surface",
    "family_tangle_template",
    "template_strands",
    "named_pattern",
    "composite_strands",
    "certify",
    "certify_open_tangle",
    "close_with_pattern",
    "standard_insertion",
    "completion_candidates",
    "find_completion_to",
    "torus_witness",
    "family_fixture",
]

VARIANTS = ("standard", "naimi", "alternate_disks", "recipe_fixture")
FIXED_N = {"naimi": 1, "alternate_disks": 2, "recipe_fixture": 2}

BLACK, WHITE = "black", "white"


@dataclass(frozen=True)
class FamilySpec:
    n: int
    variant: str = "standard"

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        fixed = FIXED_N.get(self.variant)
        if fixed is not None and self.n != fixed:
            raise ValueError(f"variant {self.variant!r} exists only for n = {fixed}")

    @property
    def n_ends(self) -> int:
        return 4 * self.n

    def side(self, position: int) -> str:
        return BLACK if position < 2 * self.n else WHITE

    def to_dict(self) -> dict:
        return {"n": self.n, "variant": self.variant}


# ---------------------------------------------------------------------------
# surfaces and templates


@lru_cache(maxsize=None)
def build_family_surface(spec: FamilySpec) -> BranchedSurface:
    """One sector of genus ``n - 1`` with three boundary circles, glued along
    the single branch curve gamma: two circles merge into the third."""
    n = spec.n
    sector = Sector("F", 1 - 2 * n, ("c0", "c1", "c2"), genus=n - 1)
    gamma = BranchCurve("gamma",
                        (Attachment("F", "c1"), Attachment("F", "c2")),
                        (Attachment("F", "c0"),))
    return BranchedSurface((sector,), (gamma,))


def _standard_template(n: int) -> PlanarDiagram:
    piece = t0()
    d = piece
    for k in range(1, n):
        u = disjoint_union(d, piece)
        old, new = u.boundary_ends[:4 * k], u.boundary_ends[4 * k:]
        # the new piece sits between NE_k and SE_k
        d = PlanarDiagram(u.crossings, old[:2 * k] + new + old[2 * k:], u.free_loops)
    validate(d)
    return canonical(d)


def _twist_adjacent(d: PlanarDiagram, i: int, twists: int) -> PlanarDiagram:
    """Add ``twists`` half-twists between boundary ends ``i`` and ``i + 1``."""
    n = len(d.boundary_ends)
    out = glue(d, integer_tangle(twists), [(i, NW), ((i + 1) % n, SW)])
    ends = out.boundary_ends
    order = tuple(ends[(p - i - 2) % n] for p in range(n))
    result = PlanarDiagram(out.crossings, order, out.free_loops)
    validate(result)
    return canonical(result)


@lru_cache(maxsize=None)
def family_tangle_template(spec: FamilySpec) -> tuple[PlanarDiagram, tuple[str, ...]]:
    """Template diagram and the side tag of each boundary position.

    The standard template places ``n`` copies of T0 side by side, one per
    pair of tubes.  The alternate variants change the choice of compressing
    disks, which braids two neighbouring ends on one side; that is encoded
    as a full twist of those ends.
    """
    if spec.variant in ("standard", "naimi"):
        d = _standard_template(spec.n)
    elif spec.variant == "alternate_disks":
        d = _twist_adjacent(_standard_template(2), 1, 2)  # NE_1 and NW_2
    else:
        d = _twist_adjacent(_standard_template(2), 5, -2)  # SW_2 and SE_1
    labels = tuple(spec.side(p) for p in range(spec.n_ends))
    return d, labels


@lru_cache(maxsize=None)
def template_strands(spec: FamilySpec) -> tuple[tuple[int, int], ...]:
    d, _ = family_tangle_template(spec)
    return tuple(tuple(sorted(s["ends"])) for s in strands(d) if not s["closed"])


# ---------------------------------------------------------------------------
# patterns


class PatternError(ValueError):
    """A connection pattern that does not fit its family member."""


@dataclass(frozen=True)
class Insertion:
    """A 2-string tangle whose NW, NE, SE, SW ends attach to template ``ends``."""

    ends: tuple[int, int, int, int]
    tangle: PlanarDiagram
    expression: str = ""

    def induced_arcs(self) -> list[tuple[int, int]]:
        arcs = []
        for s in strands(self.tangle):
            if not s["closed"]:
                a, b = s["ends"]
                arcs.append(tuple(sorted((self.ends[a], self.ends[b]))))
        return sorted(arcs)

    def closed_components(self) -> int:
        return sum(1 for s in strands(self.tangle) if s["closed"])


@dataclass(frozen=True)
class ConnectionPattern:
    matching: tuple[tuple[int, int], ...]
    insertion: Insertion | None = None

    def __post_init__(self):
        object.__setattr__(self, "matching",
                           tuple(sorted(tuple(sorted(p)) for p in self.matching)))

    def covered(self) -> set[int]:
        return {e for p in self.matching for e in p}

    def free_ends(self, spec: FamilySpec) -> list[int]:
        if self.insertion is not None:
            return []
        return sorted(set(range(spec.n_ends)) - self.covered())

    def is_subtangle(self, spec: FamilySpec) -> bool:
        return bool(self.free_ends(spec))

    def arcs(self) -> list[tuple[int, int]]:
        extra = self.insertion.induced_arcs() if self.insertion else []
        return sorted(list(self.matching) + extra)

    def check(self, spec: FamilySpec) -> None:
        seen: set[int] = set()
        for a, b in self.matching:
            for e in (a, b):
                if not 0 <= e < spec.n_ends:
                    raise PatternError(f"endpoint {e} out of range 0..{spec.n_ends - 1}")
                if e in seen:
                    raise PatternError(f"endpoint {e} used twice")
                seen.add(e)
            if a == b:
                raise PatternError(f"arc joins endpoint {a} to itself")
        uncovered = set(range(spec.n_ends)) - seen
        if self.insertion is not None:
            if len(self.insertion.tangle.boundary_ends) != 4:
                raise PatternError("inserted tangle must have 2 strings")
            if set(self.insertion.ends) != uncovered or len(set(self.insertion.ends)) != 4:
                raise PatternError("insertion ends must be exactly the four unmatched endpoints")
        elif len(uncovered) not in (0, 4):
            raise PatternError(f"{len(uncovered)} endpoints left unmatched; expected 0 or 4")

    def to_dict(self) -> dict:
        out: dict = {"matching": [list(p) for p in self.matching]}
        if self.insertion is not None:
            out["insertion"] = {"ends": list(self.insertion.ends),
                                "expression": self.insertion.expression}
        return out


def named_pattern(spec: FamilySpec, name: str) -> ConnectionPattern:
    """``opposite`` nests every black end with a white one; ``same`` pairs
    neighbouring ends on each side."""
    m = spec.n_ends
    if name == "opposite":
        return ConnectionPattern(tuple((p, m - 1 - p) for p in range(2 * spec.n)))
    if name == "same":
        pairs = [(p, p + 1) for p in range(1, 2 * spec.n - 1, 2)]
        pairs += [(2 * spec.n - 1, 0)] if spec.n > 1 else [(0, 1)]
        pairs += [(2 * spec.n + p, 2 * spec.n + p + 1) for p in range(0, 2 * spec.n, 2)]
        return ConnectionPattern(tuple(pairs))
    raise PatternError(f"unknown pattern name {name!r}; expected opposite or same")


def composite_strands(spec: FamilySpec, pattern: ConnectionPattern) -> list[dict]:
    """Follow template strands and pattern arcs.

    Each entry has ``closed``, ``template_strands`` (how many template
    strands it runs through) and, for open ones, ``ends``.
    """
    tmpl = template_strands(spec)
    along: dict[int, int] = {}
    for a, b in tmpl:
        along[a], along[b] = b, a
    arc: dict[int, int] = {}
    for a, b in pattern.arcs():
        arc[a], arc[b] = b, a
    seen: set[int] = set()
    out = []
    for start in pattern.free_ends(spec):
        if start in seen:
            continue
        count, e = 0, start
        while True:
            seen.add(e)
            other = along[e]
            seen.add(other)
            count += 1
            if other not in arc:
                out.append({"closed": False, "template_strands": count, "ends": (start, other)})
                break
            e = arc[other]
    for start in range(spec.n_ends):
        if start in seen:
            continue
        count, e = 0, start
        while e not in seen:
            seen.add(e)
            other = along[e]
            seen.add(other)
            count += 1
            e = arc[other]
        out.append({"closed": True, "template_strands": count})
    return out


# ---------------------------------------------------------------------------
# certificates

STATUSES = ("verified", "violated", "paper-justified", "unknown")


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def _verdict(checks: list[Check], kind: str) -> str:
    statuses = {c.status for c in checks}
    if "violated" in statuses:
        return "rejected"
    if "unknown" in statuses:
        return "unknown"
    return {"knot": "persistently-laminar-knot",
            "link": "persistently-laminar-link-complete-filling",
            "tangle": "persistently-laminar-tangle"}[kind]


@dataclass(frozen=True)
class Certificate:
    spec: dict
    pattern: dict
    checks: tuple[Check, ...]
    verdict: str
    components: int | None = None

    @property
    def accepted(self) -> bool:
        return self.verdict.startswith("persistently-laminar")

    def to_dict(self) -> dict:
        return {"spec": self.spec, "pattern": self.pattern,
                "checks": [c.to_dict() for c in self.checks],
                "verdict": self.verdict}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@lru_cache(maxsize=None)
def _surface_checks(spec: FamilySpec) -> tuple[Check, ...]:
    b = build_family_surface(spec)
    report = validate_surface(b)
    checks = [
        Check("single-branch-curve",
              "verified" if report.single_branch_curve and report.no_triple_points
              and not report.errors else "violated",
              f"{report.branch_curve_count} branch curve(s); no triple points: "
              f"{report.no_triple_points}"),
        Check("complement-of-branch-curve-connected",
              "verified" if report.connected else "violated",
              "sector graph connected" if report.connected else "sector graph disconnected"),
    ]
    closed = carries_closed_surface(b)
    checks.append(Check("carries-no-closed-surface", "violated" if closed else "verified",
                        "homogeneous branch equations have only the zero solution"
                        if not closed else "a nonzero nonnegative weight exists"))
    contact = admits_contact_surface(b)
    checks.append(Check("no-disk-of-contact", "violated" if contact else "verified",
                        "every contact system is infeasible" if not contact
                        else "a contact system is feasible"))
    orient = is_transversely_orientable(b)
    checks.append(Check("transversely-orientable", "verified" if orient else "violated",
                        "co-orientation propagates consistently" if orient
                        else "an odd cycle of flips"))
    return tuple(checks)


def certify(spec: FamilySpec, pattern: ConnectionPattern) -> Certificate:
    """Audit a connection pattern against the family's checkable conditions."""
    pattern.check(spec)
    checks: list[Check] = []

    bad = [(a, b) for a, b in pattern.arcs() if spec.side(a) == spec.side(b)]
    checks.append(Check(
        "side-crossing", "violated" if bad else "verified",
        "every arc joins a black end to a white end" if not bad
        else "arcs on one side: " + ", ".join(f"{a}-{b}" for a, b in bad)))

    comps = composite_strands(spec, pattern)
    subtangle = pattern.is_subtangle(spec)
    if subtangle:
        even = [c["ends"] for c in comps if not c["closed"] and c["template_strands"] % 2 == 0]
        checks.append(Check(
            "odd-strand", "violated" if even else "verified",
            "each composite strand uses an odd number of template strands" if not even
            else "even composite strands with ends " + ", ".join(f"{a}-{b}" for a, b in even)))

    checks.append(Check("meridian-disk", "verified",
                        "each tube core is a single template strand, so every arc meets "
                        "D1 and D2 in one point"))
    checks.extend(_surface_checks(spec))
    checks.append(Check("full-support-lamination", "paper-justified",
                        "single branch curve without triple points carries a Cantor-set "
                        "lamination with full support"))
    checks.append(Check("irreducible-and-boundary-incompressible", "paper-justified",
                        "complementary regions M0 and N0 are handlebody pieces with "
                        "incompressible horizontal boundary"))
    checks.append(Check("persistence", "paper-justified",
                        "meridional annuli from side-crossing arcs keep the lamination "
                        "essential in every nontrivial filling M_r"))

    closed_comps = sum(1 for c in comps if c["closed"])
    if pattern.insertion is not None:
        closed_comps += (pattern.insertion.closed_components()
                         + pattern.insertion.tangle.free_loops)
    if subtangle:
        kind = "tangle"
        detail = f"2-string tangle with {closed_comps} closed component(s)"
        if closed_comps:
            checks.append(Check("tangle-has-no-closed-components", "violated", detail))
    else:
        kind = "knot" if closed_comps == 1 else "link"
        detail = f"{closed_comps} component(s)"
    checks.append(Check("components", "verified", detail))
    return Certificate(spec.to_dict(), pattern.to_dict(), tuple(checks),
                       _verdict(checks, kind), None if subtangle else closed_comps)


def certify_open_tangle(name: str, d: PlanarDiagram) -> Certificate:
    """Certificate for a tangle outside the family: nothing is claimed."""
    validate(d)
    checks = [
        Check("diagram-valid", "verified", f"{len(d.crossings)} crossings, planar"),
        Check("two-string", "verified" if d.n_strings == 2 else "violated",
              f"{d.n_strings} strings"),
        Check("carrier-branched-surface", "unknown",
              "no branched surface with a single branch curve is known for this tangle"),
        Check("persistence", "unknown", "open: not known whether the tangle is "
                                        "persistently laminar"),
    ]
    return Certificate({"fixture": name}, {"matching": []}, tuple(checks),
                       _verdict(checks, "tangle"))


# ---------------------------------------------------------------------------
# realising a pattern as a diagram


def _angle(p: int, n: int) -> float:
    # small deterministic offsets keep chords in general position
    jitter = ((p * 7919) % 97) / 1000.0
    return 2 * math.pi * (p + jitter) / n


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _intersect(p1, p2, q1, q2):
    """Parameters ``(s, t)`` of the proper intersection of two segments, or None."""
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (q2[0] - q1[0], q2[1] - q1[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if abs(den) < 1e-15:
        return None
    wx, wy = q1[0] - p1[0], q1[1] - p1[1]
    s = (wx * d2[1] - wy * d2[0]) / den
    t = (wx * d1[1] - wy * d1[0]) / den
    if 1e-12 < s < 1 - 1e-12 and 1e-12 < t < 1 - 1e-12:
        return s, t
    return None


_CENTRES = ((0.0137, -0.0291), (-0.0412, 0.0233), (0.0561, 0.0419))


def close_with_pattern(spec: FamilySpec, pattern: ConnectionPattern) -> PlanarDiagram:
    """Draw the pattern arcs in the disk outside the template.

    Template end ``p`` sits on a circle at an angle increasing with ``p``.
    Matched ends are joined by straight chords.  An inserted tangle, or the
    boundary of a sub-tangle pattern, is a small disk near the centre joined
    to its ends by radial legs.  Interleaved chords cross once, the chord
    with the smaller first endpoint passing over; legs pass under chords.
    """
    pattern.check(spec)
    tmpl, _ = family_tangle_template(spec)
    n = spec.n_ends
    insertion = pattern.insertion
    inner = (list(insertion.ends) if insertion is not None
             else pattern.free_ends(spec))

    offset = max(tmpl.labels(), default=0)
    extra_crossings: list[tuple[int, ...]] = []
    leg_labels: dict[int, int] = {}
    if insertion is not None:
        r = insertion.tangle
        shift = offset
        offset += max(r.labels(), default=0)
        extra_crossings += [tuple(e + shift for e in c) for c in r.crossings]
        for k, p in enumerate(insertion.ends):
            leg_labels[p] = r.boundary_ends[k] + shift
        extra_loops = r.free_loops
    else:
        for p in inner:
            offset += 1
            leg_labels[p] = offset
        extra_loops = 0

    def fresh() -> int:
        nonlocal offset
        offset += 1
        return offset

    points = {p: (math.cos(_angle(p, n)), math.sin(_angle(p, n))) for p in range(n)}
    for centre in _CENTRES:
        segments = []  # (start, end, start_label, end_label, kind, key)
        for a, b in pattern.matching:
            segments.append((points[a], points[b], tmpl.boundary_ends[a],
                             tmpl.boundary_ends[b], "chord", a))
        eps = 1e-4
        for p in inner:
            px, py = points[p]
            dx, dy = px - centre[0], py - centre[1]
            norm = math.hypot(dx, dy)
            near = (centre[0] + eps * dx / norm, centre[1] + eps * dy / norm)
            segments.append((points[p], near, tmpl.boundary_ends[p], leg_labels[p], "leg", p))
        if all(_clear_of(centre, 3 * eps, s) for s in segments if s[4] == "chord"):
            break
    else:
        raise DiagramError("could not place the inner disk clear of every chord")

    if insertion is not None:
        # the inserted tangle's ends run clockwise around its centre
        angles = [math.atan2(points[p][1] - centre[1], points[p][0] - centre[0])
                  for p in insertion.ends]
        if not _cyclically_decreasing(angles):
            raise PatternError("insertion ends must run clockwise: NW, NE, SE, SW")

    hits: dict[int, list[tuple[float, int]]] = {i: [] for i in range(len(segments))}
    found = []
    for i in range(len(segments)):
        for j in range(i + 1, len(segments)):
            si, sj = segments[i], segments[j]
            if si[4] == "leg" and sj[4] == "leg":
                continue
            hit = _intersect(si[0], si[1], sj[0], sj[1])
            if hit is None:
                continue
            k = len(found)
            found.append((i, j))
            hits[i].append((hit[0], k))
            hits[j].append((hit[1], k))

    # piece labels along each segment
    unions: list[tuple[int, int]] = []
    ends_at: dict[tuple[int, int], tuple[int, int]] = {}
    for i, (start, end, l0, l1, _, _) in enumerate(segments):
        order = sorted(hits[i])
        labels = [l0] + [fresh() for _ in order[:-1]] + [l1] if order else [l0, l1]
        if not order:
            unions.append((l0, l1))
        for idx, (_, k) in enumerate(order):
            ends_at[(k, i)] = (labels[idx], labels[idx + 1])

    for k, (i, j) in enumerate(found):
        si, sj = segments[i], segments[j]
        if si[4] == "chord" and sj[4] == "chord":
            over = i if si[5] < sj[5] else j
        else:
            over = i if si[4] == "chord" else j
        half = []
        for seg in (i, j):
            s0, s1 = segments[seg][0], segments[seg][1]
            u = (s1[0] - s0[0], s1[1] - s0[1])
            before, after = ends_at[(k, seg)]
            half.append((math.atan2(-u[1], -u[0]), before, seg != over))
            half.append((math.atan2(u[1], u[0]), after, seg != over))
        half.sort()
        start = next(idx for idx, h in enumerate(half) if h[2])
        half = half[start:] + half[:start]
        extra_crossings.append(tuple(h[1] for h in half))

    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in unions:
        parent[find(a)] = find(b)
    all_crossings = tuple(tuple(find(e) for e in c)
                          for c in tmpl.crossings + tuple(extra_crossings))
    boundary = () if insertion is not None else tuple(find(leg_labels[p]) for p in inner)
    labels = set(tmpl.labels()) | {e for c in extra_crossings for e in c} | set(leg_labels.values())
    alive = {e for c in all_crossings for e in c} | set(boundary)
    loops = len({find(e) for e in labels} - alive)
    out = PlanarDiagram(all_crossings, boundary, tmpl.free_loops + extra_loops + loops)
    validate(out)
    return canonical(out)


def _clear_of(centre, radius, seg) -> bool:
    (x0, y0), (x1, y1) = seg[0], seg[1]
    dx, dy = x1 - x0, y1 - y0
    t = max(0.0, min(1.0, ((centre[0] - x0) * dx + (centre[1] - y0) * dy) / (dx * dx + dy * dy)))
    return math.hypot(x0 + t * dx - centre[0], y0 + t * dy - centre[1]) > radius


def _cyclically_decreasing(angles: list[float]) -> bool:
    steps = [(angles[k] - angles[(k + 1) % len(angles)]) % (2 * math.pi)
             for k in range(len(angles))]
    return abs(sum(steps) - 2 * math.pi) < 1e-9


def standard_insertion(tangle: PlanarDiagram, expression: str = "") -> ConnectionPattern:
    """For n = 1: attach ``tangle`` so that the closure is N(T0 + tangle)."""
    return ConnectionPattern((), Insertion((1, 0, 3, 2), tangle, expression))


# ---------------------------------------------------------------------------
# searches and witnesses


def completion_candidates(budget: int) -> list[RationalTangle]:
    """Rational tangles with at most ``budget`` crossings, smallest first."""
    bound = 2 ** budget + 1
    found = {RationalTangle(1, 0)}
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if gcd(abs(p), q) != 1:
                continue
            t = RationalTangle(p, q)
            if t.crossing_number <= budget:
                found.add(t)
    return sorted(found, key=lambda t: (t.crossing_number, t.q == 0 and -1 or 0,
                                        abs(t.p), t.p, t.q))


def find_completion_to(spec: FamilySpec, target: PlanarDiagram,
                       budget: int) -> RationalTangle | None:
    """First rational tangle ``r`` (within ``budget`` crossings) with
    jones(N(T0 + r)) equal to jones(target)."""
    if spec.n != 1:
        raise ValueError("completions are searched for the n = 1 template only")
    if budget > 6:
        raise ValueError("the completion search budget is at most 6 crossings")
    want = jones(target)
    template_size = len(family_tangle_template(spec)[0].crossings)
    for r in completion_candidates(budget):
        if template_size + r.crossing_number > CROSSING_BUDGET:
            continue
        closed = close_with_pattern(spec, standard_insertion(rational_to_diagram(r), str(r)))
        if jones(closed) == want:
            return r
    return None


def _bezout(a: int, b: int) -> tuple[int, int]:
    """``(x, y)`` with ``a*x + b*y == 1`` for coprime ``a``, ``b``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k = a // b
        a, b = b, a - k * b
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    return (x0, y0) if a == 1 else (-x0, -y0)


def torus_witness(p: int, q: int) -> tuple[RationalTangle, PlanarDiagram, int]:
    """A rational tangle ``t`` with N(p/q + t) the (2, k) torus knot.

    ``k`` is the smallest odd ``|k| >= 3`` with the sign of p/q.  Writing
    ``p q' - q p' = 1``, the tangle ``t = r/s`` with ``p s + q r = -k`` and
    ``p' s + q' r = -1`` works; among the choices of ``(p', q')`` the one
    with fewest crossings is used.
    """
    if q < 1 or gcd(abs(p), q) != 1:
        raise ValueError(f"{p}/{q} is not a reduced fraction with positive denominator")
    k = 3 if p >= 0 else -3
    x, y = _bezout(p, q)  # p x + q y = 1, so q' = x, p' = -y
    best = None
    for j in range(-4, 5):
        qq, pp = x + j * q, -y + j * p
        s, r = -k * qq - q, k * pp + p
        if s < 0 or (s == 0 and r < 0):
            r, s = -r, -s
        t = RationalTangle(1, 0) if s == 0 else RationalTangle(r, s)
        key = (t.crossing_number, s, r)
        if best is None or key < best[0]:
            best = (key, t)
    t = best[1]
    closed = numerator_closure(tangle_sum(rational_to_diagram(RationalTangle(p, q)),
                                          rational_to_diagram(t)))
    return t, closed, k


# ---------------------------------------------------------------------------
# fixtures


@dataclass(frozen=True)
class FamilyFixture:
    name: str
    spec: FamilySpec
    surface: BranchedSurface
    template: PlanarDiagram
    labels: tuple[str, ...]


FAMILY_FIXTURES = ("naimi_B", "alternate_disks_B2", "recipe_fig15")
_FIXTURE_SPECS = {
    "naimi_B": FamilySpec(1, "naimi"),
    "alternate_disks_B2": FamilySpec(2, "alternate_disks"),
    "recipe_fig15": FamilySpec(2, "recipe_fixture"),
}


def family_fixture(name: str) -> FamilyFixture:
    try:
        spec = _FIXTURE_SPECS[name]
    except KeyError:
        raise KeyError(f"unknown family fixture {name!r}") from None
    template, labels = family_tangle_template(spec)
    return FamilyFixture(name, spec, build_family_surface(spec), template, labels)
