"""Hand-encoded diagrams used as references and test inputs."""

from __future__ import annotations

from functools import lru_cache

from .diagram import DiagramError, PlanarDiagram, canonical, tangle_sum, validate
from .invariants import torus_braid_closure
from .rational import RationalTangle, rational_to_diagram

__all__ = ["DIAGRAM_FIXTURES", "braid_closure", "diagram_fixture", "t0"]


def braid_closure(word: list[int], n_strands: int) -> PlanarDiagram:
    """Closure of a braid word; ``+i``/``-i`` crosses positions ``i`` and ``i+1``
    (1-based), with the same handedness as :func:`torus_braid_closure`."""
    current = list(range(1, n_strands + 1))
    first = list(current)
    nxt = n_strands + 1
    crossings = []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < n_strands - 1:
            raise DiagramError(f"generator {g} out of range for {n_strands} strands")
        bl, br = current[i], current[i + 1]
        tl, tr = nxt, nxt + 1
        nxt += 2
        crossings.append((bl, br, tr, tl) if g > 0 else (br, tr, tl, bl))
        current[i], current[i + 1] = tl, tr
    rename = dict(zip(current, first))
    crossings = [tuple(rename.get(e, e) for e in c) for c in crossings]
    untouched = sum(1 for a, b in zip(first, current) if a == b)
    d = PlanarDiagram(tuple(crossings), (), untouched)
    validate(d)
    return canonical(d)


def t0() -> PlanarDiagram:
    """The sum of the 1/3 and -1/3 tangles."""
    return tangle_sum(rational_to_diagram(RationalTangle(1, 3)),
                      rational_to_diagram(RationalTangle(-1, 3)))


def _pd(code: list[list[int]]) -> PlanarDiagram:
    d = PlanarDiagram(tuple(tuple(c) for c in code))
    validate(d)
    return canonical(d)


def _wu_fig16() -> PlanarDiagram:
    """The 6* polyhedral diagram with one crossing removed.

    The Borromean rings are the closure of ``(s1 s2^-1)^3``, an alternating
    diagram on the 6* polyhedron.  Deleting a crossing leaves its four edge
    ends, read counterclockwise, as the boundary of a 2-string tangle.
    """
    closed = braid_closure([1, -2] * 3, 3)
    opened = closed.crossings[0]
    d = PlanarDiagram(closed.crossings[1:], opened)
    validate(d)
    return canonical(d)


_BUILDERS = {
    "rolfsen_6_1": lambda: _pd([[1, 4, 2, 5], [7, 10, 8, 11], [3, 9, 4, 8],
                                [9, 3, 10, 2], [5, 12, 6, 1], [11, 6, 12, 7]]),
    "trefoil": lambda: _pd([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]),
    "unknot": lambda: PlanarDiagram(free_loops=1),
    "hopf": lambda: torus_braid_closure(2),
    "t0": t0,
    "wu_fig16": _wu_fig16,
    "borromean": lambda: braid_closure([1, -2] * 3, 3),
}

DIAGRAM_FIXTURES = tuple(sorted(list(_BUILDERS) + ["found6_1"]))


@lru_cache(maxsize=None)
def diagram_fixture(name: str) -> PlanarDiagram:
    """Diagram fixtures by name; ``found6_1`` is the rational tangle found by
    searching for a completion of T0 to the 6_1 fixture."""
    if name == "found6_1":
        from .family import FamilySpec, find_completion_to

        found = find_completion_to(FamilySpec(1), diagram_fixture("rolfsen_6_1"), 4)
        if found is None:
            raise LookupError("no completion of T0 to the 6_1 fixture within budget")
        return rational_to_diagram(found)
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}") from None
