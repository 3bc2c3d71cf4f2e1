"""Planar diagrams of knots, links and tangles.

A crossing is a 4-tuple of edge labels read counterclockwise around the
crossing, starting from an edge of the under-strand (the incoming one once
the diagram is oriented).  Slots 0 and 2 are therefore the under-strand and
slots 1 and 3 the over-strand.

Boundary ends of a tangle are listed in the cyclic order seen from the
outer vertex of the disk, which for a 2-string tangle drawn in the usual
way is NW, NE, SE, SW.  Crossingless closed components carry no edges and
are counted by ``free_loops``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DiagramError",
    "PlanarDiagram",
    "NW",
    "NE",
    "SE",
    "SW",
    "validate",
    "canonical",
    "strands",
    "component_count",
    "is_knot",
    "is_alternating",
    "mirror",
    "rotate90",
    "glue",
    "tangle_sum",
    "numerator_closure",
    "denominator_closure",
    "disjoint_union",
]

NW, NE, SE, SW = 0, 1, 2, 3

Crossing = tuple[int, int, int, int]
# A port is (crossing index, slot); boundary positions use crossing index -1.
Port = tuple[int, int]
BOUNDARY = -1


class DiagramError(ValueError):
    """Raised for structurally invalid diagrams or incompatible operands."""


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[Crossing, ...] = ()
    boundary_ends: tuple[int, ...] = ()
    free_loops: int = 0

    @property
    def n_strings(self) -> int:
        return len(self.boundary_ends) // 2

    @property
    def is_closed(self) -> bool:
        return not self.boundary_ends

    def __len__(self) -> int:
        return len(self.crossings)

    def labels(self) -> set[int]:
        out = set(self.boundary_ends)
        for c in self.crossings:
            out.update(c)
        return out

    def to_dict(self) -> dict:
        return {
            "n_strings": self.n_strings,
            "boundary_ends": list(self.boundary_ends),
            "crossings": [list(c) for c in self.crossings],
            "free_loops": self.free_loops,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PlanarDiagram":
        d = cls(
            crossings=tuple(tuple(int(v) for v in c) for c in data["crossings"]),
            boundary_ends=tuple(int(v) for v in data.get("boundary_ends", ())),
            free_loops=int(data.get("free_loops", 0)),
        )
        if "n_strings" in data and int(data["n_strings"]) != d.n_strings:
            raise DiagramError("n_strings does not match boundary_ends")
        validate(d)
        return d


# ---------------------------------------------------------------------------
# port bookkeeping


def _occurrences(d: PlanarDiagram) -> dict[int, list[Port]]:
    occ: dict[int, list[Port]] = {}
    for i, e in enumerate(d.boundary_ends):
        occ.setdefault(e, []).append((BOUNDARY, i))
    for ci, c in enumerate(d.crossings):
        for s, e in enumerate(c):
            occ.setdefault(e, []).append((ci, s))
    return occ


def _label_at(d: PlanarDiagram, port: Port) -> int:
    ci, s = port
    return d.boundary_ends[s] if ci == BOUNDARY else d.crossings[ci][s]


def _partner(occ: dict[int, list[Port]], label: int, port: Port) -> Port:
    a, b = occ[label]
    return b if a == port else a


def validate(d: PlanarDiagram) -> None:
    """Raise :class:`DiagramError` unless ``d`` is a well-formed planar diagram.

    Checks that every label occurs exactly twice, that the boundary has even
    length, and that the rotation system is planar (Euler characteristic 2
    for every connected piece).
    """
    if d.free_loops < 0:
        raise DiagramError("free_loops must be nonnegative")
    if len(d.boundary_ends) % 2:
        raise DiagramError("odd number of boundary ends")
    for c in d.crossings:
        if len(c) != 4:
            raise DiagramError(f"crossing {c} does not have four edges")
    occ = _occurrences(d)
    for e, ports in occ.items():
        if len(ports) != 2:
            raise DiagramError(f"edge {e} occurs {len(ports)} times, expected 2")
    if not occ:
        return
    faces = _face_count(d, occ)
    n_vertices = len(d.crossings) + (1 if d.boundary_ends else 0)
    pieces = _connected_pieces(d, occ)
    if n_vertices - len(occ) + faces != 2 * pieces:
        raise DiagramError("rotation system is not planar")


def _degree(d: PlanarDiagram, v: int) -> int:
    return len(d.boundary_ends) if v == BOUNDARY else 4


def _face_count(d: PlanarDiagram, occ: dict[int, list[Port]]) -> int:
    # corner (v, k) sits between ports k and k+1 (counterclockwise)
    seen: set[Port] = set()
    faces = 0
    vertices = [BOUNDARY] if d.boundary_ends else []
    vertices += list(range(len(d.crossings)))
    for v in vertices:
        for k in range(_degree(d, v)):
            if (v, k) in seen:
                continue
            faces += 1
            corner = (v, k)
            while corner not in seen:
                seen.add(corner)
                cv, ck = corner
                out = (cv, (ck + 1) % _degree(d, cv))
                corner = _partner(occ, _label_at(d, out), out)
    return faces


def faces(d: PlanarDiagram) -> list[list[Port]]:
    """Faces of a closed diagram as lists of corners ``(crossing, k)``.

    Corner ``k`` of a crossing is the region between slots ``k`` and ``k+1``.
    """
    if d.boundary_ends:
        raise DiagramError("faces() expects a closed diagram")
    occ = _occurrences(d)
    seen: set[Port] = set()
    out = []
    for v in range(len(d.crossings)):
        for k in range(4):
            if (v, k) in seen:
                continue
            face = []
            corner = (v, k)
            while corner not in seen:
                seen.add(corner)
                face.append(corner)
                cv, ck = corner
                out_port = (cv, (ck + 1) % 4)
                corner = _partner(occ, _label_at(d, out_port), out_port)
            out.append(face)
    return out


def _connected_pieces(d: PlanarDiagram, occ: dict[int, list[Port]]) -> int:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (a, _), (b, _) in occ.values():
        parent[find(a)] = find(b)
    return len({find(v) for v in parent})


def diagram_pieces(d: PlanarDiagram) -> int:
    """Connected pieces of the underlying 4-valent graph, free loops included."""
    occ = _occurrences(d)
    return (_connected_pieces(d, occ) if occ else 0) + d.free_loops


# ---------------------------------------------------------------------------
# tracing and canonical form


def _trace_all(d: PlanarDiagram):
    """Walk every strand of ``d`` in the canonical order.

    Yields, per component, ``(kind, steps)`` with kind ``"open"`` or
    ``"closed"`` and steps a list of ``(label, entered_port)`` pairs where
    ``entered_port`` is the port the label leads into (a crossing slot or a
    boundary position).
    """
    occ = _occurrences(d)
    visited: set[Port] = set()
    rank: dict[int, int] = {}
    under_in: dict[int, int] = {}
    over_in: dict[int, int] = {}
    components = []

    def enter(port: Port) -> None:
        ci, s = port
        rank.setdefault(ci, len(rank))
        (under_in if s % 2 == 0 else over_in)[ci] = s

    for i in range(len(d.boundary_ends)):
        start = (BOUNDARY, i)
        if start in visited:
            continue
        steps = []
        port = start
        while True:
            visited.add(port)
            label = _label_at(d, port)
            nxt = _partner(occ, label, port)
            visited.add(nxt)
            steps.append((label, nxt))
            if nxt[0] == BOUNDARY:
                break
            enter(nxt)
            port = (nxt[0], (nxt[1] + 2) % 4)
        components.append(("open", steps))

    while True:
        pending = [ci for ci in sorted(rank, key=rank.get)
                   if any((ci, s) not in visited for s in range(4))]
        if pending:
            ci = pending[0]
            if ci in under_in:
                slot = (under_in[ci] + 1) % 4
            else:
                slot = (over_in[ci] + 1) % 4
        else:
            fresh = [ci for ci in range(len(d.crossings)) if ci not in rank]
            if not fresh:
                break
            ci, slot = fresh[0], 0
        start = (ci, slot)
        enter(start)
        visited.add(start)
        steps = []
        port = (ci, (slot + 2) % 4)
        while True:
            visited.add(port)
            label = _label_at(d, port)
            nxt = _partner(occ, label, port)
            visited.add(nxt)
            steps.append((label, nxt))
            if nxt == start:
                break
            enter(nxt)
            port = (nxt[0], (nxt[1] + 2) % 4)
        components.append(("closed", steps))
    return components, rank, under_in


def canonical(d: PlanarDiagram) -> PlanarDiagram:
    """Renumber edges 1, 2, ... in tracing order and orient every crossing.

    Strands starting at boundary ends are traced first, then closed
    components.  Crossings are reordered by discovery and each tuple is
    rotated so that slot 0 holds the incoming under-edge.  The operation is
    idempotent.
    """
    components, rank, under_in = _trace_all(d)
    relabel: dict[int, int] = {}
    for _, steps in components:
        for label, _ in steps:
            relabel.setdefault(label, len(relabel) + 1)
    crossings: list[Crossing] = [()] * len(d.crossings)  # type: ignore[list-item]
    for ci, c in enumerate(d.crossings):
        shift = under_in[ci]
        rotated = c[shift:] + c[:shift]
        crossings[rank[ci]] = tuple(relabel[e] for e in rotated)  # type: ignore[assignment]
    return PlanarDiagram(
        crossings=tuple(crossings),
        boundary_ends=tuple(relabel[e] for e in d.boundary_ends),
        free_loops=d.free_loops,
    )


def strands(d: PlanarDiagram) -> list[dict]:
    """Per-component traversal data.

    Each entry has ``closed`` (bool), ``passes`` (list of ``(crossing,
    over)`` in traversal order) and, for open strands, ``ends`` (the two
    boundary positions).
    """
    components, _, _ = _trace_all(d)
    out = []
    for kind, steps in components:
        passes = [(p[0], p[1] % 2 == 1) for _, p in steps if p[0] != BOUNDARY]
        entry = {"closed": kind == "closed", "passes": passes}
        if kind == "open":
            first = next(i for i, e in enumerate(d.boundary_ends) if e == steps[0][0])
            entry["ends"] = (first, steps[-1][1][1])
        out.append(entry)
    for _ in range(d.free_loops):
        out.append({"closed": True, "passes": []})
    return out


def component_count(d: PlanarDiagram) -> int:
    if not d.is_closed:
        raise DiagramError("component_count expects a closed diagram")
    return sum(1 for s in strands(d))


def is_knot(d: PlanarDiagram) -> bool:
    return component_count(d) == 1


def is_alternating(d: PlanarDiagram) -> bool:
    """True iff over and under passes strictly alternate along every strand."""
    for s in strands(d):
        seq = [over for _, over in s["passes"]]
        pairs = zip(seq, seq[1:] + seq[:1]) if s["closed"] else zip(seq, seq[1:])
        if s["closed"] and len(seq) == 1:
            return False
        if any(a == b for a, b in pairs):
            return False
    return True


# ---------------------------------------------------------------------------
# elementary operations


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Switch every crossing."""
    return canonical(PlanarDiagram(
        crossings=tuple((c[1], c[2], c[3], c[0]) for c in d.crossings),
        boundary_ends=d.boundary_ends,
        free_loops=d.free_loops,
    ))


def rotate90(d: PlanarDiagram) -> PlanarDiagram:
    """Rotate the picture a quarter turn clockwise: the NW end moves to NE."""
    b = d.boundary_ends
    if not b:
        return d
    return canonical(PlanarDiagram(d.crossings, b[-1:] + b[:-1], d.free_loops))


def _shifted(d: PlanarDiagram, offset: int) -> PlanarDiagram:
    return PlanarDiagram(
        crossings=tuple(tuple(e + offset for e in c) for c in d.crossings),
        boundary_ends=tuple(e + offset for e in d.boundary_ends),
        free_loops=d.free_loops,
    )


def _self_glue(d: PlanarDiagram, pairs: Iterable[tuple[int, int]],
               keep: Sequence[int]) -> PlanarDiagram:
    """Join boundary positions in ``pairs``; ``keep`` lists surviving ends in order."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    glued: set[int] = set()
    for i, j in pairs:
        if i in glued or j in glued or i == j:
            raise DiagramError("boundary positions glued more than once")
        glued.update((i, j))
        parent[find(d.boundary_ends[i])] = find(d.boundary_ends[j])
    if glued & set(keep):
        raise DiagramError("a kept boundary end is also glued")
    if len(glued) + len(keep) != len(d.boundary_ends):
        raise DiagramError("every boundary end must be glued or kept")

    crossings = tuple(tuple(find(e) for e in c) for c in d.crossings)
    boundary = tuple(find(d.boundary_ends[i]) for i in keep)
    alive = set(boundary)
    for c in crossings:
        alive.update(c)
    roots = {find(e) for e in d.labels()}
    loops = len(roots - alive)
    out = PlanarDiagram(crossings, boundary, d.free_loops + loops)
    validate(out)
    return canonical(out)


def disjoint_union(a: PlanarDiagram, b: PlanarDiagram) -> PlanarDiagram:
    """Juxtapose two diagrams; boundary lists are concatenated (a then b)."""
    offset = max(a.labels(), default=0)
    bb = _shifted(b, offset)
    return PlanarDiagram(a.crossings + bb.crossings,
                         a.boundary_ends + bb.boundary_ends,
                         a.free_loops + b.free_loops)


def _rotated(d: PlanarDiagram, r: int) -> tuple[PlanarDiagram, list[int]]:
    n = len(d.boundary_ends)
    order = [(r + k) % n for k in range(n)]
    return (PlanarDiagram(d.crossings, tuple(d.boundary_ends[p] for p in order),
                          d.free_loops), order)


def glue(a: PlanarDiagram, b: PlanarDiagram,
         pairs: Iterable[tuple[int, int]]) -> PlanarDiagram:
    """Glue boundary position ``i`` of ``a`` to position ``j`` of ``b``.

    The glued ends must form a contiguous run on each disk, met in opposite
    cyclic orders.  Surviving ends are a's unglued ends (in a's order,
    starting just after the glued run) followed by b's.
    """
    pairs = list(pairs)
    na, nb = len(a.boundary_ends), len(b.boundary_ends)
    ga = {i for i, _ in pairs}
    gb = {j for _, j in pairs}
    if len(ga) != len(pairs) or len(gb) != len(pairs):
        raise DiagramError("boundary positions glued more than once")
    k = len(pairs)
    for ra in range(na):
        ar, aorder = _rotated(a, ra)
        if set(aorder[na - k:]) != ga:
            continue
        for rb in range(nb):
            br, border = _rotated(b, rb)
            if set(border[:k]) != gb:
                continue
            pos_a = {p: i for i, p in enumerate(aorder)}
            pos_b = {p: na + i for i, p in enumerate(border)}
            glued = sorted((pos_a[i], pos_b[j]) for i, j in pairs)
            # nested: the last a-end meets the first b-end, and so on
            if any(gj != na + (na - 1 - gi) for gi, gj in glued):
                continue
            u = disjoint_union(ar, br)
            keep = list(range(na - k)) + list(range(na + k, na + nb))
            return _self_glue(u, glued, keep)
    raise DiagramError("glued ends are not contiguous runs in opposite orders")


def _require_two_string(*ts: PlanarDiagram) -> None:
    for t in ts:
        if len(t.boundary_ends) != 4:
            raise DiagramError(f"expected a 2-string tangle, got {t.n_strings} strings")


def tangle_sum(a: PlanarDiagram, b: PlanarDiagram) -> PlanarDiagram:
    """Horizontal sum: a's NE/SE ends are joined to b's NW/SW ends."""
    _require_two_string(a, b)
    out = glue(a, b, [(NE, NW), (SE, SW)])
    # surviving order: a.SW, a.NW, b.NE, b.SE
    sw, nw, ne, se = out.boundary_ends
    return canonical(PlanarDiagram(out.crossings, (nw, ne, se, sw), out.free_loops))


def numerator_closure(t: PlanarDiagram) -> PlanarDiagram:
    """Join NW to NE and SW to SE."""
    _require_two_string(t)
    return _self_glue(t, [(NW, NE), (SW, SE)], [])


def denominator_closure(t: PlanarDiagram) -> PlanarDiagram:
    """Join NW to SW and NE to SE."""
    _require_two_string(t)
    return _self_glue(t, [(NW, SW), (NE, SE)], [])


def self_glue(d: PlanarDiagram, pairs: Iterable[tuple[int, int]],
              keep: Sequence[int] = ()) -> PlanarDiagram:
    return _self_glue(d, list(pairs), list(keep))
