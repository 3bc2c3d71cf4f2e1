"""Reidemeister moves as local rewrites of closed planar diagrams.

These exist to drive invariance tests; there is no simplifier here.  Every
function returns a new canonical diagram or ``None`` when the requested
site does not admit the move.
"""

from __future__ import annotations

import random

from .diagram import (
    BOUNDARY,
    PlanarDiagram,
    _label_at,
    _occurrences,
    _partner,
    canonical,
    validate,
)

__all__ = [
    "r1_add",
    "r1_remove_sites",
    "r1_remove",
    "r2_add",
    "r2_remove_sites",
    "r2_remove",
    "r3_sites",
    "r3",
    "random_move",
    "random_sequence",
]


def _fresh(d: PlanarDiagram) -> int:
    return max(d.labels(), default=0) + 1


def _replace_at(d: PlanarDiagram, edits: dict[tuple[int, int], int],
                extra: tuple = ()) -> PlanarDiagram:
    crossings = [list(c) for c in d.crossings]
    boundary = list(d.boundary_ends)
    for (ci, s), label in edits.items():
        if ci == BOUNDARY:
            boundary[s] = label
        else:
            crossings[ci][s] = label
    out = PlanarDiagram(tuple(tuple(c) for c in crossings) + tuple(extra),
                        tuple(boundary), d.free_loops)
    validate(out)
    return canonical(out)


def _dissolve(d: PlanarDiagram, indices: set[int]) -> PlanarDiagram:
    """Delete crossings, letting both strands run straight through each."""
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    for ci in indices:
        a, b, c, e = d.crossings[ci]
        parent[find(a)] = find(c)
        parent[find(b)] = find(e)
    crossings = tuple(tuple(find(x) for x in c)
                      for i, c in enumerate(d.crossings) if i not in indices)
    boundary = tuple(find(x) for x in d.boundary_ends)
    alive = {x for c in crossings for x in c} | set(boundary)
    lost = {find(x) for i in indices for x in d.crossings[i]} - alive
    out = PlanarDiagram(crossings, boundary, d.free_loops + len(lost))
    validate(out)
    return canonical(out)


# ---------------------------------------------------------------------------
# R1


def r1_add(d: PlanarDiagram, edge: int, variant: int) -> PlanarDiagram:
    """Put a kink on ``edge``; ``variant`` in 0..3 picks side and sign."""
    occ = _occurrences(d)
    p, q = occ[edge]
    e2, loop = _fresh(d), _fresh(d) + 1
    e1 = edge
    # strand arrives on e1, leaves on e2, loop joins adjacent slots
    tuples = [
        (e1, loop, loop, e2),
        (e1, e2, loop, loop),
        (e2, e1, loop, loop),
        (loop, e1, e2, loop),
    ]
    return _replace_at(d, {q: e2}, (tuples[variant % 4],))


def r1_remove_sites(d: PlanarDiagram) -> list[int]:
    sites = []
    for ci, c in enumerate(d.crossings):
        if any(c[s] == c[(s + 1) % 4] for s in range(4)):
            sites.append(ci)
    return sites


def r1_remove(d: PlanarDiagram, ci: int) -> PlanarDiagram | None:
    if ci not in r1_remove_sites(d):
        return None
    return _dissolve(d, {ci})


# ---------------------------------------------------------------------------
# R2


def _face_walks(d: PlanarDiagram):
    """Faces as lists of directed edge passes ``(leave_port, arrive_port)``."""
    occ = _occurrences(d)
    seen = set()
    out = []
    for v in range(len(d.crossings)):
        for k in range(4):
            if (v, k) in seen:
                continue
            walk = []
            corner = (v, k)
            while corner not in seen:
                seen.add(corner)
                cv, ck = corner
                leave = (cv, (ck + 1) % 4)
                arrive = _partner(occ, _label_at(d, leave), leave)
                walk.append((leave, arrive))
                corner = arrive
            out.append(walk)
    return out


def r2_add(d: PlanarDiagram, face: int, i: int, j: int, over: bool) -> PlanarDiagram | None:
    """Push the ``i``-th edge of a face across its ``j``-th edge."""
    if d.boundary_ends:
        return None
    walks = _face_walks(d)
    walk = walks[face % len(walks)]
    if len(walk) < 2:
        return None
    (pe, qe), (pf, qf) = walk[i % len(walk)], walk[j % len(walk)]
    e, f = _label_at(d, pe), _label_at(d, pf)
    if e == f:
        return None
    base = _fresh(d)
    e2, e_mid, f2, f_mid = base, base + 1, base + 2, base + 3
    e1, f1 = e, f
    if over:
        x1 = (f2, e_mid, f_mid, e1)
        x2 = (f_mid, e_mid, f1, e2)
    else:
        x1 = (e1, f2, e_mid, f_mid)
        x2 = (e2, f_mid, e_mid, f1)
    return _replace_at(d, {qe: e2, qf: f2}, (x1, x2))


def r2_remove_sites(d: PlanarDiagram) -> list[tuple[int, int]]:
    """Pairs of crossings bounding a bigon where one strand is over at both."""
    sites = []
    for walk in _face_walks(d):
        if len(walk) != 2:
            continue
        (l1, a1), (l2, a2) = walk
        x, y = l1[0], a1[0]
        if x == y or {l2[0], a2[0]} != {x, y}:
            continue
        # the bigon edges leave x at slots of opposite parity iff one is over
        e_slot_x = l1[1]
        f_slot_x = a2[1]
        e_slot_y = a1[1]
        f_slot_y = l2[1]
        over_e = (e_slot_x % 2, e_slot_y % 2)
        over_f = (f_slot_x % 2, f_slot_y % 2)
        if over_e[0] == over_e[1] and over_f[0] == over_f[1] and over_e != over_f:
            sites.append((min(x, y), max(x, y)))
    return sorted(set(sites))


def r2_remove(d: PlanarDiagram, site: tuple[int, int]) -> PlanarDiagram | None:
    if site not in r2_remove_sites(d):
        return None
    return _dissolve(d, set(site))


# ---------------------------------------------------------------------------
# R3


def r3_sites(d: PlanarDiagram) -> list[tuple]:
    """Triangular faces where one strand passes over (or under) both others."""
    sites = []
    for walk in _face_walks(d):
        if len(walk) != 3:
            continue
        verts = [leave[0] for leave, _ in walk]
        if len(set(verts)) != 3:
            continue
        labels = [_label_at(d, leave) for leave, _ in walk]
        if len(set(labels)) != 3:
            continue
        for t in range(3):
            leave, arrive = walk[t]
            if leave[1] % 2 == arrive[1] % 2:
                sites.append((tuple(walk), t))
    return sites


def r3(d: PlanarDiagram, site: tuple) -> PlanarDiagram | None:
    """Slide the strand through triangle edge ``t`` across the opposite crossing."""
    walk, t = site
    (x_leave, z_arrive) = walk[t]
    # a_mid runs X -> Z; the next face edge runs Z -> Y, then Y -> X
    (z_leave, y_arrive) = walk[(t + 1) % 3]
    (y_leave, x_arrive) = walk[(t + 2) % 3]
    X, Z, Y = x_leave[0], z_arrive[0], y_arrive[0]
    a_x_slot, a_z_slot = (x_leave[1] + 2) % 4, (z_arrive[1] + 2) % 4
    c_mid_z, c_mid_y = z_leave[1], y_arrive[1]
    c_z_slot, c_y_slot = (c_mid_z + 2) % 4, (c_mid_y + 2) % 4
    b_mid_y, b_mid_x = y_leave[1], x_arrive[1]
    b_y_slot, b_x_slot = (b_mid_y + 2) % 4, (b_mid_x + 2) % 4
    a_mid_x, a_mid_z = x_leave[1], z_arrive[1]

    def at(ci, s):
        return d.crossings[ci][s]

    outer = [at(X, a_x_slot), at(Z, a_z_slot), at(X, b_x_slot),
             at(Y, b_y_slot), at(Y, c_y_slot), at(Z, c_z_slot)]
    if len(set(outer)) != 6:
        return None
    base = _fresh(d)
    a_new, b_new, c_new = base, base + 1, base + 2
    edits = {
        (X, a_x_slot): a_new, (X, a_mid_x): at(Z, a_z_slot),
        (X, b_x_slot): b_new, (X, b_mid_x): at(Y, b_y_slot),
        (Y, b_mid_y): at(X, b_x_slot), (Y, b_y_slot): b_new,
        (Y, c_y_slot): c_new, (Y, c_mid_y): at(Z, c_z_slot),
        (Z, a_mid_z): at(X, a_x_slot), (Z, a_z_slot): a_new,
        (Z, c_mid_z): at(Y, c_y_slot), (Z, c_z_slot): c_new,
    }
    return _replace_at(d, edits)


# ---------------------------------------------------------------------------
# random sequences


def random_move(d: PlanarDiagram, rng: random.Random, max_crossings: int = 14) -> PlanarDiagram:
    """Apply one applicable move chosen by ``rng``; never returns ``d`` unchanged
    unless no move at all applies."""
    grow = len(d.crossings) + 2 <= max_crossings
    kinds = ["r3", "r1-", "r2-"] + (["r1+", "r2+"] if grow else [])
    rng.shuffle(kinds)
    for kind in kinds:
        out = None
        if kind == "r1+":
            labels = sorted(d.labels())
            if labels:
                out = r1_add(d, rng.choice(labels), rng.randrange(4))
        elif kind == "r2+":
            walks = _face_walks(d)
            if walks:
                f = rng.randrange(len(walks))
                n = len(walks[f])
                out = r2_add(d, f, rng.randrange(n), rng.randrange(n), rng.random() < 0.5)
        elif kind == "r1-":
            sites = r1_remove_sites(d)
            if sites:
                out = r1_remove(d, rng.choice(sites))
        elif kind == "r2-":
            sites = r2_remove_sites(d)
            if sites:
                out = r2_remove(d, rng.choice(sites))
        elif kind == "r3":
            sites = r3_sites(d)
            if sites:
                out = r3(d, rng.choice(sites))
        if out is not None:
            return out
    return d


def random_sequence(d: PlanarDiagram, length: int, seed: int,
                    max_crossings: int = 14) -> list[PlanarDiagram]:
    rng = random.Random(seed)
    out = [d]
    for _ in range(length):
        out.append(random_move(out[-1], rng, max_crossings))
    return out
