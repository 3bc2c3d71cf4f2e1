"""Deterministic SVG pictures of planar diagrams.

The drawing follows the diagram's own rotation system: every edge is
subdivided twice, the resulting plane graph is laid out on an integer grid
by networkx's straight-line planar drawing, and under-strands are drawn
with a gap at each crossing.  Tangle boundary ends are joined by dashed
lines to a hub vertex standing for the outside of the tangle disk.
"""

from __future__ import annotations

import math

import networkx as nx
from networkx.algorithms.planar_drawing import combinatorial_embedding_to_pos

from .diagram import BOUNDARY, DiagramError, PlanarDiagram, _occurrences, validate

__all__ = ["RenderError", "render_svg"]

_SCALE = 40.0
_MARGIN = 30.0
_GAP = 0.35


class RenderError(DiagramError):
    """Layout failed; the structured-text form is always available instead."""


def _node_for(port) -> tuple:
    ci, s = port
    return ("b", s) if ci == BOUNDARY else ("x", ci)


def _embedding(d: PlanarDiagram) -> nx.PlanarEmbedding:
    occ = _occurrences(d)
    mid: dict[tuple[int, int], tuple] = {}
    for e in sorted(occ):
        p, q = occ[e]
        mid[p] = ("m", e, 0)
        mid[q] = ("m", e, 1)
    rotation: dict[tuple, list[tuple]] = {}
    for ci in range(len(d.crossings)):
        rotation[("x", ci)] = [mid[(ci, s)] for s in range(4)]
    hub = ("hub",)
    if d.boundary_ends:
        rotation[hub] = [("b", i) for i in range(len(d.boundary_ends))]
        for i in range(len(d.boundary_ends)):
            rotation[("b", i)] = [hub, mid[(BOUNDARY, i)]]
    for e in sorted(occ):
        p, q = occ[e]
        a, b = ("m", e, 0), ("m", e, 1)
        rotation[a] = [_node_for(p), b]
        rotation[b] = [a, _node_for(q)]
    emb = nx.PlanarEmbedding()
    for v in sorted(rotation, key=repr):
        nbrs = rotation[v]
        emb.add_half_edge_first(v, nbrs[0])
        for prev, w in zip(nbrs, nbrs[1:]):
            emb.add_half_edge_ccw(v, w, prev)
    emb.check_structure()
    return emb


def _layout(emb: nx.PlanarEmbedding) -> dict:
    pos: dict = {}
    x_offset = 0.0
    comps = sorted((sorted(c, key=repr) for c in nx.connected_components(emb.to_undirected())),
                   key=lambda c: repr(c[0]))
    for comp in comps:
        # networkx walks sets of nodes; integer nodes hash the same in every
        # process, tuples holding strings do not
        index = {v: i for i, v in enumerate(comp)}
        sub = nx.PlanarEmbedding()
        for v in comp:
            nbrs = [index[w] for w in emb.neighbors_cw_order(v)]
            sub.add_half_edge_first(index[v], nbrs[0])
            for prev, w in zip(nbrs, nbrs[1:]):
                sub.add_half_edge_cw(index[v], w, prev)
        if len(comp) < 3:
            local = {v: (float(i), 0.0) for i, v in enumerate(comp)}
        else:
            local = {comp[i]: (float(x), float(y)) for i, (x, y) in
                     combinatorial_embedding_to_pos(sub).items()}
        width = max(x for x, _ in local.values()) - min(x for x, _ in local.values())
        left = min(x for x, _ in local.values())
        for v, (x, y) in local.items():
            pos[v] = (x - left + x_offset, y)
        x_offset += width + 2.0
    return pos


def _orientation_matches(d: PlanarDiagram, pos: dict) -> bool:
    """True if slot order around the first crossing runs counterclockwise."""
    if not d.crossings:
        return True
    cx, cy = pos[("x", 0)]
    occ = _occurrences(d)
    angles = []
    for s in range(4):
        e = d.crossings[0][s]
        p, _ = occ[e]
        node = ("m", e, 0) if p == (0, s) else ("m", e, 1)
        x, y = pos[node]
        angles.append(math.atan2(y - cy, x - cx))
    turns = sum((angles[(k + 1) % 4] - angles[k]) % (2 * math.pi) for k in range(4))
    return abs(turns - 2 * math.pi) < 1e-6


def render_svg(d: PlanarDiagram) -> str:
    """An SVG document for ``d``; identical input gives identical bytes."""
    validate(d)
    if not d.labels():
        pos: dict = {}
    else:
        try:
            pos = _layout(_embedding(d))
        except (nx.NetworkXException, ValueError, KeyError, IndexError) as exc:
            raise RenderError(f"layout failed: {exc}") from exc
        if not _orientation_matches(d, pos):
            pos = {v: (-x, y) for v, (x, y) in pos.items()}
    xs = [x for x, _ in pos.values()] or [0.0]
    ys = [y for _, y in pos.values()] or [0.0]
    min_x, min_y = min(xs), min(ys)
    loops_x = max(xs) - min_x + 2.0 if pos else 0.0

    def pt(v):
        x, y = pos[v]
        # SVG y runs downwards; flip so the picture keeps its orientation
        return (_MARGIN + (x - min_x) * _SCALE, _MARGIN + (max(ys) - y) * _SCALE)

    lines: list[str] = []
    occ = _occurrences(d)
    for e in sorted(occ):
        p, q = occ[e]
        a, b = ("m", e, 0), ("m", e, 1)
        lines.append(_line(pt(a), pt(b)))
        for port, m in ((p, a), (q, b)):
            end = _node_for(port)
            start = pt(end)
            stop = pt(m)
            if port[0] != BOUNDARY and port[1] % 2 == 0:
                start = (start[0] + _GAP * (stop[0] - start[0]),
                         start[1] + _GAP * (stop[1] - start[1]))
            lines.append(_line(start, stop))
    dashed = []
    if d.boundary_ends:
        for i in range(len(d.boundary_ends)):
            dashed.append(_line(pt(("hub",)), pt(("b", i)), dashed=True))
    circles = []
    for k in range(d.free_loops):
        cx = _MARGIN + (loops_x + 1.0 + 2.5 * k) * _SCALE
        circles.append(f'<circle cx="{cx:.2f}" cy="{_MARGIN + _SCALE:.2f}" r="{_SCALE:.2f}" '
                       f'fill="none" stroke="black" stroke-width="3"/>')
    width = _MARGIN * 2 + (loops_x + 2.5 * d.free_loops + 1.0) * _SCALE
    height = _MARGIN * 2 + max(max(ys) - min_y, 2.0) * _SCALE
    body = "\n".join(dashed + lines + circles)
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
            f'viewBox="0 0 {width:.0f} {height:.0f}">\n'
            f'<rect width="100%" height="100%" fill="white"/>\n{body}\n</svg>\n')


def _line(a, b, dashed: bool = False) -> str:
    style = ('stroke="gray" stroke-width="1" stroke-dasharray="4 3"' if dashed
             else 'stroke="black" stroke-width="3" stroke-linecap="round"')
    return (f'<line x1="{a[0]:.2f}" y1="{a[1]:.2f}" x2="{b[0]:.2f}" y2="{b[1]:.2f}" '
            f'{style}/>')
