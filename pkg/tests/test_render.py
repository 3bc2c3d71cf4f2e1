import xml.etree.ElementTree as ET

from laminar.diagram import PlanarDiagram
from laminar.family import FamilySpec, family_tangle_template
from laminar.fixtures import diagram_fixture
from laminar.render import render_svg

SVG = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg)


def test_output_is_deterministic():
    for name in ("trefoil", "t0", "borromean"):
        d = diagram_fixture(name)
        assert render_svg(d) == render_svg(d)


def test_unknot_is_a_circle():
    root = parse(render_svg(diagram_fixture("unknot")))
    assert root.tag == SVG + "svg"
    assert len(root.findall(SVG + "circle")) == 1


def test_unlink_draws_each_loop():
    root = parse(render_svg(PlanarDiagram(free_loops=3)))
    assert len(root.findall(SVG + "circle")) == 3


def test_tangle_boundary_is_dashed():
    svg = render_svg(diagram_fixture("t0"))
    root = parse(svg)
    dashed = [e for e in root.iter(SVG + "line") if e.get("stroke-dasharray")]
    assert len(dashed) == 4


def test_template_n2():
    d, _ = family_tangle_template(FamilySpec(2))
    root = parse(render_svg(d))
    lines = root.findall(SVG + "line")
    # each edge is drawn as three segments, plus one dashed spoke per end
    assert len(lines) == 3 * len(d.labels()) + len(d.boundary_ends)
