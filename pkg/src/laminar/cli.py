"""Command-line front end.

Every subcommand writes one JSON document (or an SVG picture) to standard
output.  Exit status is 0 on success, 1 on domain errors such as malformed
expressions or patterns, and 2 on usage errors.  A rejected certificate is
a successful run.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .branched import (
    BranchedSurfaceError,
    admits_contact_surface,
    branch_equations,
    carries_closed_surface,
    is_transversely_orientable,
    solve_nonnegative,
    validate_surface,
)
from .diagram import DiagramError, component_count, is_alternating
from .family import (
    FAMILY_FIXTURES,
    FIXED_N,
    VARIANTS,
    ConnectionPattern,
    FamilySpec,
    Insertion,
    PatternError,
    build_family_surface,
    certify,
    certify_open_tangle,
    family_fixture,
    family_tangle_template,
    find_completion_to,
    named_pattern,
    template_strands,
    torus_witness,
)
from .fixtures import DIAGRAM_FIXTURES, diagram_fixture
from .invariants import (
    BudgetExceeded,
    OracleDisagreement,
    determinant,
    jones,
    kauffman_bracket,
    torus2k_reference,
    writhe,
)
from .notation import EvaluationError, ParseError, evaluate, parse_tangle, to_string
from .rational import RationalTangle
from .render import RenderError, render_svg
from .serialize import (
    CERTIFICATE_SCHEMA,
    diagram_document,
    dumps,
    polynomial_document,
    surface_document,
)

__all__ = ["build_parser", "run", "main"]

DOMAIN_ERRORS = (ParseError, EvaluationError, DiagramError, PatternError, BudgetExceeded,
                 BranchedSurfaceError, RenderError, LookupError, ValueError, OSError)

OPEN_FIXTURES = ("wu_fig16",)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laminar",
        description="Tangles, branched surfaces and certificates for the B_n family.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        return p

    p = add("parse", "parse a tangle expression and print its normal form")
    p.add_argument("expression")

    p = add("eval", "evaluate a tangle expression to a planar diagram")
    p.add_argument("expression")
    p.add_argument("--format", choices=("text", "svg"), default="text")

    p = add("invariants", "bracket, Jones polynomial and determinant of a closed expression")
    p.add_argument("expression")

    p = add("family", "branched surface B_n, its equations and its tangle template")
    p.add_argument("--n", type=int, default=None,
                   help="family index (default 1, or the fixed size of the variant)")
    p.add_argument("--variant", choices=VARIANTS, default="standard")
    p.add_argument("--format", choices=("text", "svg"), default="text")

    p = add("certify", "certify a connection pattern, or audit an open tangle fixture")
    p.add_argument("fixture", nargs="?", choices=FAMILY_FIXTURES + OPEN_FIXTURES,
                   help="certify a fixture instead of a standard family member")
    p.add_argument("--n", type=int, default=None,
                   help="family index (default 1, or the fixed size of the variant)")
    p.add_argument("--variant", choices=VARIANTS, default="standard")
    p.add_argument("--pattern", default="opposite",
                   help="'opposite', 'same', or a JSON pattern file")

    p = add("witness", "rational tangle completing p/q to a (2,k) torus knot")
    p.add_argument("fraction", help="reduced fraction p/q; put negative ones after '--'")

    p = add("fixture", "print a named fixture")
    p.add_argument("name", choices=sorted(DIAGRAM_FIXTURES + FAMILY_FIXTURES))
    p.add_argument("--budget", type=int, default=4,
                   help="crossing budget for the found6_1 completion search")
    p.add_argument("--format", choices=("text", "svg"), default="text")

    p = add("render", "draw an expression as SVG")
    p.add_argument("expression")
    p.add_argument("--format", choices=("text", "svg"), default="svg")
    return parser


# ---------------------------------------------------------------------------
# subcommands


def _tree_document(node) -> dict:
    from . import notation as nt

    if isinstance(node, nt.Rational):
        return {"node": "rational", "value": str(node.tangle)}
    if isinstance(node, nt.Fixture):
        return {"node": "fixture", "name": node.name}
    if isinstance(node, nt.Mirror):
        return {"node": "mirror", "child": _tree_document(node.child)}
    if isinstance(node, nt.Rotate):
        return {"node": "rotate", "child": _tree_document(node.child)}
    if isinstance(node, nt.Closure):
        return {"node": "numerator" if node.kind == "N" else "denominator",
                "child": _tree_document(node.child)}
    return {"node": "sum", "terms": [_tree_document(t) for t in node.terms]}


def _cmd_parse(args) -> str:
    tree = parse_tangle(args.expression)
    return dumps({"schema": "laminar.expression/1", "expression": to_string(tree),
                  "tree": _tree_document(tree)})


def _cmd_eval(args) -> str:
    tree = parse_tangle(args.expression)
    d = evaluate(tree)
    if args.format == "svg":
        return render_svg(d)
    return dumps({"expression": to_string(tree), "diagram": diagram_document(d)})


def _cmd_invariants(args) -> str:
    tree = parse_tangle(args.expression)
    d = evaluate(tree)
    if not d.is_closed:
        raise DiagramError("invariants need a closed diagram; wrap the expression in N(...) "
                           "or D(...)")
    return dumps({
        "expression": to_string(tree),
        "crossings": len(d.crossings),
        "components": component_count(d),
        "alternating": is_alternating(d),
        "writhe": writhe(d),
        "bracket": polynomial_document(kauffman_bracket(d), "A"),
        "jones": polynomial_document(jones(d), "t"),
        "determinant": determinant(d),
    })


def _surface_summary(spec: FamilySpec) -> dict:
    b = build_family_surface(spec)
    report = validate_surface(b)
    closed = solve_nonnegative(branch_equations(b))
    contact = {c.name: solve_nonnegative(branch_equations(b, c.name)).status
               for c in b.branch_curves}
    return {
        "surface": surface_document(b),
        "validation": {"branch_curves": report.branch_curve_count,
                       "no_triple_points": report.no_triple_points,
                       "connected": report.connected,
                       "errors": list(report.errors)},
        "equations": [str(e) for e in branch_equations(b).equations],
        "closed_surface_system": closed.status,
        "contact_systems": contact,
        "carries_closed_surface": carries_closed_surface(b),
        "admits_contact_surface": admits_contact_surface(b),
        "transversely_orientable": is_transversely_orientable(b),
    }


def _template_summary(spec: FamilySpec) -> dict:
    d, labels = family_tangle_template(spec)
    return {"template": diagram_document(d), "sides": list(labels),
            "template_strands": [list(s) for s in template_strands(spec)],
            "alternating": is_alternating(d)}


def _spec(args) -> FamilySpec:
    n = args.n if args.n is not None else FIXED_N.get(args.variant, 1)
    return FamilySpec(n, args.variant)


def _cmd_family(args) -> str:
    spec = _spec(args)
    if args.format == "svg":
        return render_svg(family_tangle_template(spec)[0])
    return dumps({"spec": spec.to_dict(), **_surface_summary(spec), **_template_summary(spec)})


def _load_pattern(spec: FamilySpec, value: str) -> ConnectionPattern:
    if value in ("opposite", "same"):
        return named_pattern(spec, value)
    with open(value, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise PatternError(f"{value}: not valid JSON ({exc})") from exc
    try:
        matching = tuple(tuple(int(x) for x in pair) for pair in data.get("matching", []))
        insertion = None
        if data.get("insertion") is not None:
            ins = data["insertion"]
            expr = ins["expression"]
            tangle = evaluate(parse_tangle(expr))
            insertion = Insertion(tuple(int(x) for x in ins["ends"]), tangle, expr)
    except (KeyError, TypeError, AttributeError) as exc:
        raise PatternError(f"{value}: malformed pattern document ({exc})") from exc
    if any(len(p) != 2 for p in matching):
        raise PatternError(f"{value}: every matching entry must be a pair")
    if insertion is not None and len(insertion.ends) != 4:
        raise PatternError(f"{value}: an insertion needs exactly four ends")
    return ConnectionPattern(matching, insertion)


def _cmd_certify(args) -> str:
    if args.fixture in OPEN_FIXTURES:
        cert = certify_open_tangle(args.fixture, diagram_fixture(args.fixture))
    else:
        spec = (family_fixture(args.fixture).spec if args.fixture
                else _spec(args))
        cert = certify(spec, _load_pattern(spec, args.pattern))
    return dumps({"schema": CERTIFICATE_SCHEMA, **cert.to_dict()})


def _cmd_witness(args) -> str:
    try:
        value = Fraction(args.fraction)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a fraction: {args.fraction!r}") from exc
    t, closed, k = torus_witness(value.numerator, value.denominator)
    got, ref = jones(closed), torus2k_reference(k)
    return dumps({
        "input": str(RationalTangle(value.numerator, value.denominator)),
        "tangle": str(t),
        "k": k,
        "closure_crossings": len(closed.crossings),
        "jones": polynomial_document(got, "t"),
        "reference_jones": polynomial_document(ref, "t"),
        "verified": got == ref,
    })


def _cmd_fixture(args) -> str:
    if args.name in FAMILY_FIXTURES:
        fx = family_fixture(args.name)
        if args.format == "svg":
            return render_svg(fx.template)
        return dumps({"name": fx.name, "spec": fx.spec.to_dict(),
                      **_surface_summary(fx.spec), **_template_summary(fx.spec)})
    if args.name == "found6_1":
        found = find_completion_to(FamilySpec(1), diagram_fixture("rolfsen_6_1"), args.budget)
        if found is None:
            raise LookupError(f"no completion of T0 to the 6_1 fixture within "
                              f"{args.budget} crossings")
        d = evaluate(parse_tangle(str(found)))
        extra = {"tangle": str(found), "budget": args.budget}
    else:
        d = diagram_fixture(args.name)
        extra = {}
    if args.format == "svg":
        return render_svg(d)
    return dumps({"name": args.name, **extra, "diagram": diagram_document(d)})


def _cmd_render(args) -> str:
    d = evaluate(parse_tangle(args.expression))
    if args.format == "text":
        return dumps(diagram_document(d))
    return render_svg(d)


_COMMANDS = {
    "parse": _cmd_parse,
    "eval": _cmd_eval,
    "invariants": _cmd_invariants,
    "family": _cmd_family,
    "certify": _cmd_certify,
    "witness": _cmd_witness,
    "fixture": _cmd_fixture,
    "render": _cmd_render,
}


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = _COMMANDS[args.command](args)
    except (OracleDisagreement, *DOMAIN_ERRORS) as exc:
        print(f"laminar {args.command}: error: {exc}", file=stderr)
        return 1
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"laminar {args.command}: error: {exc}", file=stderr)
            return 1
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
