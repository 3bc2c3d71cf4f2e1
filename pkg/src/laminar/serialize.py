"""JSON documents for diagrams, polynomials, surfaces and certificates.

Every document carries a ``schema`` tag with a version number.  Output is
produced with a fixed key order so equal objects serialise to equal bytes.
"""

from __future__ import annotations

import json

from .branched import BranchedSurface
from .diagram import DiagramError, PlanarDiagram
from .polynomial import LaurentPolynomial

__all__ = [
    "DIAGRAM_SCHEMA",
    "POLYNOMIAL_SCHEMA",
    "SURFACE_SCHEMA",
    "CERTIFICATE_SCHEMA",
    "diagram_document",
    "diagram_from_document",
    "polynomial_document",
    "polynomial_from_document",
    "surface_document",
    "surface_from_document",
    "dumps",
]

DIAGRAM_SCHEMA = "laminar.diagram/1"
POLYNOMIAL_SCHEMA = "laminar.polynomial/1"
SURFACE_SCHEMA = "laminar.branched-surface/1"
CERTIFICATE_SCHEMA = "laminar.certificate/1"


def diagram_document(d: PlanarDiagram) -> dict:
    doc = {"schema": DIAGRAM_SCHEMA}
    doc.update(d.to_dict())
    return doc


def diagram_from_document(doc: dict) -> PlanarDiagram:
    if doc.get("schema", DIAGRAM_SCHEMA) != DIAGRAM_SCHEMA:
        raise DiagramError(f"unsupported diagram schema {doc.get('schema')!r}")
    try:
        return PlanarDiagram.from_dict(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramError(f"malformed diagram document: {exc}") from exc


def polynomial_document(p: LaurentPolynomial, variable: str) -> dict:
    """Terms as sorted ``[doubled_exponent, coefficient]`` pairs."""
    return {"schema": POLYNOMIAL_SCHEMA, "variable": variable,
            "terms": [list(t) for t in p.pairs()], "text": p.format(variable)}


def polynomial_from_document(doc: dict) -> LaurentPolynomial:
    if doc.get("schema") != POLYNOMIAL_SCHEMA:
        raise ValueError(f"unsupported polynomial schema {doc.get('schema')!r}")
    return LaurentPolynomial((int(e), int(c)) for e, c in doc["terms"])


def surface_document(b: BranchedSurface) -> dict:
    doc = b.to_dict()
    doc.pop("schema_version", None)
    return {"schema": SURFACE_SCHEMA, **doc}


def surface_from_document(doc: dict) -> BranchedSurface:
    if doc.get("schema", SURFACE_SCHEMA) != SURFACE_SCHEMA:
        raise ValueError(f"unsupported surface schema {doc.get('schema')!r}")
    return BranchedSurface.from_dict(doc)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
