"""Parser and evaluator for tangle expressions.

Grammar::

    expr := term ('+' term)*
    term := '-'? atom
    atom := INT | INT '/' INT | 'rot(' expr ')' | 'N(' expr ')' | 'D(' expr ')' | '@' NAME

``-`` mirrors the following atom, ``+`` is the horizontal tangle sum and
``1/0`` is the infinity tangle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .diagram import (
    DiagramError,
    PlanarDiagram,
    denominator_closure,
    mirror,
    numerator_closure,
    rotate90,
    tangle_sum,
)
from .rational import RationalTangle, rational_to_diagram

__all__ = [
    "ParseError",
    "EvaluationError",
    "Rational",
    "Fixture",
    "Mirror",
    "Rotate",
    "Closure",
    "Sum",
    "parse_tangle",
    "evaluate",
    "to_string",
]


class ParseError(ValueError):
    def __init__(self, text: str, position: int, expected: list[str]):
        self.text = text
        self.position = position
        self.expected = expected
        found = repr(text[position]) if position < len(text) else "end of input"
        super().__init__(f"at position {position}: expected {' or '.join(expected)}, "
                         f"found {found}")


class EvaluationError(ValueError):
    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"at position {position}: {message}")


@dataclass(frozen=True)
class Rational:
    tangle: RationalTangle
    pos: int = 0


@dataclass(frozen=True)
class Fixture:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Mirror:
    child: object
    pos: int = 0


@dataclass(frozen=True)
class Rotate:
    child: object
    pos: int = 0


@dataclass(frozen=True)
class Closure:
    kind: str  # "N" or "D"
    child: object
    pos: int = 0


@dataclass(frozen=True)
class Sum:
    terms: tuple
    pos: int = 0


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<kw>rot\(|N\(|D\()|(?P<name>@[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<op>[+\-/)]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                start = pos + len(text[pos:]) - len(text[pos:].lstrip())
                if text[start] == "@":
                    raise ParseError(text, start + 1, ["a fixture name"])
                raise ParseError(text, start, ["an integer", "'rot('", "'N('", "'D('",
                                               "'@name'", "'+'", "'-'", "'/'", "')'"])
            kind = m.lastgroup
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, expected: list[str]):
        raise ParseError(self.text, self.peek()[2], expected)

    def expr(self):
        first = self.term()
        terms = [first]
        while self.peek()[:2] == ("op", "+"):
            self.take()
            terms.append(self.term())
        return first if len(terms) == 1 else Sum(tuple(terms), _pos(first))

    def term(self):
        kind, value, pos = self.peek()
        if (kind, value) == ("op", "-"):
            self.take()
            return Mirror(self.atom(), pos)
        return self.atom()

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            p = int(value)
            if self.peek()[:2] == ("op", "/"):
                self.take()
                kind2, value2, pos2 = self.peek()
                if kind2 != "int":
                    self.fail(["an integer denominator"])
                self.take()
                q = int(value2)
                if q == 0:
                    if p != 1:
                        raise ParseError(self.text, pos2, ["a nonzero denominator (only 1/0 "
                                                           "denotes the infinity tangle)"])
                    return Rational(RationalTangle(1, 0), pos)
                return Rational(RationalTangle.from_fraction(Fraction(p, q)), pos)
            return Rational(RationalTangle(p, 1), pos)
        if kind == "kw":
            self.take()
            child = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail(["'+'", "')'"])
            self.take()
            if value == "rot(":
                return Rotate(child, pos)
            return Closure(value[0], child, pos)
        if kind == "name":
            self.take()
            return Fixture(value[1:], pos)
        self.fail(["an integer", "'rot('", "'N('", "'D('", "'@name'"])


def _pos(node) -> int:
    return getattr(node, "pos", 0)


def parse_tangle(text: str):
    """Parse ``text`` into an expression tree; raises :class:`ParseError`."""
    parser = _Parser(text)
    tree = parser.expr()
    if parser.peek()[0] != "end":
        parser.fail(["'+'", "end of input"])
    return tree


def evaluate(node, fixtures=None) -> PlanarDiagram:
    """Build the diagram of an expression tree.

    ``fixtures`` maps names to diagrams; by default the package fixtures
    are used.
    """
    if fixtures is None:
        from .fixtures import diagram_fixture as fixtures_lookup
    else:
        def fixtures_lookup(name):
            return fixtures[name]
    return _eval(node, fixtures_lookup)


def _eval(node, lookup) -> PlanarDiagram:
    try:
        if isinstance(node, Rational):
            return rational_to_diagram(node.tangle)
        if isinstance(node, Fixture):
            try:
                return lookup(node.name)
            except (KeyError, LookupError) as exc:
                raise EvaluationError(node.pos, f"unknown fixture @{node.name}") from exc
        if isinstance(node, Mirror):
            return mirror(_eval(node.child, lookup))
        if isinstance(node, Rotate):
            return rotate90(_eval(node.child, lookup))
        if isinstance(node, Closure):
            inner = _eval(node.child, lookup)
            return numerator_closure(inner) if node.kind == "N" else denominator_closure(inner)
        if isinstance(node, Sum):
            acc = _eval(node.terms[0], lookup)
            for t in node.terms[1:]:
                acc = tangle_sum(acc, _eval(t, lookup))
            return acc
    except DiagramError as exc:
        raise EvaluationError(_pos(node), str(exc)) from exc
    raise TypeError(f"not an expression node: {node!r}")


def to_string(node) -> str:
    """Render a tree back into the grammar; parsing the result gives the same tree
    up to positions."""
    if isinstance(node, Rational):
        return str(node.tangle) if node.tangle.p >= 0 else f"-{str(node.tangle)[1:]}"
    if isinstance(node, Fixture):
        return f"@{node.name}"
    if isinstance(node, Mirror):
        return f"-{to_string(node.child)}"
    if isinstance(node, Rotate):
        return f"rot({to_string(node.child)})"
    if isinstance(node, Closure):
        return f"{node.kind}({to_string(node.child)})"
    if isinstance(node, Sum):
        return " + ".join(to_string(t) for t in node.terms)
    raise TypeError(f"not an expression node: {node!r}")
