"""Rational tangles and their diagrams.

A continued fraction ``[a_1, ..., a_k]`` denotes
``a_k + 1/(a_{k-1} + 1/(... + 1/a_1))``.  The diagram is built the same
way: start from the integer tangle ``[a_1]`` and repeatedly invert
(rotate, then mirror) and add ``a_i`` horizontal twists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .diagram import (
    PlanarDiagram,
    canonical,
    mirror,
    rotate90,
    tangle_sum,
)

__all__ = [
    "RationalTangle",
    "continued_fraction",
    "evaluate_cf",
    "rational_to_diagram",
    "integer_tangle",
    "ZERO",
    "INFINITY",
]

# one crossing, under-strand NW-SE, over-strand NE-SW
_ONE = PlanarDiagram(crossings=((1, 4, 3, 2),), boundary_ends=(1, 2, 3, 4))
ZERO = PlanarDiagram(boundary_ends=(1, 1, 2, 2))
INFINITY = PlanarDiagram(boundary_ends=(1, 2, 2, 1))


@dataclass(frozen=True)
class RationalTangle:
    """The rational tangle with fraction p/q; (1, 0) is the infinity tangle."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("denominator must be nonnegative")
        if self.q == 0 and self.p != 1:
            raise ValueError("the infinity tangle is written 1/0")
        if gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not reduced")

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "RationalTangle":
        f = Fraction(value)
        return cls(f.numerator, f.denominator)

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    @property
    def fraction(self) -> Fraction:
        if self.is_infinity:
            raise ValueError("the infinity tangle has no finite fraction")
        return Fraction(self.p, self.q)

    @property
    def cf(self) -> list[int]:
        return [] if self.is_infinity else continued_fraction(self.p, self.q)

    @property
    def crossing_number(self) -> int:
        return sum(abs(a) for a in self.cf)

    def __str__(self) -> str:
        if self.is_infinity:
            return "1/0"
        return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"


def continued_fraction(p: int, q: int) -> list[int]:
    """Expansion ``[a_1, ..., a_k]`` of p/q with all terms of one sign.

    >>> continued_fraction(8, 3)
    [2, 1, 2]
    >>> continued_fraction(1, 3)
    [3, 0]
    """
    if q < 1 or gcd(abs(p), q) != 1:
        raise ValueError(f"{p}/{q} is not a reduced fraction with positive denominator")
    if p < 0:
        return [-a for a in continued_fraction(-p, q)]
    terms = []
    while q:
        terms.append(p // q)
        p, q = q, p % q
    return terms[::-1]


def evaluate_cf(cf: list[int]) -> Fraction:
    """Exact value of an expansion under the convention above."""
    if not cf:
        raise ValueError("empty expansion")
    value = Fraction(cf[0])
    for a in cf[1:]:
        if value == 0:
            raise ZeroDivisionError("expansion passes through the infinity tangle")
        value = a + 1 / value
    return value


@lru_cache(maxsize=None)
def integer_tangle(n: int) -> PlanarDiagram:
    """``n`` horizontal half-twists; negative ``n`` gives the mirror."""
    if n == 0:
        return canonical(ZERO)
    if n < 0:
        return mirror(integer_tangle(-n))
    t = canonical(_ONE)
    for _ in range(n - 1):
        t = tangle_sum(t, _ONE)
    return t


def invert(t: PlanarDiagram) -> PlanarDiagram:
    """The tangle 1/T: rotate a quarter turn, then mirror."""
    return mirror(rotate90(t))


@lru_cache(maxsize=None)
def _from_cf(cf: tuple[int, ...]) -> PlanarDiagram:
    t = integer_tangle(cf[0])
    for a in cf[1:]:
        t = tangle_sum(integer_tangle(a), invert(t))
    return t


def rational_to_diagram(t: RationalTangle) -> PlanarDiagram:
    if t.is_infinity:
        return canonical(INFINITY)
    return _from_cf(tuple(t.cf))
