"""Exact integer Laurent polynomials with half-integer exponents.

Exponents are stored doubled, so the key ``e`` stands for ``x**(e/2)``.
"""

from __future__ import annotations

from typing import Iterable, Mapping

__all__ = ["LaurentPolynomial", "gaussian_abs"]


class LaurentPolynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def monomial(cls, coefficient: int = 1, doubled_exponent: int = 0) -> "LaurentPolynomial":
        return cls({doubled_exponent: coefficient})

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def pairs(self) -> list[tuple[int, int]]:
        """Sorted ``(doubled_exponent, coefficient)`` pairs; the serialized form."""
        return list(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.monomial(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            other = LaurentPolynomial.monomial(other)
        return LaurentPolynomial(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPolynomial":
        return (-self) + other

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()})
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPolynomial({e * n: c ** -n})
        result = LaurentPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_exponents(self, factor: int, divisor: int = 1) -> "LaurentPolynomial":
        """Substitute ``x -> x**(factor/divisor)``; exponents must stay integral."""
        out = {}
        for e, c in self._terms.items():
            num = e * factor
            if num % divisor:
                raise ValueError("substitution leaves a non-half-integer exponent")
            out[num // divisor] = c
        return LaurentPolynomial(out)

    def invert_variable(self) -> "LaurentPolynomial":
        return self.scale_exponents(-1)

    def evaluate_i_power(self) -> tuple[int, int]:
        """Value with ``x**(1/2) = i``, as a Gaussian integer ``(re, im)``."""
        re = im = 0
        for e, c in self._terms.items():
            r = e % 4
            if r == 0:
                re += c
            elif r == 1:
                im += c
            elif r == 2:
                re -= c
            else:
                im -= c
        return re, im

    def format(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = ""
            elif e == 2:
                mono = var
            elif e % 2 == 0:
                mono = f"{var}^{e // 2}"
            else:
                mono = f"{var}^({e}/2)"
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.format()})"


def gaussian_abs(z: tuple[int, int]) -> int:
    """|z| for a Gaussian integer known to lie on an axis."""
    re, im = z
    if re and im:
        raise ValueError(f"{z} is not on a coordinate axis")
    return abs(re) + abs(im)
