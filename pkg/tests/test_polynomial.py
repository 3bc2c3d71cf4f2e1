import pytest
from hypothesis import given
from hypothesis import strategies as st

from laminar.polynomial import LaurentPolynomial, gaussian_abs

polys = st.dictionaries(st.integers(-12, 12), st.integers(-5, 5), max_size=5).map(LaurentPolynomial)


def test_zero_coefficients_dropped():
    p = LaurentPolynomial({2: 1, 4: 0}) - LaurentPolynomial({2: 1})
    assert p.is_zero() and p.pairs() == []


def test_monomial_inverse():
    a = LaurentPolynomial.monomial(-1, 3)
    assert a * a ** -1 == LaurentPolynomial.one()
    with pytest.raises(ValueError):
        (LaurentPolynomial.one() + a) ** -1


def test_format():
    p = LaurentPolynomial({-2: 1, -6: 1, -8: -1})
    assert p.format() == "t^-1 + t^-3 - t^-4"
    assert LaurentPolynomial({1: -1, -1: -1}).format() == "-t^(1/2) - t^(-1/2)"


def test_scale_exponents():
    p = LaurentPolynomial({4: 1})
    assert p.scale_exponents(-1, 4) == LaurentPolynomial({-1: 1})
    with pytest.raises(ValueError):
        LaurentPolynomial({2: 1}).scale_exponents(1, 4)


def test_evaluate_at_i_power():
    # x = -1 with x^(1/2) = i: (1 - x) -> 2
    assert (LaurentPolynomial.one() - LaurentPolynomial.monomial(1, 2)).evaluate_i_power() == (2, 0)
    assert gaussian_abs((0, -3)) == 3
    with pytest.raises(ValueError):
        gaussian_abs((1, 1))


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(polys, polys)
def test_evaluation_is_a_homomorphism(a, b):
    def ev(p):
        re, im = p.evaluate_i_power()
        return complex(re, im)
    assert ev(a * b) == ev(a) * ev(b)
