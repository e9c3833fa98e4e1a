import pytest
from hypothesis import given, strategies as st

from islandpoly.poly import (IntPoly, poly_sum, shifted_basis_decompose,
                             shifted_basis_recompose)
from islandpoly.utils import RangeError

coefficients = st.lists(st.integers(min_value=-50, max_value=50),
                        max_size=6)
polys = coefficients.map(lambda c: IntPoly(tuple(c)))


def test_trailing_zeros_are_stripped():
    assert IntPoly.of(1, 2, 0, 0) == IntPoly.of(1, 2)
    assert IntPoly.of(0, 0).is_zero()
    assert IntPoly().degree is None
    assert IntPoly.of(3, 0, 1).degree == 2


def test_binomials():
    assert IntPoly.one_plus_x(3) == IntPoly.of(1, 3, 3, 1)
    assert IntPoly.one_plus_x(0) == IntPoly.constant(1)
    with pytest.raises(RangeError):
        IntPoly.one_plus_x(-1)


def test_arithmetic():
    p = IntPoly.of(1, 1)
    assert p * p == IntPoly.of(1, 2, 1)
    assert p ** 3 == IntPoly.one_plus_x(3)
    assert 2 * p + 1 == IntPoly.of(3, 2)
    assert 1 - p == IntPoly.of(0, -1)
    assert p.shift(2) == IntPoly.monomial(1, 2) + IntPoly.monomial(1, 3)
    assert IntPoly.of(4, 9, 6, 1)(-1) == 0
    assert IntPoly.of(4, 9, 6, 1)[7] == 0


@pytest.mark.parametrize('p, text', [
    (IntPoly.of(4, 9, 6, 1), '4 + 9 x + 6 x^2 + x^3'),
    (IntPoly.of(0, -1, 0, 2), '-x + 2 x^3'),
    (IntPoly.of(-3), '-3'),
    (IntPoly(), '0'),
])
def test_str(p, text):
    assert str(p) == text


def test_parse():
    assert IntPoly.parse('4, 9,6 1') == IntPoly.of(4, 9, 6, 1)
    assert IntPoly.parse('') == IntPoly()
    with pytest.raises(ValueError):
        IntPoly.parse('1, x')


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p - q) + q == p


@given(polys, st.integers(min_value=-5, max_value=5))
def test_evaluation_is_a_homomorphism(p, x):
    q = IntPoly.of(2, -1, 1)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@given(coefficients)
def test_shifted_basis_inverts(c):
    p = IntPoly(tuple(c))
    n = len(p) + 1
    a = shifted_basis_decompose(p, n)
    assert len(a) == n
    assert shifted_basis_recompose(a) == p


def test_shifted_basis_of_a_tree():
    # 3(1+x)^2 + (1+x)^3
    assert shifted_basis_decompose(IntPoly.of(4, 9, 6, 1), 4) == (0, 0, 3, 1)
    with pytest.raises(RangeError):
        shifted_basis_decompose(IntPoly.of(4, 9, 6, 1), 3)


def test_poly_sum():
    assert poly_sum([IntPoly.of(1), IntPoly.of(0, 1), IntPoly.of(1)]) == \
        IntPoly.of(2, 1)
    assert poly_sum([]) == IntPoly()
