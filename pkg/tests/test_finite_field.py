import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from galois_mds.errors import InvalidInputError, NotAUnitError
from galois_mds.finite_field import (
    FiniteField,
    ff_det,
    ff_first_singular_minor,
    ff_matrix_all_minors_nonzero,
    is_irreducible,
    is_primitive,
)
from galois_mds.zmod_poly import ZMod, ZPoly

from conftest import leibniz_det, naive_polymulmod


def brute_irreducible(coeffs, p):
    """No monic factor of degree 1..n/2 divides the polynomial."""
    f = ZPoly(coeffs, ZMod(p))
    n = f.degree
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = ZPoly(list(tail) + [1], ZMod(p))
            if (f % g).is_zero():
                return False
    return True


def brute_order_of_x(coeffs, p):
    f = ZPoly(coeffs, ZMod(p)).monic()
    x = ZPoly([0, 1], ZMod(p))
    cur, k = x % f, 1
    while cur != ZPoly([1], ZMod(p)):
        cur, k = (cur * x) % f, k + 1
    return k


@pytest.mark.parametrize("p,deg", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_irreducibility_matches_brute_force(p, deg):
    for tail in itertools.product(range(p), repeat=deg):
        coeffs = list(tail) + [1]
        assert is_irreducible(ZPoly(coeffs, ZMod(p))) == brute_irreducible(coeffs, p), coeffs


@pytest.mark.parametrize("p,deg", [(2, 4), (3, 2), (3, 3)])
def test_primitivity_matches_order_of_x(p, deg):
    for tail in itertools.product(range(p), repeat=deg):
        coeffs = list(tail) + [1]
        if not brute_irreducible(coeffs, p):
            continue
        expected = brute_order_of_x(coeffs, p) == p**deg - 1
        assert is_primitive(ZPoly(coeffs, ZMod(p))) == expected, coeffs


def test_primitivity_known_cases():
    assert is_primitive(ZPoly([1, 1, 0, 0, 1], ZMod(2)))  # x^4 + x + 1
    assert not is_primitive(ZPoly([1, 1, 1, 1, 1], ZMod(2)))  # x^4+x^3+x^2+x+1, order 5
    with pytest.raises(InvalidInputError):
        is_primitive(ZPoly([1, 0, 1], ZMod(2)))


def test_field_rejects_reducible_and_normalizes():
    with pytest.raises(InvalidInputError):
        FiniteField(2, [1, 0, 1])
    field = FiniteField(3, [1, 2, 2])  # 2x^2 + 2x + 1 -> x^2 + x + 2
    assert field.modulus.coeffs == (2, 1, 1)
    assert field.order == 9


@pytest.fixture(scope="module")
def gf16():
    return FiniteField(2, [1, 1, 0, 0, 1])


def test_field_multiplication_matches_naive(gf16):
    f = gf16.modulus.coeffs
    for a in gf16.elements():
        for b in itertools.islice(gf16.elements(), 0, 16, 3):
            assert (a * b).coeffs == naive_polymulmod(a.coeffs, b.coeffs, f, 2)


def test_every_nonzero_element_inverts(gf16):
    for a in gf16.elements():
        if a:
            assert a * a.inverse() == gf16.one
    with pytest.raises(NotAUnitError):
        gf16.zero.inverse()


def test_generator_order(gf16):
    g = gf16.gen
    assert g**15 == gf16.one
    assert all(g**k != gf16.one for k in (3, 5))
    assert g**-1 == g.inverse()


@given(st.lists(st.integers(0, 4), min_size=2, max_size=2), st.lists(st.integers(0, 4), min_size=2, max_size=2))
def test_gf25_field_laws(a, b):
    field = FiniteField(5, [2, 0, 1])  # x^2 + 2
    a, b = field(a), field(b)
    assert a * b == b * a
    assert (a + b) - b == a
    if b:
        assert (a / b) * b == a


def test_ff_det_matches_leibniz(gf16):
    els = list(gf16.elements())
    rows = [[els[(3 * i + 5 * j + 1) % 16] for j in range(4)] for i in range(4)]
    assert ff_det(rows) == leibniz_det(rows, gf16.zero, gf16.one)


def test_ff_first_singular_minor(gf16):
    one, g = gf16.one, gf16.gen
    assert ff_first_singular_minor([[one, one], [one, one]]) == ((0, 1), (0, 1))
    assert ff_first_singular_minor([[one, gf16.zero], [one, one]]) == ((0,), (1,))
    assert ff_matrix_all_minors_nonzero([[one, one], [one, g]])
    with pytest.raises(InvalidInputError):
        ff_first_singular_minor([[one, one]])
