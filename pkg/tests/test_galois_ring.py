import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from galois_mds import GaloisRing, teichmuller_generator
from galois_mds.errors import (
    ContextMismatchError,
    InvalidInputError,
    NoGeneratorError,
    NotAUnitError,
    NotBasicIrreducibleError,
)
from galois_mds.galois_ring import NILPOTENT, UNIT

from conftest import GR4_256, GR8_64, GR9_81, GR9_729, naive_polymulmod, ring


def elements_of(spec):
    p, s, mod = spec
    m = len(mod) - 1
    q = p**s
    return st.lists(st.integers(0, q - 1), min_size=m, max_size=m).map(lambda c: ring(*spec)(c))


# -- construction --------------------------------------------------------------


def test_gr256_ring(gr4_256):
    assert gr4_256.m == 4 and gr4_256.cardinality == 256
    assert gr4_256.xi == gr4_256.x
    assert gr4_256.order(gr4_256.xi) == 15
    assert gr4_256.is_basic_primitive


def test_gr729_generator_is_teichmuller_lift_of_x(gr9_729):
    assert gr9_729.x.order() == 78
    assert gr9_729.xi == gr9_729.x + 6
    assert gr9_729.order(gr9_729.xi) == 26


def test_non_monic_modulus_is_normalized(gr9_81):
    assert gr9_81.modulus.coeffs == (8, 4, 1)
    assert gr9_81.raw_modulus == (4, 2, 5)
    assert gr9_81.xi == gr9_81.x
    assert gr9_81.order(gr9_81.xi) == 8
    assert gr9_81.xi**4 == gr9_81(8)


def test_degree_one_ring_is_zmod():
    z9 = ring(3, 2, (7, 1))
    assert z9.m == 1 and z9.cardinality == 9
    assert z9.xi == z9(8)
    assert [t.coeffs for t in z9.teichmuller_set()] == [(0,), (1,), (8,)]
    assert z9.padic_digits(z9(5)) == (2, 2)  # 5 = 8 + 3*8


def test_rejects_non_basic_irreducible():
    with pytest.raises(NotBasicIrreducibleError):
        GaloisRing(2, 2, [1, 0, 1])  # (x + 1)^2 mod 2
    with pytest.raises(InvalidInputError):
        GaloisRing(3, 2, [1, 1, 3])  # nilpotent leading coefficient
    with pytest.raises(InvalidInputError):
        GaloisRing(4, 1, [1, 1, 1])


def test_non_primitive_modulus_falls_back_to_search():
    r = GaloisRing(2, 2, [1, 1, 1, 1, 1])  # x^4+x^3+x^2+x+1: x has order 5 mod 2
    assert not r.is_basic_primitive
    with pytest.raises(NoGeneratorError):
        teichmuller_generator(r)
    assert r.order(r.xi) == 15
    assert len(set(r.teichmuller_set())) == 16


def test_descriptor_round_trip(gr9_81):
    desc = gr9_81.descriptor()
    assert desc == {"p": 3, "s": 2, "modulus": [4, 2, 5]}
    assert GaloisRing.from_descriptor(desc) == gr9_81


def test_context_mismatch(gr9_81, gr9_729):
    with pytest.raises(ContextMismatchError):
        gr9_81.one + gr9_729.one
    with pytest.raises(ContextMismatchError):
        gr9_81(gr9_729.one)


# -- arithmetic --------------------------------------------------------------------


@given(elements_of(GR9_729), elements_of(GR9_729))
def test_multiplication_matches_naive_polynomial_product(a, b):
    r = a.ring
    assert (a * b).coeffs == naive_polymulmod(a.coeffs, b.coeffs, r.modulus.coeffs, r.q)


@given(elements_of(GR8_64), elements_of(GR8_64), elements_of(GR8_64))
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a - a == a.ring.zero
    assert -a + a == 0


def test_inverse_matches_brute_force_search(gr4_16):
    elems = list(gr4_16.elements())
    for a in elems:
        partners = [b for b in elems if a * b == gr4_16.one]
        if a.is_unit():
            assert partners == [a.inverse()]
        else:
            assert partners == []
            with pytest.raises(NotAUnitError):
                a.inverse()


@given(elements_of(GR4_256))
def test_inverse_and_division(a):
    if a.is_unit():
        assert a * a.inverse() == 1
        assert a**-3 * a**3 == 1
        assert (a.ring.xi / a) * a == a.ring.xi


def test_unit_and_nilpotent_counts(gr4_16, gr4_256, gr9_729):
    elems = list(gr4_16.elements())
    assert sum(a.is_unit() for a in elems) == gr4_16.unit_count == 12
    assert sum(a.is_nilpotent() for a in elems) == gr4_16.nilpotent_count == 4
    assert gr4_256.unit_count == 240
    assert gr9_729.unit_count == 702


def test_nilpotents_are_nilpotent(gr9_81):
    for a in gr9_81.elements():
        if a.is_nilpotent():
            assert a.classify() == NILPOTENT
            assert a**gr9_81.s == 0
        else:
            assert a.classify() == UNIT


def test_random_samplers_respect_classes(gr9_81):
    rng = random.Random(7)
    for _ in range(50):
        assert gr9_81.random_unit(rng).is_unit()
        assert gr9_81.random_nilpotent(rng).is_nilpotent()


def test_order_matches_brute_force(gr4_16):
    for a in gr4_16.units():
        k, cur = 1, a
        while cur != gr4_16.one:
            cur, k = cur * a, k + 1
        assert a.order() == k
    with pytest.raises(NotAUnitError):
        gr4_16.zero.order()


# -- Teichmüller structure ------------------------------------------------------


@pytest.mark.parametrize("spec", [GR4_256, GR9_729, GR9_81, GR8_64])
def test_teichmuller_set_properties(spec):
    r = ring(*spec)
    teich = r.teichmuller_set()
    assert len(teich) == r.p**r.m
    assert len({t.reduce().coeffs for t in teich}) == r.p**r.m  # one per residue class
    n = r.teichmuller_order
    for t in teich:
        assert t ** (n + 1) == t
    assert set(a * b for a in teich[1:6] for b in teich[1:6]) <= set(teich)


def test_teichmuller_lift_and_index(gr9_729):
    rng = random.Random(3)
    for _ in range(30):
        a = gr9_729.random_element(rng)
        t = gr9_729.teichmuller_lift(a)
        assert t.reduce() == a.reduce()
        i = gr9_729.teichmuller_index(t)
        assert gr9_729.teichmuller_set()[i] == t
    assert gr9_729.teichmuller_exponent(gr9_729.xi_power(11)) == 11
    assert gr9_729.teichmuller_index(gr9_729(3)) is None


@given(elements_of(GR9_729))
def test_padic_decomposition_round_trip(a):
    d = a.ring.padic_decompose(a)
    assert len(d.indices) == a.ring.s
    assert d.recompose() == a
    assert all(t in a.ring.teichmuller_set() for t in d.digits)


# -- Frobenius ---------------------------------------------------------------------


def frobenius_oracle(a, i):
    """a_0 + a_1 xi^(p^i) + ... on xi-basis coordinates."""
    r = a.ring
    return r.from_xi_basis(r.to_xi_basis(a), xi_image=r.xi ** (r.p**i))


@pytest.mark.parametrize("spec", [GR4_256, GR9_729, GR9_81])
def test_frobenius_matches_xi_basis_definition(spec):
    r = ring(*spec)
    rng = random.Random(11)
    for _ in range(40):
        a = r.random_element(rng)
        for i in range(r.m):
            assert r.frobenius(a, i) == frobenius_oracle(a, i)


def test_frobenius_is_pth_power_in_the_field(gf16):
    for a in gf16.elements():
        assert a.frobenius() == a**2


@given(elements_of(GR4_256), elements_of(GR4_256))
def test_frobenius_is_a_ring_automorphism(a, b):
    r = a.ring
    assert r.frobenius(a + b) == r.frobenius(a) + r.frobenius(b)
    assert r.frobenius(a * b) == r.frobenius(a) * r.frobenius(b)
    assert r.frobenius(a, r.m) == a
    assert r.frobenius(r.frobenius(a, 1), 3) == a


def test_frobenius_fixes_base_constants(gr9_729):
    for c in range(9):
        assert gr9_729.frobenius(gr9_729(c)) == c


def test_xi_basis_round_trip_and_minimal_polynomial(gr9_729, gr9_81):
    for r in (gr9_729, gr9_81):
        h = r.xi_minimal_polynomial()
        assert h.degree == r.m and h.is_monic()
        assert r.evaluate(h, r.xi) == 0
        rng = random.Random(5)
        for _ in range(20):
            a = r.random_element(rng)
            assert r.from_xi_basis(r.to_xi_basis(a)) == a
