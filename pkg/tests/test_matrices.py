import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from galois_mds import GRMatrix, mat_det, mat_is_involutory, mat_is_mds_exhaustive, mat_is_mds_fast, mat_mul
from galois_mds.errors import ContextMismatchError, InvalidInputError
from galois_mds.matrices import EXHAUSTIVE, FAST, FAST_FALLBACK, first_singular_minor, iter_minors, minor_count

from conftest import GR4_16, GR9_81, leibniz_det, naive_is_mds, ring


def random_matrix(r, k, rng, units_only=False):
    pick = r.random_unit if units_only else r.random_element
    return GRMatrix(r, [[pick(rng) for _ in range(k)] for _ in range(k)])


def test_construction_and_access(gr9_81):
    a = GRMatrix(gr9_81, [[1, [0, 1]], [2, 3]])
    assert a.order == 2
    assert a[0, 1] == gr9_81.x
    assert a.transpose()[1, 0] == gr9_81.x
    assert not a.is_symmetric()
    assert GRMatrix.identity(gr9_81, 3).is_symmetric()
    with pytest.raises(InvalidInputError):
        GRMatrix(gr9_81, [[1, 2]])
    with pytest.raises(InvalidInputError):
        GRMatrix(gr9_81, [])


def test_mat_mul_and_mismatch(gr9_81, gr4_16):
    a = GRMatrix(gr9_81, [[1, 2], [3, 4]])
    b = GRMatrix(gr9_81, [[0, 1], [1, 0]])
    assert mat_mul(a, b) == GRMatrix(gr9_81, [[2, 1], [4, 3]])
    assert a @ GRMatrix.identity(gr9_81, 2) == a
    with pytest.raises(ContextMismatchError):
        mat_mul(a, GRMatrix(gr4_16, [[1, 0], [0, 1]]))
    with pytest.raises(InvalidInputError):
        mat_mul(a, GRMatrix.identity(gr9_81, 3))


@pytest.mark.parametrize("spec", [GR4_16, GR9_81])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_det_matches_leibniz(spec, k):
    r = ring(*spec)
    rng = random.Random(k)
    for _ in range(5):
        a = random_matrix(r, k, rng)
        assert mat_det(a) == leibniz_det(a.rows, r.zero, r.one)


def test_det_is_multiplicative(gr9_81):
    rng = random.Random(2)
    for _ in range(10):
        a, b = random_matrix(gr9_81, 3, rng), random_matrix(gr9_81, 3, rng)
        assert mat_det(a @ b) == mat_det(a) * mat_det(b)


def test_minor_enumeration_order_and_count():
    minors = list(iter_minors(3))
    assert minors[0] == ((0,), (0,))
    assert minors[8] == ((2,), (2,))
    assert minors[9] == ((0, 1), (0, 1))
    assert minors[-1] == ((0, 1, 2), (0, 1, 2))
    assert minor_count(7) == sum(comb(7, i) ** 2 for i in range(1, 8)) == 3431


@pytest.mark.parametrize("spec", [GR4_16, GR9_81])
def test_exhaustive_matches_naive_oracle(spec):
    r = ring(*spec)
    rng = random.Random(17)
    for k in (2, 3):
        for _ in range(25):
            a = random_matrix(r, k, rng, units_only=rng.random() < 0.7)
            expected = naive_is_mds(a.rows, r.zero, r.one, lambda d: d.is_unit())
            assert mat_is_mds_exhaustive(a).is_mds == expected


def test_first_singular_minor_reports_earliest(gr9_81):
    a = GRMatrix(gr9_81, [[1, 2], [2, 4]])
    assert first_singular_minor(a) == ((0, 1), (0, 1))
    b = GRMatrix(gr9_81, [[1, 3], [1, 1]])  # entry 3 is nilpotent
    verdict = mat_is_mds_exhaustive(b)
    assert not verdict and verdict.singular_minor == ((0,), (1,))
    assert verdict.method == EXHAUSTIVE


def test_fast_method_tags(gr9_81):
    units = GRMatrix(gr9_81, [[1, 1], [1, 2]])
    assert mat_is_mds_fast(units).method == FAST
    with_nilpotent = GRMatrix(gr9_81, [[1, 3], [1, 1]])
    verdict = mat_is_mds_fast(with_nilpotent)
    assert verdict.method == FAST_FALLBACK and not verdict


@given(st.integers(0, 10**6), st.integers(2, 4))
def test_fast_and_exhaustive_agree(seed, k):
    r = ring(*GR9_81)
    a = random_matrix(r, k, random.Random(seed), units_only=True)
    assert mat_is_mds_fast(a).is_mds == mat_is_mds_exhaustive(a).is_mds


def test_involutory(gr9_81):
    swap = GRMatrix(gr9_81, [[0, 1], [1, 0]])
    assert mat_is_involutory(swap)
    assert mat_is_involutory(GRMatrix.identity(gr9_81, 4))
    assert not mat_is_involutory(GRMatrix(gr9_81, [[1, 1], [0, 1]]))


def test_map_and_helpers(gr9_81):
    a = GRMatrix(gr9_81, [[1, 2], [2, 1]])
    assert a.map(lambda e: e * 2) == GRMatrix(gr9_81, [[2, 4], [4, 2]])
    assert a.distinct_entries() == {gr9_81(1), gr9_81(2)}
    assert a.all_units()
    assert a.submatrix([1], [0]) == GRMatrix(gr9_81, [[2]])
    assert len(a.reduce()) == 2
    assert hash(a) == hash(GRMatrix(gr9_81, [[1, 2], [2, 1]]))
