from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from partdecomp.errors import DeltaNotInvertible
from partdecomp.fields import (
    FieldElement,
    FieldSpec,
    PrimeField,
    QuadraticField,
    Rationals,
    is_prime,
    least_irreducible_quadratic,
)


def test_least_irreducible_quadratic():
    assert least_irreducible_quadratic(3) == (0, 1)
    assert least_irreducible_quadratic(5) == (0, 2)
    assert least_irreducible_quadratic(7) == (0, 1)


def test_reducible_polynomial_rejected():
    with pytest.raises(ValueError):
        QuadraticField(5, (0, 1))  # x^2 + 1 = (x - 2)(x + 2) over F_5
    with pytest.raises(ValueError):
        PrimeField(9)
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("p", [3, 5])
def test_quadratic_field_axioms(p):
    F = QuadraticField(p)
    els = list(F.elements())
    assert len(els) == p * p
    x = F.gen
    a, b = F.poly
    # x is a root of its minimal polynomial
    assert F.add(F.add(F.mul(x, x), F.mul(F.scalar(a), x)), F.scalar(b)) == 0
    for u, v in product(els, repeat=2):
        assert F.mul(u, v) == F.mul(v, u)
        assert F.sub(F.add(u, v), v) == u
    for u in els[1:]:
        assert F.mul(u, F.inv(u)) == 1
    for u, v, w in product(els[:: max(1, p - 2)], repeat=3):
        assert F.mul(u, F.add(v, w)) == F.add(F.mul(u, v), F.mul(u, w))
        assert F.mul(F.mul(u, v), w) == F.mul(u, F.mul(v, w))
    assert sum(1 for u in els if F.in_prime_field(u)) == p
    # the multiplicative group is cyclic of order p^2 - 1
    assert all(F.power(u, p * p - 1) == 1 for u in els[1:])


@st.composite
def matrix_pair(draw, p):
    m, k, n = (draw(st.integers(1, 6)) for _ in range(3))
    a = np.array(draw(st.lists(st.integers(0, p - 1), min_size=m * k, max_size=m * k))).reshape(m, k)
    b = np.array(draw(st.lists(st.integers(0, p - 1), min_size=k * n, max_size=k * n))).reshape(k, n)
    return a, b


@given(matrix_pair(7))
def test_prime_matmul_matches_integer_product(ab):
    a, b = ab
    F = PrimeField(7)
    assert np.array_equal(F.matmul(a, b), (a @ b) % 7)


@given(matrix_pair(9))
def test_quadratic_matmul_matches_entrywise(ab):
    a, b = ab
    F = QuadraticField(3)
    got = F.matmul(a, b)
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            acc = 0
            for k in range(a.shape[1]):
                acc = F.add(acc, F.mul(int(a[i, k]), int(b[k, j])))
            assert got[i, j] == acc


@given(matrix_pair(5))
def test_rational_matmul_matches_fractions(ab):
    a, b = ab
    Q = Rationals()
    qa = Q.array(a) / 3
    qb = Q.array(b) - Fraction(1, 2)
    got = Q.matmul(qa, qb)
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            assert got[i, j] == sum(qa[i, k] * qb[k, j] for k in range(a.shape[1]))


def test_field_spec_delta():
    fs = FieldSpec.prime(3, 5)
    assert fs.delta == 2 and fs.delta_int() == 2 and fs.delta_power(-1) == 2
    fs = FieldSpec.quadratic(3, "x")
    assert not fs.delta_in_prime_field() and fs.delta_int() is None
    assert fs.to_json() == {"p": 3, "ext": [0, 1]}
    assert FieldSpec.rationals(Fraction(1, 2)).delta_int() is None
    assert FieldSpec.rationals(4).delta_int() == 4
    zero = FieldSpec.prime(5, 0)
    assert zero.delta_power(0) == 1 and zero.delta_power(2) == 0
    with pytest.raises(DeltaNotInvertible):
        zero.delta_power(-1)
    with pytest.raises(ValueError):
        FieldSpec.prime(2, 1)


def test_field_element_wrapper():
    F = PrimeField(5)
    a = FieldElement(F, 3)
    assert a * 2 == 1
    assert a + 4 == 2
    assert 1 - a == 3
    assert a ** -1 == 2
    assert not FieldElement(F, 0)
    with pytest.raises(DeltaNotInvertible):
        FieldElement(F, 0) ** -1
