"""Cyclotomic-integer arithmetic."""

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdouble.scalars import CycloInt, cyclotomic_polynomial


def test_cyclotomic_polynomials_small():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_product_of_cyclotomics_is_x_to_m_minus_one():
    M = 12
    prod = [1]
    for d in range(1, M + 1):
        if M % d:
            continue
        phi = cyclotomic_polynomial(d)
        out = [0] * (len(prod) + len(phi) - 1)
        for i, a in enumerate(prod):
            for j, b in enumerate(phi):
                out[i + j] += a * b
        prod = out
    expect = [-1] + [0] * (M - 1) + [1]
    assert prod == expect


def test_roots_of_unity_relations():
    # zeta_4^2 = -1
    assert CycloInt.root(4, 2) == -CycloInt.one(4)
    # 1 + zeta_3 + zeta_3^2 = 0
    s = CycloInt.one(3) + CycloInt.root(3, 1) + CycloInt.root(3, 2)
    assert s.is_zero()
    # zeta_8^4 = -1 via multiplication
    z = CycloInt.root(8, 1)
    assert z * z * z * z == -CycloInt.one(8)


def test_equality_is_modulo_cyclotomic_relations():
    # zeta_6 = 1 + zeta_6 - 1 trivially, but also zeta_6^2 - zeta_6 + 1 = 0
    z = CycloInt.root(6, 1)
    assert z * z == z - CycloInt.one(6)


def test_scale_root_and_subtraction():
    a = CycloInt(8, {0: 2, 3: 1})
    b = a.scale_root(5)
    assert b == a * CycloInt.root(8, 5)
    assert (a - a).is_zero()


def test_as_single_root():
    assert CycloInt.root(12, 7).as_single_root() == 7
    assert (CycloInt.one(4) + CycloInt.one(4)).as_single_root() is None
    # a disguised root: -zeta_4 = zeta_4^3
    assert (-CycloInt.root(4, 1)).as_single_root() == 3


def test_distinct_roots_are_unequal():
    M = 8
    for i in range(M):
        for j in range(M):
            assert (CycloInt.root(M, i) == CycloInt.root(M, j)) == (i == j)


@settings(max_examples=50, deadline=None)
@given(
    st.sampled_from([3, 4, 6, 8, 12]),
    st.dictionaries(st.integers(0, 11), st.integers(-3, 3), max_size=4),
    st.dictionaries(st.integers(0, 11), st.integers(-3, 3), max_size=4),
)
def test_ring_axioms(M, t1, t2):
    a = CycloInt(M, t1)
    b = CycloInt(M, t2)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (a + b) == a * a + a * b
    assert (a - b) + b == a


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([4, 6, 8]), st.integers(0, 7), st.integers(0, 7))
def test_root_multiplication_adds_exponents(M, i, j):
    lhs = CycloInt.root(M, i) * CycloInt.root(M, j)
    assert lhs == CycloInt.root(M, (i + j) % M)
