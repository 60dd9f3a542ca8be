"""Twisted doubles, the canonical cleft tables, and Schur multiplier orders."""

import numpy as np
import pytest

from qdouble.catalog import cyclic_group, dihedral_group
from qdouble.cochains import zero_cochain
from qdouble.double import (
    build_double,
    c_omega_center,
    canonical_cleft,
    double_identities,
    h2_order,
)


def test_canonical_cleft_trivial_omega(q8):
    c = canonical_cleft(q8, zero_cochain(q8, 3, 1))
    assert not np.any(c.gamma)
    assert not np.any(c.theta)
    # the action is conjugation
    assert c.act(2, 4) == 3  # i <| j = -i


def test_canonical_cleft_nontrivial_tables(ctx_z4):
    c = ctx_z4.c_omega
    assert np.any(c.theta)
    assert np.any(c.gamma)
    assert c.modulus == 64  # 16 * |Z_4|


def test_double_dimension_and_axioms(ctx_z2, ctx_z4, ctx_q8, ctx_q8_inflated):
    for ctx, dim in [(ctx_z2, 4), (ctx_z4, 16), (ctx_q8, 64), (ctx_q8_inflated, 64)]:
        assert ctx.dim == dim
        assert ctx.H.dim == dim
        assert ctx.report.ok


def test_double_identities_hold(ctx_z4, ctx_q8_inflated):
    assert double_identities(ctx_z4) == []
    assert double_identities(ctx_q8_inflated) == []


def test_h2_orders():
    assert h2_order(cyclic_group(1)) == 1
    assert h2_order(cyclic_group(2)) == 1
    assert h2_order(cyclic_group(4)) == 1
    assert h2_order(cyclic_group(6)) == 1


def test_h2_order_klein_four(v4):
    assert h2_order(v4) == 2


def test_h2_order_q8_and_d4(q8):
    assert h2_order(q8) == 1
    assert h2_order(dihedral_group(4)) == 2


def test_c_omega_center_q8(ctx_q8, ctx_q8_inflated, q8):
    # trivial Schur multiplier forces the c_omega-center to be Z(Q8)
    assert c_omega_center(ctx_q8).members == q8.center_members == (0, 1)
    assert c_omega_center(ctx_q8_inflated).members == (0, 1)


def test_c_omega_center_cyclic(ctx_z2, ctx_z4):
    assert c_omega_center(ctx_z2).members == (0, 1)
    assert c_omega_center(ctx_z4).members == (0, 1, 2, 3)


def test_r_matrix_shape(ctx_z2):
    R = ctx_z2.r_matrix()
    assert R.legs == 2
    assert len(R.terms) == ctx_z2.G.order ** 2


def test_build_double_rejects_non_cocycle(z2):
    bad = zero_cochain(z2, 3, 4)
    bad.values[1, 1, 1] = 1
    with pytest.raises(ValueError):
        build_double(z2, bad)
