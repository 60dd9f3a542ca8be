"""Shared fixtures: small groups and prebuilt double contexts.

Expensive contexts are session-scoped; everything downstream treats them
as immutable.
"""

import pytest

from qdouble.catalog import cyclic_group, klein_four, quaternion_group
from qdouble.cleft import group_like_structure
from qdouble.cochains import cyclic_cocycle, inflate, zero_cochain
from qdouble.double import build_double
from qdouble.groups import quotient_with_section, subgroup_generated


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def z4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def v4():
    return klein_four()


@pytest.fixture(scope="session")
def q8():
    return quaternion_group()


@pytest.fixture(scope="session")
def ctx_z2(z2):
    """D^omega(Z_2) with the nontrivial cocycle."""
    return build_double(z2, cyclic_cocycle(2, 1))


@pytest.fixture(scope="session")
def ctx_z2_trivial(z2):
    return build_double(z2, zero_cochain(z2, 3, 1))


@pytest.fixture(scope="session")
def ctx_z4(z4):
    return build_double(z4, cyclic_cocycle(4, 1))


@pytest.fixture(scope="session")
def ctx_q8(q8):
    """D(Q8) with trivial cocycle."""
    return build_double(q8, zero_cochain(q8, 3, 1))


@pytest.fixture(scope="session")
def q8_inflated_cocycle(q8):
    qd = quotient_with_section(q8, subgroup_generated(q8, [2]))
    return inflate(cyclic_cocycle(2, 1), qd)


@pytest.fixture(scope="session")
def ctx_q8_inflated(q8, q8_inflated_cocycle):
    return build_double(q8, q8_inflated_cocycle)


@pytest.fixture(scope="session")
def data_z2(ctx_z2):
    return group_like_structure(ctx_z2.c_omega, ctx_z2.H)


@pytest.fixture(scope="session")
def data_q8(ctx_q8):
    return group_like_structure(ctx_q8.c_omega, ctx_q8.H)
