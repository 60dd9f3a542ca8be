"""Admissibility decisions, certificates, quotients and twists."""

import numpy as np
import pytest

from qdouble.cleft import check_cleft_morphism, group_like_structure, trivial_cleft
from qdouble.groups import Subgroup, character_homomorphisms, validate_action
from qdouble.quotient import (
    FailureReason,
    brute_force_nu_search,
    build_quotient,
    enumerate_nu,
    is_admissible,
    twist_relation_holds,
    verify_quotient,
)


def _admit(ctx, members, data=None):
    A = Subgroup(ctx.G, members)
    if data is None:
        data = group_like_structure(ctx.c_omega, ctx.H)
    cert = is_admissible(ctx.c_omega, ctx.omega, A, data)
    return A, data, cert


def test_z2_full_subgroup_admissible(ctx_z2, data_z2):
    A, data, cert = _admit(ctx_z2, (0, 1), data_z2)
    assert cert
    assert cert.A.members == (0, 1)
    # certificate internals: s_a == nu_a and tau transposes t against nu
    for a in A.members:
        assert cert.s[a].values == cert.nu[a].values
    for g in ctx_z2.G.elements():
        for a in A.members:
            got = (int(cert.t[a][g]) + cert.tau[g][a]) % cert.modulus
            assert got == int(cert.nu[a].lift(cert.modulus)[g])


def test_nu_enumeration_matches_brute_force(ctx_z2, data_z2):
    A = Subgroup(ctx_z2.G, (0, 1))
    nus = enumerate_nu(ctx_z2.c_omega, A, data_z2)
    brute = brute_force_nu_search(data_z2, A)
    as_set = lambda lst: {
        tuple((a, nu[a].values) for a in sorted(nu)) for nu in lst
    }
    assert as_set(nus) == as_set(brute)
    assert len(nus) == 2  # torsor under Hom(Z_2, Z_2^)


def test_quotient_build_and_verification(ctx_z2, data_z2):
    A, data, cert = _admit(ctx_z2, (0, 1), data_z2)
    qb = build_quotient(ctx_z2.c_omega, ctx_z2.omega, A, cert)
    assert qb.algebra.dim == 2
    assert qb.cbar.F.order == 1
    assert qb.report.ok
    rep = verify_quotient(qb, ctx_z2.c_omega, qb.cbar)
    assert rep.ok, rep.failures


def test_identity_subgroup_quotient_is_isomorphic(ctx_z2, data_z2):
    A, data, cert = _admit(ctx_z2, (0,), data_z2)
    assert cert
    nus = enumerate_nu(ctx_z2.c_omega, A, data)
    assert len(nus) == 1
    qb = build_quotient(ctx_z2.c_omega, ctx_z2.omega, A, cert)
    assert qb.algebra.dim == ctx_z2.dim
    # chi vanishes, so the quotient tables literally equal the originals
    assert not np.any(qb.chi)
    assert np.array_equal(qb.cbar.gamma, ctx_z2.c_omega.gamma)
    assert np.array_equal(qb.cbar.theta, ctx_z2.c_omega.theta)


def test_not_central_failure(ctx_q8, data_q8):
    A, data, cert = _admit(ctx_q8, (0, 1, 2, 3), data_q8)  # <i> is not central
    assert not cert
    assert isinstance(cert, FailureReason)
    assert cert.kind == "NotCentral"
    assert cert.witness in (2, 3)


def test_acts_nontrivially_failure(z2, z3):
    act = validate_action(z2, z3, [[0, 1, 2], [0, 2, 1]])
    c = trivial_cleft(act)
    A = Subgroup(z2, (0, 1))
    cert = is_admissible(c, None, A)
    assert not cert
    assert cert.kind == "ActsNontrivially"
    assert cert.witness == 1


def test_extension_non_split_z4(ctx_z4):
    """Negative soundness: A = Z_4 inside D^omega(Z_4) at q = 1 fails at the
    splitting stage, confirmed by the exhaustive nu search."""
    data = group_like_structure(ctx_z4.c_omega, ctx_z4.H)
    A = Subgroup(ctx_z4.G, tuple(range(4)))
    cert = is_admissible(ctx_z4.c_omega, ctx_z4.omega, A, data)
    assert not cert
    assert cert.kind == "ExtensionNonSplit"
    assert brute_force_nu_search(data, A) == []
    assert enumerate_nu(ctx_z4.c_omega, A, data) == []


def test_z4_order_two_subgroup_admissible(ctx_z4):
    A, data, cert = _admit(ctx_z4, (0, 2))
    assert cert
    qb = build_quotient(ctx_z4.c_omega, ctx_z4.omega, A, cert)
    assert qb.algebra.dim == 8
    assert verify_quotient(qb, ctx_z4.c_omega, qb.cbar).ok


def test_q8_center_quotient(ctx_q8, data_q8):
    A, data, cert = _admit(ctx_q8, (0, 1), data_q8)
    assert cert
    nus = enumerate_nu(ctx_q8.c_omega, A, data)
    assert len(nus) == 4  # Hom(Z_2, V_4^) has four elements
    qb = build_quotient(ctx_q8.c_omega, ctx_q8.omega, A, cert)
    assert qb.algebra.dim == 32
    assert qb.cbar.F.order == 4
    assert verify_quotient(qb, ctx_q8.c_omega, qb.cbar).ok


def test_q8_inflated_quotient(ctx_q8_inflated):
    A, data, cert = _admit(ctx_q8_inflated, (0, 1))
    assert cert
    qb = build_quotient(ctx_q8_inflated.c_omega, ctx_q8_inflated.omega, A, cert)
    assert qb.algebra.dim == 32
    assert verify_quotient(qb, ctx_q8_inflated.c_omega, qb.cbar).ok


def test_twist_sweep_q8(ctx_q8, data_q8):
    """Quotients built with every twist homomorphism f differ from the plain
    one exactly by the f-twist law, and all remain graded quotients."""
    c = ctx_q8.c_omega
    A, data, cert = _admit(ctx_q8, (0, 1), data_q8)
    plain = build_quotient(c, ctx_q8.omega, A, cert)
    homs = character_homomorphisms(A, data.invariant_characters)
    assert len(homs) == 4
    for f in homs:
        twisted = build_quotient(c, ctx_q8.omega, A, cert, f=f)
        assert verify_quotient(twisted, c, twisted.cbar).ok
        assert twist_relation_holds(plain, twisted, f)


def test_twist_sweep_q8_inflated(ctx_q8_inflated):
    c = ctx_q8_inflated.c_omega
    A, data, cert = _admit(ctx_q8_inflated, (0, 1))
    plain = build_quotient(c, ctx_q8_inflated.omega, A, cert)
    for f in character_homomorphisms(A, data.invariant_characters):
        twisted = build_quotient(c, ctx_q8_inflated.omega, A, cert, f=f)
        assert twist_relation_holds(plain, twisted, f)
        assert verify_quotient(twisted, c, twisted.cbar).ok


def test_wrong_chi_fails_morphism_check(ctx_z2, data_z2):
    A, data, cert = _admit(ctx_z2, (0, 1), data_z2)
    qb = build_quotient(ctx_z2.c_omega, ctx_z2.omega, A, cert)
    bad_chi = qb.chi.copy()
    bad_chi[1, 1] = (bad_chi[1, 1] + 1) % ctx_z2.c_omega.modulus
    rep = check_cleft_morphism(bad_chi, qb.r.proj, ctx_z2.c_omega, qb.cbar)
    assert not rep.ok


def test_omega_mismatch_rejected(ctx_z2, ctx_z2_trivial):
    A = Subgroup(ctx_z2.G, (0, 1))
    with pytest.raises(ValueError):
        is_admissible(ctx_z2.c_omega, ctx_z2_trivial.omega, A)
