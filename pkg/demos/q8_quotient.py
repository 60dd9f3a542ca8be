"""Quotient of the (untwisted) double of the quaternion group by its center.

Q8 has trivial Schur multiplier, so the c-center of D(Q8) is forced to be
Z(Q8) = {1, -1}.  That subgroup is admissible; the quotient algebra has
dimension 32 over the Klein four-group Q8/Z(Q8).  There are four choices of
splitting nu, all giving the same (degenerate) pairing, and four twist
homomorphisms f relating the quotient theta tables by the exact f-law.
"""

import numpy as np

from qdouble import (
    Subgroup,
    build_double,
    build_quotient,
    character_homomorphisms,
    enumerate_nu,
    group_like_structure,
    independence_check,
    is_admissible,
    modularity_verdict,
    quaternion_group,
    twist_relation_holds,
    verify_quotient,
    zero_cochain,
)
from qdouble.catalog import Q8_LABELS
from qdouble.double import h2_order

Q = quaternion_group()
print("Q8 elements:", Q8_LABELS)
print("center:", [Q8_LABELS[z] for z in Q.center_members])
print("Schur multiplier order:", h2_order(Q))

ctx = build_double(Q, zero_cochain(Q, 3, 1))
print("D(Q8): dim =", ctx.dim, ", axiom suite", "ok" if ctx.report.ok else "FAILED")

data = group_like_structure(ctx.c_omega, ctx.H)
print("c-center:", [Q8_LABELS[z] for z in data.z_c.members])

A = Subgroup(Q, (0, 1))
cert = is_admissible(ctx.c_omega, ctx.omega, A, data)
print("A = Z(Q8) admissible:", bool(cert))

nus = enumerate_nu(ctx.c_omega, A, data)
print("splittings nu:", len(nus))

plain = build_quotient(ctx.c_omega, ctx.omega, A, cert)
print("quotient dim:", plain.algebra.dim, "over group of order", plain.cbar.F.order)
print("quotient verified:", bool(verify_quotient(plain, ctx.c_omega, plain.cbar)))

homs = character_homomorphisms(A, data.invariant_characters)
print("twist homomorphisms:", len(homs))
for k, f in enumerate(homs):
    twisted = build_quotient(ctx.c_omega, ctx.omega, A, cert, f=f)
    ok = twist_relation_holds(plain, twisted, f)
    print(f"  twist {k}: f(-1) = {f[1].values}, theta-bar obeys the f-law: {ok}")

rep = independence_check(ctx, A)
print("pairing independent of nu:", rep.identical)
verdict = modularity_verdict(ctx, A, nu=nus[0], cert=cert)
print("pairing exponents mod", verdict.pairing.modulus)
print(np.array(verdict.pairing.values))
print("verdict:", verdict.verdict(), "(the untwisted pairing is degenerate)")
