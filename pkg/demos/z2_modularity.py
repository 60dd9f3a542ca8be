"""Walk the smallest interesting example end to end: the twisted double of
Z_2 and the modularity of its Z_2 quotient.

The nontrivial 3-cocycle on Z_2 has omega(1,1,1) = -1.  The twisted double
D^omega(Z_2) is 4-dimensional; its only candidate subgroup A = Z_2 is
admissible, the quotient is 2-dimensional, and the simple-current pairing
on A is (1|1) = -1, which is nondegenerate: the verdict is MODULAR.
Dropping the twist degenerates the pairing and the verdict flips.
"""

import numpy as np

from qdouble import (
    Subgroup,
    build_double,
    cyclic_cocycle,
    cyclic_group,
    enumerate_nu,
    group_like_structure,
    is_admissible,
    modularity_verdict,
    simple_currents,
    zero_cochain,
)

G = cyclic_group(2)
omega = cyclic_cocycle(2, 1)
print("omega(1,1,1) exponent:", int(omega.values[1, 1, 1]), "mod", omega.modulus)

ctx = build_double(G, omega)
print("D^omega(Z_2): dim =", ctx.dim, ", working modulus =", ctx.c_omega.modulus)
print("axiom suite:", "ok" if ctx.report.ok else "FAILED", ctx.report.counts())

data = group_like_structure(ctx.c_omega, ctx.H)
print("group-likes:", len(data.group_likes), " central:", len(data.central_group_likes))

sc = simple_currents(ctx, data)
print("simple currents:", [u.label() for u in sc.currents])

A = Subgroup(G, (0, 1))
cert = is_admissible(ctx.c_omega, omega, A, data)
print("A = Z_2 admissible:", bool(cert))
nus = enumerate_nu(ctx.c_omega, A, data)
print("splittings nu:", len(nus))

report = modularity_verdict(ctx, A, nu=nus[0], cert=cert, sc=sc)
print("pairing exponents mod", report.pairing.modulus)
print(np.array(report.pairing.values))
print("verdict:", report.verdict())

print()
print("same subgroup, untwisted double:")
ctx0 = build_double(G, zero_cochain(G, 3, 1))
report0 = modularity_verdict(ctx0, Subgroup(G, (0, 1)))
print("pairing exponents mod", report0.pairing.modulus)
print(np.array(report0.pairing.values))
print("verdict:", report0.verdict())
